#pragma once

/**
 * @file algebraic_point.hpp
 * @brief Plane points with real-algebraic coordinates.
 *
 * A point stores one primitive algebraic number alpha together with both
 * coordinates as rational functions of alpha. That keeps the coordinates
 * correlated, so any polynomial sign query at the point reduces to an exact
 * univariate sign evaluation at alpha.
 */

#include "clband/real_algebraic.hpp"

namespace clband {

struct RatFunc {
    Poly num;
    Poly den;  // must not vanish at the primitive element

    static RatFunc constant(const Rational& v) {
        return {Poly::constant(v), Poly::constant(Rational(1))};
    }
    static RatFunc identity() {
        return {Poly({Rational(0), Rational(1)}), Poly::constant(Rational(1))};
    }
};

class AlgebraicPoint {
  public:
    AlgebraicPoint() : AlgebraicPoint(Rational(0), Rational(0)) {}
    AlgebraicPoint(Rational x, Rational y);

    /// General constructor; standalone coordinate representations are derived.
    static AlgebraicPoint make(RealAlgebraic alpha, RatFunc x, RatFunc y);

    /// (x, y) with x rational and y an arbitrary algebraic number; primitive = y.
    static AlgebraicPoint from_rational_x(const Rational& x, const RealAlgebraic& y);

    bool is_rational() const { return alpha_.is_rational(); }
    const RealAlgebraic& x_alg() const { return xa_; }
    const RealAlgebraic& y_alg() const { return ya_; }
    const RealAlgebraic& primitive() const { return alpha_; }
    const RatFunc& x_fn() const { return x_; }
    const RatFunc& y_fn() const { return y_; }

    /// Exact sign of a bivariate quadratic sum_{i+j<=2} c_ij x^i y^j at the point.
    /// Coefficient order: [x^2, xy, y^2, x, y, 1].
    int sign_of_quadratic(const Rational& A, const Rational& B, const Rational& C,
                          const Rational& D, const Rational& E, const Rational& F) const;

    /// Rational box containing the point; tightens as depth grows.
    std::pair<QInterval, QInterval> enclosure(int depth) const;

    std::pair<double, double> approx() const;

    /// Point reflected through a rational center: (2cx - x, 2cy - y).
    AlgebraicPoint reflected_through(const Rational& cx, const Rational& cy) const;

    /// Image under a rational affine map (a11 x + a12 y + b1, a21 x + a22 y + b2).
    AlgebraicPoint affine_image(const Rational& a11, const Rational& a12, const Rational& b1,
                                const Rational& a21, const Rational& a22,
                                const Rational& b2) const;

  private:
    RealAlgebraic alpha_;
    RatFunc x_, y_;
    RealAlgebraic xa_, ya_;
};

/// Exact coordinatewise comparison: lexicographic (x, then y).
int compare_points(const AlgebraicPoint& p, const AlgebraicPoint& q);
inline bool points_equal(const AlgebraicPoint& p, const AlgebraicPoint& q) {
    return compare_points(p, q) == 0;
}

}  // namespace clband
