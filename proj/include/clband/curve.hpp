#pragma once

/**
 * @file curve.hpp
 * @brief Lines and conics with rational coefficients, stored uniformly as
 *        bivariate quadratics f = A x^2 + B xy + C y^2 + D x + E y + F.
 */

#include "clband/algebraic_point.hpp"

#include <array>
#include <string>

namespace clband {

enum class CurveKind { Line, Conic };

enum class ConicClass { NotConic, Ellipse, Parabola, Hyperbola };

struct Curve {
    CurveKind kind = CurveKind::Line;
    Rational A, B, C, D, E, F;  // lines: A = B = C = 0, (D,E) != (0,0)
    std::string label;

    static Curve line(Rational a, Rational b, Rational c, std::string label = "");
    static Curve conic(Rational A, Rational B, Rational C, Rational D, Rational E, Rational F,
                       std::string label = "");

    Rational eval(const Rational& x, const Rational& y) const;
    int sign_at(const AlgebraicPoint& p) const;

    // View as a quadratic in y with Q[x] coefficients: yc2*y^2 + yc1(x)*y + yc0(x).
    Rational yc2() const { return C; }
    Poly yc1() const { return Poly({E, B}); }
    Poly yc0() const { return Poly({F, D, A}); }
    /// Discriminant in y as a polynomial in x (meaningful when C != 0).
    Poly disc_y() const;

    // Same with x and y swapped.
    Rational xc2() const { return A; }
    Poly xc1() const { return Poly({D, B}); }
    Poly xc0() const { return Poly({F, E, C}); }
    Poly disc_x() const;

    /// Gradient components as quadratics [x^2,xy,y^2,x,y,1]: fx = 2Ax + By + D, fy = Bx + 2Cy + E.
    std::array<Rational, 6> fx_coeffs() const;
    std::array<Rational, 6> fy_coeffs() const;

    bool is_vertical_line() const { return kind == CurveKind::Line && E == 0; }

    /// Substitution x -> x + t*y.
    Curve sheared(const Rational& t) const;

    /// For ellipses (and any central conic): the rational center.
    std::pair<Rational, Rational> center() const;

    /// Canonical integer-primitive coefficient tuple, for duplicate detection.
    std::array<Int, 6> normalized_key() const;

    ConicClass conic_class() const;  // for validated conics

    /// True if the quadratic form is definite and f has that sign inside (ovals).
    bool is_oval() const { return kind == CurveKind::Conic && conic_class() == ConicClass::Ellipse; }
};

bool same_locus(const Curve& a, const Curve& b);

}  // namespace clband
