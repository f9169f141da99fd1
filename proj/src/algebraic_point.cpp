#include "clband/algebraic_point.hpp"

namespace clband {

AlgebraicPoint::AlgebraicPoint(Rational x, Rational y)
    : alpha_(Rational(0)),
      x_(RatFunc::constant(x)),
      y_(RatFunc::constant(y)),
      xa_(x),
      ya_(y) {}

AlgebraicPoint AlgebraicPoint::make(RealAlgebraic alpha, RatFunc x, RatFunc y) {
    AlgebraicPoint p;
    p.xa_ = eval_ratfunc(alpha, x.num, x.den);
    p.ya_ = eval_ratfunc(alpha, y.num, y.den);
    p.alpha_ = std::move(alpha);
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    if (p.xa_.is_rational() && p.ya_.is_rational()) {
        // collapse to the rational fast path
        return AlgebraicPoint(p.xa_.rational_value(), p.ya_.rational_value());
    }
    return p;
}

AlgebraicPoint AlgebraicPoint::from_rational_x(const Rational& x, const RealAlgebraic& y) {
    if (y.is_rational()) return AlgebraicPoint(x, y.rational_value());
    AlgebraicPoint p;
    p.alpha_ = y;
    p.x_ = RatFunc::constant(x);
    p.y_ = RatFunc::identity();
    p.xa_ = RealAlgebraic(x);
    p.ya_ = y;
    return p;
}

int AlgebraicPoint::sign_of_quadratic(const Rational& A, const Rational& B, const Rational& C,
                                      const Rational& D, const Rational& E,
                                      const Rational& F) const {
    // f(X/Dx, Y/Dy) * Dx^2 * Dy^2, a univariate polynomial in the primitive element.
    const Poly &X = x_.num, &Dx = x_.den, &Y = y_.num, &Dy = y_.den;
    Poly Dx2 = Dx * Dx, Dy2 = Dy * Dy;
    Poly n = A * (X * X * Dy2) + B * (X * Y * Dx * Dy) + C * (Y * Y * Dx2) +
             D * (X * Dx * Dy2) + E * (Y * Dx2 * Dy) + F * (Dx2 * Dy2);
    return sign_at_alg(n, alpha_);
}

std::pair<QInterval, QInterval> AlgebraicPoint::enclosure(int depth) const {
    RealAlgebraic a = alpha_;
    for (int i = 0; i < 4 * (depth + 1); ++i) a = a.refined();
    auto eval = [&](const RatFunc& f) {
        RealAlgebraic x = a;
        for (int i = 0; i < 100000; ++i) {
            QInterval d = f.den.eval_interval(x.interval());
            if (d.definite_sign() != 0) return f.num.eval_interval(x.interval()) / d;
            x = x.refined();
        }
        throw std::logic_error("AlgebraicPoint::enclosure: denominator refinement stalled");
    };
    return {eval(x_), eval(y_)};
}

std::pair<double, double> AlgebraicPoint::approx() const {
    return {xa_.approx(), ya_.approx()};
}

AlgebraicPoint AlgebraicPoint::reflected_through(const Rational& cx, const Rational& cy) const {
    RatFunc rx{Rational(2) * cx * x_.den - x_.num, x_.den};
    RatFunc ry{Rational(2) * cy * y_.den - y_.num, y_.den};
    return make(alpha_, std::move(rx), std::move(ry));
}

AlgebraicPoint AlgebraicPoint::affine_image(const Rational& a11, const Rational& a12,
                                            const Rational& b1, const Rational& a21,
                                            const Rational& a22, const Rational& b2) const {
    Poly dd = x_.den * y_.den;
    Poly nx = a11 * (x_.num * y_.den) + a12 * (y_.num * x_.den) + b1 * dd;
    Poly ny = a21 * (x_.num * y_.den) + a22 * (y_.num * x_.den) + b2 * dd;
    return make(alpha_, RatFunc{nx, dd}, RatFunc{ny, dd});
}

int compare_points(const AlgebraicPoint& p, const AlgebraicPoint& q) {
    int cx = compare(p.x_alg(), q.x_alg());
    if (cx != 0) return cx;
    return compare(p.y_alg(), q.y_alg());
}

}  // namespace clband
