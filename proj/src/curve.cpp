#include "clband/curve.hpp"

namespace clband {

Curve Curve::line(Rational a, Rational b, Rational c, std::string label) {
    Curve k;
    k.kind = CurveKind::Line;
    k.D = std::move(a);
    k.E = std::move(b);
    k.F = std::move(c);
    k.label = std::move(label);
    return k;
}

Curve Curve::conic(Rational A, Rational B, Rational C, Rational D, Rational E, Rational F,
                   std::string label) {
    Curve k;
    k.kind = CurveKind::Conic;
    k.A = std::move(A);
    k.B = std::move(B);
    k.C = std::move(C);
    k.D = std::move(D);
    k.E = std::move(E);
    k.F = std::move(F);
    k.label = std::move(label);
    return k;
}

Rational Curve::eval(const Rational& x, const Rational& y) const {
    return A * x * x + B * x * y + C * y * y + D * x + E * y + F;
}

int Curve::sign_at(const AlgebraicPoint& p) const { return p.sign_of_quadratic(A, B, C, D, E, F); }

Poly Curve::disc_y() const {
    Poly c1 = yc1();
    return c1 * c1 - (4 * C) * yc0();
}

Poly Curve::disc_x() const {
    Poly c1 = xc1();
    return c1 * c1 - (4 * A) * xc0();
}

std::array<Rational, 6> Curve::fx_coeffs() const {
    return {Rational(0), Rational(0), Rational(0), 2 * A, B, D};
}

std::array<Rational, 6> Curve::fy_coeffs() const {
    return {Rational(0), Rational(0), Rational(0), B, 2 * C, E};
}

Curve Curve::sheared(const Rational& t) const {
    Curve k = *this;
    // f(x+ty, y): A x^2 + (2At+B) xy + (At^2+Bt+C) y^2 + D x + (Dt+E) y + F
    k.B = 2 * A * t + B;
    k.C = A * t * t + B * t + C;
    k.E = D * t + E;
    return k;
}

std::pair<Rational, Rational> Curve::center() const {
    // solve fx = fy = 0: [2A B; B 2C] [x y]^T = [-D -E]^T
    Rational det = 4 * A * C - B * B;
    if (det == 0) throw std::domain_error("center: conic has no unique center");
    Rational cx = (-2 * C * D + B * E) / det;
    Rational cy = (-2 * A * E + B * D) / det;
    return {cx, cy};
}

std::array<Int, 6> Curve::normalized_key() const {
    std::array<Rational, 6> v{A, B, C, D, E, F};
    Int d(1);
    for (auto& q : v) d = boost::multiprecision::lcm(d, den(q));
    std::array<Int, 6> n;
    Int g(0);
    for (size_t i = 0; i < 6; ++i) {
        n[i] = num(v[i]) * (d / den(v[i]));
        g = boost::multiprecision::gcd(g, n[i]);
    }
    if (g == 0) g = 1;
    int flip = 1;
    for (const auto& x : n) {
        if (x != 0) {
            flip = x < 0 ? -1 : 1;
            break;
        }
    }
    for (auto& x : n) x = x * flip / g;
    return n;
}

ConicClass Curve::conic_class() const {
    if (kind != CurveKind::Conic) return ConicClass::NotConic;
    Rational disc = B * B - 4 * A * C;
    if (disc < 0) return ConicClass::Ellipse;
    if (disc > 0) return ConicClass::Hyperbola;
    return ConicClass::Parabola;
}

bool same_locus(const Curve& a, const Curve& b) {
    if (a.kind != b.kind) return false;
    return a.normalized_key() == b.normalized_key();
}

}  // namespace clband
