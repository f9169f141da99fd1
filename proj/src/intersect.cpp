#include "clband/intersect.hpp"

#include <algorithm>

namespace clband {

namespace {

struct Lin {
    Rational p, q, r;  // p x + q y + r
};

// product of two linear forms as quadratic coefficients [x^2, xy, y^2, x, y, 1]
std::array<Rational, 6> lin_product(const Lin& a, const Lin& b) {
    return {a.p * b.p, a.p * b.q + a.q * b.p, a.q * b.q,
            a.p * b.r + a.r * b.p, a.q * b.r + a.r * b.q, a.r * b.r};
}

Lin grad_x(const Curve& c) { return {2 * c.A, c.B, c.D}; }
Lin grad_y(const Curve& c) { return {c.B, 2 * c.C, c.E}; }

void check_on_both(const Curve& c1, const Curve& c2, const AlgebraicPoint& p) {
    if (c1.sign_at(p) != 0 || c2.sign_at(p) != 0)
        throw std::logic_error("intersect: computed point is not on both curves");
}

std::vector<IntersectionRecord> intersect_lines(const Curve& l1, const Curve& l2) {
    Rational det = l1.D * l2.E - l2.D * l1.E;
    if (det == 0) {
        if (same_locus(l1, l2)) throw IdenticalCurvesError();
        return {};
    }
    Rational x = (l1.E * l2.F - l2.E * l1.F) / det;
    Rational y = (l2.D * l1.F - l1.D * l2.F) / det;
    IntersectionRecord rec;
    rec.point = AlgebraicPoint(x, y);
    rec.multiplicity = 1;
    rec.tangential = false;
    return {rec};
}

std::vector<IntersectionRecord> intersect_line_conic(const Curve& line, const Curve& conic) {
    // parameterize the line as p0 + s*dir with dir = (-b, a)
    Rational p0x, p0y;
    if (line.E != 0) {
        p0x = 0;
        p0y = -line.F / line.E;
    } else {
        p0x = -line.F / line.D;
        p0y = 0;
    }
    Poly X({p0x, -line.E});
    Poly Y({p0y, line.D});
    Poly q = conic.A * (X * X) + conic.B * (X * Y) + conic.C * (Y * Y) + conic.D * X +
             conic.E * Y + Poly::constant(conic.F);
    if (q.is_zero()) throw IdenticalCurvesError();
    std::vector<IntersectionRecord> out;
    for (const auto& [root, mult] : isolate_real_roots(q)) {
        IntersectionRecord rec;
        rec.point = AlgebraicPoint::make(root, RatFunc{X, Poly::constant(Rational(1))},
                                         RatFunc{Y, Poly::constant(Rational(1))});
        rec.multiplicity = mult;
        rec.tangential = mult >= 2;
        check_on_both(line, conic, rec.point);
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<IntersectionRecord> intersect_conics(const Curve& c1, const Curve& c2) {
    // shear x -> x + t*y until every intersection point (real or complex) has
    // its own x-coordinate; certified by u(root) != 0 below
    for (int trial = 0; trial < 41; ++trial) {
        int k = (trial + 1) / 2;
        Rational t(trial % 2 == 1 ? k : -k);
        Curve s1 = c1.sheared(t), s2 = c2.sheared(t);
        if (s1.C == 0 || s2.C == 0) continue;  // keep the y^2 leads invertible

        Rational a2 = s1.C, b2 = s2.C;
        Poly a1 = s1.yc1(), a0 = s1.yc0();
        Poly b1 = s2.yc1(), b0 = s2.yc0();
        Poly r1 = a2 * b0 - b2 * a0;
        Poly res = r1 * r1 - (a1 * b0 - a0 * b1) * (a2 * b1 - a1 * b2);
        if (res.is_zero()) throw IdenticalCurvesError();

        Poly u = a2 * b1 - b2 * a1;  // linear subresultant coefficient
        Poly v = a2 * b0 - b2 * a0;

        std::vector<IntersectionRecord> out;
        bool good = true;
        int total = 0;
        for (const auto& [root, mult] : isolate_real_roots(res)) {
            if (sign_at_alg(u, root) == 0) {  // two common points share this x: reshear
                good = false;
                break;
            }
            // unique common point above root: y = -v/u, unsheared x = root + t*y
            Poly xnum = Poly({Rational(0), Rational(1)}) * u - t * v;
            IntersectionRecord rec;
            rec.point = AlgebraicPoint::make(root, RatFunc{xnum, u}, RatFunc{-v, u});
            rec.multiplicity = mult;
            rec.tangential = mult >= 2;
            check_on_both(c1, c2, rec.point);
            total += mult;
            out.push_back(std::move(rec));
        }
        if (!good) continue;
        if (total > 4) throw std::logic_error("intersect: Bezout bound exceeded");
        return out;
    }
    throw std::logic_error("intersect: no separating shear found");
}

}  // namespace

bool gradients_parallel(const Curve& c1, const Curve& c2, const AlgebraicPoint& p) {
    auto j1 = lin_product(grad_x(c1), grad_y(c2));
    auto j2 = lin_product(grad_y(c1), grad_x(c2));
    std::array<Rational, 6> j;
    for (size_t i = 0; i < 6; ++i) j[i] = j1[i] - j2[i];
    return p.sign_of_quadratic(j[0], j[1], j[2], j[3], j[4], j[5]) == 0;
}

std::vector<IntersectionRecord> intersect(const Curve& c1, const Curve& c2) {
    if (same_locus(c1, c2)) throw IdenticalCurvesError();
    std::vector<IntersectionRecord> out;
    if (c1.kind == CurveKind::Line && c2.kind == CurveKind::Line)
        out = intersect_lines(c1, c2);
    else if (c1.kind == CurveKind::Line)
        out = intersect_line_conic(c1, c2);
    else if (c2.kind == CurveKind::Line)
        out = intersect_line_conic(c2, c1);
    else
        out = intersect_conics(c1, c2);

    for (const auto& rec : out) {
        bool parallel = gradients_parallel(c1, c2, rec.point);
        if (parallel != rec.tangential)
            throw std::logic_error("intersect: multiplicity/tangency disagreement");
    }
    std::sort(out.begin(), out.end(), [](const IntersectionRecord& a, const IntersectionRecord& b) {
        return compare_points(a.point, b.point) < 0;
    });
    return out;
}

}  // namespace clband
