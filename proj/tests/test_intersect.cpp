#include "clband/intersect.hpp"

#include <doctest.h>

#include <functional>
#include <random>

#include "test_support.hpp"

using namespace clband;

namespace {

// Independent resultant oracle: Sylvester matrix of two quadratics in y with
// Q[x] coefficients, expanded by minors.
Poly sylvester_resultant(const Curve& f, const Curve& g) {
    std::vector<std::vector<Poly>> m(4, std::vector<Poly>(4, Poly()));
    Poly a2 = Poly::constant(f.yc2()), a1 = f.yc1(), a0 = f.yc0();
    Poly b2 = Poly::constant(g.yc2()), b1 = g.yc1(), b0 = g.yc0();
    m[0] = {a2, a1, a0, Poly()};
    m[1] = {Poly(), a2, a1, a0};
    m[2] = {b2, b1, b0, Poly()};
    m[3] = {Poly(), b2, b1, b0};
    // 4x4 determinant by cofactor expansion
    std::function<Poly(std::vector<std::vector<Poly>>)> det =
        [&](std::vector<std::vector<Poly>> mm) -> Poly {
        size_t n = mm.size();
        if (n == 1) return mm[0][0];
        Poly out;
        for (size_t c = 0; c < n; ++c) {
            if (mm[0][c].is_zero()) continue;
            std::vector<std::vector<Poly>> sub;
            for (size_t r = 1; r < n; ++r) {
                std::vector<Poly> row;
                for (size_t cc = 0; cc < n; ++cc)
                    if (cc != c) row.push_back(mm[r][cc]);
                sub.push_back(row);
            }
            Poly term = mm[0][c] * det(sub);
            out = (c % 2 == 0) ? out + term : out - term;
        }
        return out;
    };
    return det(m);
}

}  // namespace

TEST_CASE("line and circle: two transversal points") {
    Curve line = Curve::line(0, 1, 0);
    Curve circle = Curve::conic(1, 0, 1, 0, 0, -1);
    auto recs = intersect(line, circle);
    REQUIRE(recs.size() == 2);
    CHECK(points_equal(recs[0].point, AlgebraicPoint(Rational(-1), Rational(0))));
    CHECK(points_equal(recs[1].point, AlgebraicPoint(Rational(1), Rational(0))));
    for (const auto& r : recs) {
        CHECK(r.multiplicity == 1);
        CHECK(!r.tangential);
    }
}

TEST_CASE("line and tangent circle: one double point") {
    Curve line = Curve::line(0, 1, 0);
    Curve circle = Curve::conic(1, 0, 1, 0, -2, 0);  // x^2 + (y-1)^2 - 1
    auto recs = intersect(line, circle);
    REQUIRE(recs.size() == 1);
    CHECK(points_equal(recs[0].point, AlgebraicPoint(Rational(0), Rational(0))));
    CHECK(recs[0].multiplicity == 2);
    CHECK(recs[0].tangential);
    CHECK(gradients_parallel(line, circle, recs[0].point));
}

TEST_CASE("circle and ellipse tangent at two points, each of multiplicity two") {
    Curve circle = Curve::conic(1, 0, 1, 0, 0, -1);
    Curve ellipse = Curve::conic(1, 0, 4, 0, 0, -4);  // x^2/4 + y^2 = 1 scaled
    // oracle: eliminating x gives a resultant in y with double roots at +-1
    Curve cx = Curve::conic(circle.C, circle.B, circle.A, circle.E, circle.D, circle.F);
    Curve ex = Curve::conic(ellipse.C, ellipse.B, ellipse.A, ellipse.E, ellipse.D, ellipse.F);
    Poly res_y = sylvester_resultant(cx, ex);  // swap x<->y, eliminate the new y
    auto roots = isolate_real_roots(res_y);
    REQUIRE(roots.size() == 2);
    CHECK(compare(roots[0].root, Rational(-1)) == 0);
    CHECK(compare(roots[1].root, Rational(1)) == 0);
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].multiplicity == 2);

    auto recs = intersect(circle, ellipse);
    REQUIRE(recs.size() == 2);
    CHECK(points_equal(recs[0].point, AlgebraicPoint(Rational(0), Rational(-1))));
    CHECK(points_equal(recs[1].point, AlgebraicPoint(Rational(0), Rational(1))));
    for (const auto& r : recs) {
        CHECK(r.multiplicity == 2);
        CHECK(r.tangential);
    }
}

TEST_CASE("two circles crossing at algebraic points") {
    Curve c1 = Curve::conic(1, 0, 1, 0, 0, -1);
    Curve c2 = Curve::conic(1, 0, 1, -1, 0, -1);  // shifted: x^2+y^2-x-1
    auto recs = intersect(c1, c2);
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) {
        CHECK(r.multiplicity == 1);
        CHECK(!r.tangential);
        CHECK(c1.sign_at(r.point) == 0);
        CHECK(c2.sign_at(r.point) == 0);
        CHECK(compare(r.point.x_alg(), Rational(0)) == 0);  // radical axis x = 0
    }
}

TEST_CASE("internally tangent circles: multiplicity two") {
    Curve big = Curve::conic(1, 0, 1, 0, 0, -4);       // radius 2
    Curve small = Curve::conic(1, 0, 1, -2, 0, 0);     // radius 1 centered (1,0)
    auto recs = intersect(big, small);
    REQUIRE(recs.size() == 1);
    CHECK(points_equal(recs[0].point, AlgebraicPoint(Rational(2), Rational(0))));
    CHECK(recs[0].multiplicity == 2);
    CHECK(recs[0].tangential);
}

TEST_CASE("intersection is symmetric and respects the Bezout bound") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 30; ++iter) {
        Arrangement arr = testing::random_cl_arrangement(rng, 2);
        if (arr.size() < 2) continue;
        std::vector<IntersectionRecord> ab, ba;
        try {
            ab = intersect(arr[0], arr[1]);
            ba = intersect(arr[1], arr[0]);
        } catch (const IdenticalCurvesError&) {
            continue;
        }
        REQUIRE(ab.size() == ba.size());
        int bound = 4;
        if (arr[0].kind == CurveKind::Line) bound = arr[1].kind == CurveKind::Line ? 1 : 2;
        else if (arr[1].kind == CurveKind::Line) bound = 2;
        int total = 0;
        for (size_t i = 0; i < ab.size(); ++i) {
            CHECK(points_equal(ab[i].point, ba[i].point));
            CHECK(ab[i].multiplicity == ba[i].multiplicity);
            CHECK(ab[i].tangential == (ab[i].multiplicity >= 2));
            total += ab[i].multiplicity;
        }
        CHECK(total <= bound);
    }
}

TEST_CASE("resultant closed form agrees with the Sylvester determinant") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int iter = 0; iter < 25; ++iter) {
        Curve f = Curve::conic(coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng),
                               coeff(rng));
        Curve g = Curve::conic(coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng),
                               coeff(rng));
        if (f.C == 0 || g.C == 0) continue;
        Poly a1 = f.yc1(), a0 = f.yc0(), b1 = g.yc1(), b0 = g.yc0();
        Poly r1 = f.C * b0 - g.C * a0;
        Poly closed = r1 * r1 - (a1 * b0 - a0 * b1) * (f.C * b1 - a1 * g.C);
        CHECK(closed == sylvester_resultant(f, g));
    }
}
