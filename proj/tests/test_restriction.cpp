#include "clband/restriction.hpp"

#include <doctest.h>

#include "test_support.hpp"

using namespace clband;
using namespace clband::testing;

namespace {

std::vector<std::string> vector_strings(const std::vector<SignVector>& vs) {
    std::vector<std::string> out;
    for (const auto& v : vs) out.push_back(v.to_string());
    return out;
}

PointedCurve synthetic_circle_points(int k) {
    // marked points on the unit circle, already in clockwise order from the
    // lexicographically smallest
    std::vector<std::pair<Rational, Rational>> coords = {
        {Rational(-1), Rational(0)},
        {Rational(0), Rational(1)},
        {Rational(3, 5), Rational(4, 5)},
        {Rational(1), Rational(0)},
        {Rational(0), Rational(-1)},
    };
    PointedCurve pc;
    pc.component = 0;
    pc.curve = Curve::conic(1, 0, 1, 0, 0, -1, "C");
    pc.oval = true;
    for (int i = 0; i < k; ++i)
        pc.points.push_back(AlgebraicPoint(coords[static_cast<size_t>(i)].first,
                                           coords[static_cast<size_t>(i)].second));
    pc.point_mults.resize(pc.points.size());
    pc.removed_gap = k - 1;
    return pc;
}

}  // namespace

TEST_CASE("deletion drops one coordinate") {
    Arrangement arr = line_circle_fixture();
    FaceComplex fc = decompose(arr);
    FaceComplex del = decompose(deleted_arrangement(arr, 1));
    CHECK(del.chambers().size() == 2);
    FaceComplex none = decompose(deleted_arrangement(deleted_arrangement(arr, 1), 0));
    CHECK(none.size() == 1);
    CHECK(none.chambers().size() == 1);

    // tangent fixture: deleting the line leaves the circle band {+, 0, -}
    Arrangement tg = tangent_fixture();
    FaceComplex circ = decompose(deleted_arrangement(tg, 0));
    L0Set l0 = sign_image(circ);
    REQUIRE(l0.size() == 3);
    CHECK(l0.contains(SignVector::parse("0")));
    CHECK(l0.contains(SignVector::parse("+")));
    CHECK(l0.contains(SignVector::parse("-")));
}

TEST_CASE("restriction to a line and to an oval") {
    FaceComplex fc = decompose(line_circle_fixture());
    PointedCurve on_line = restrict_to(fc, 0);
    REQUIRE(on_line.points.size() == 2);
    CHECK(!on_line.oval);
    CHECK(points_equal(on_line.points[0], AlgebraicPoint(Rational(-1), Rational(0))));
    CHECK(points_equal(on_line.points[1], AlgebraicPoint(Rational(1), Rational(0))));

    PointedCurve on_circle = restrict_to(fc, 1);
    REQUIRE(on_circle.points.size() == 2);
    CHECK(on_circle.oval);
    REQUIRE(on_circle.removed_point.has_value());
    CHECK(on_circle.curve.sign_at(*on_circle.removed_point) == 0);
    for (const auto& p : on_circle.points)
        CHECK(!points_equal(p, *on_circle.removed_point));
}

TEST_CASE("restriction to a hyperbola is rejected") {
    Arrangement arr = validate({Curve::conic(1, 0, -1, 0, 0, -1, "H"), Curve::line(1, 0, 0, "V")});
    FaceComplex fc = decompose(arr);
    CHECK_THROWS_AS(restrict_to(fc, 0), ComponentNotRestrictableError);
    CHECK_NOTHROW(restrict_to(fc, 1));
}

TEST_CASE("restriction records tangency multiplicities") {
    FaceComplex fc = decompose(embedding_line_fixture());
    PointedCurve pc = restrict_to(fc, 0);
    REQUIRE(pc.points.size() == 2);
    // p1 transversal with H2, p2 tangential with the conic H3
    REQUIRE(pc.point_mults[0].size() == 1);
    CHECK(pc.point_mults[0][0] == std::make_pair(1, 1));
    REQUIRE(pc.point_mults[1].size() == 1);
    CHECK(pc.point_mults[1][0] == std::make_pair(2, 2));
}

TEST_CASE("pointed line with two points: the five stated vectors") {
    PointedCurve pc;
    pc.curve = Curve::line(0, 1, 0);
    pc.oval = false;
    pc.points = {AlgebraicPoint(Rational(0), Rational(0)),
                 AlgebraicPoint(Rational(2), Rational(0))};
    pc.point_mults.resize(2);
    PointedBand band = pointed_curve_band(pc);
    CHECK(vector_strings(band.vectors) ==
          std::vector<std::string>{"--", "0-", "+-", "+0", "++"});
    CHECK(!check_lrb_axioms(band.table).has_value());
}

TEST_CASE("pointed oval with three points: the six stated vectors") {
    PointedCurve pc = synthetic_circle_points(3);
    PointedBand band = pointed_curve_band(pc);
    CHECK(vector_strings(band.vectors) ==
          std::vector<std::string>{"0--", "+--", "+0-", "++-", "++0", "+++"});
    CHECK(!check_lrb_axioms(band.table).has_value());
}

TEST_CASE("pointed curve with no points: one empty vector") {
    PointedCurve pc;
    pc.curve = Curve::conic(1, 0, 1, 0, 0, -1, "C");
    pc.oval = true;
    PointedBand band = pointed_curve_band(pc);
    REQUIRE(band.vectors.size() == 1);
    CHECK(band.vectors[0].size() == 0);
}

TEST_CASE("removed-point placements give isomorphic bands, k = 1..5") {
    for (int k = 1; k <= 5; ++k) {
        PointedCurve pc = synthetic_circle_points(k);
        CHECK(oval_placements_isomorphic(pc));
    }
}

TEST_CASE("different sign assignments give isomorphic pointed bands") {
    PointedCurve pc = synthetic_circle_points(3);
    PointedBand band = pointed_curve_band(pc);
    for (int flip = 0; flip < 3; ++flip) {
        std::vector<std::pair<SignVector, int>> items;
        for (size_t i = 0; i < band.vectors.size(); ++i)
            items.push_back({band.vectors[i].with_coordinate_negated(flip), static_cast<int>(i)});
        std::sort(items.begin(), items.end());
        // composition table of the flipped set, in sorted order
        auto index_of = [&](const SignVector& v) {
            for (size_t m = 0; m < items.size(); ++m)
                if (items[m].first == v) return static_cast<int>(m);
            return -1;
        };
        ProductTable flipped = ProductTable::empty(ProductTable::Kind::SignVectors,
                                                   std::vector<std::string>(items.size(), "?"));
        for (size_t a = 0; a < items.size(); ++a)
            for (size_t b = 0; b < items.size(); ++b) {
                int c = index_of(compose(items[a].first, items[b].first));
                REQUIRE(c >= 0);
                flipped.set(static_cast<int>(a), static_cast<int>(b), c);
            }
        std::vector<int> bij(items.size());
        for (size_t m = 0; m < items.size(); ++m) bij[static_cast<size_t>(items[m].second)] = static_cast<int>(m);
        CHECK(tables_isomorphic_under(band.table, flipped, bij));
    }
}

TEST_CASE("restriction by a disjoint component keeps a single element") {
    // circle far away from a line: the only faces on the circle form one section
    Arrangement arr = validate({Curve::line(0, 1, 0, "L"),
                                Curve::conic(1, 0, 1, -20, -10, 124, "C")});  // center (10,5), r=1
    FaceComplex fc = decompose(arr);
    L0Set sub = restricted_sublrb(sign_image(fc), 1);
    CHECK(sub.size() == 1);
    CHECK(sub.face_count() == 1);
    PointedCurve pc = restrict_to(fc, 1);
    CHECK(pc.points.empty());
    CHECK(pointed_curve_band(pc).vectors.size() == 1);
}

TEST_CASE("restricted sub-band of the tangent fixture counts faces, not vectors") {
    FaceComplex fc = decompose(tangent_fixture());
    L0Set l0 = sign_image(fc);
    L0Set sub = restricted_sublrb(l0, 0);
    CHECK(sub.face_count() == 3);  // e, and the two line rays sharing one vector
    CHECK(sub.size() == 2);
    L0Set sub2 = restricted_sublrb(l0, 1);
    CHECK(sub2.face_count() == 2);
    // closure of the restriction under composition
    for (const auto& u : sub.elements)
        for (const auto& v : sub.elements) CHECK(sub.contains(compose(u, v)));
}

TEST_CASE("line-tangent embedding example: lists and laws") {
    FaceComplex fc = decompose(embedding_line_fixture());
    EmbeddingReport rep = embedding_map(fc, 0);
    CHECK(vector_strings(rep.band.vectors) ==
          std::vector<std::string>{"--", "0-", "+-", "+0", "++"});
    CHECK(vector_strings(rep.ambient_vectors) ==
          std::vector<std::string>{"0+++", "00++", "0-++", "0-0+", "0-++"});
    REQUIRE(rep.laws.size() == 4);
    CHECK(rep.laws[0].kind == CoordinateLaw::Kind::ZeroCoordinate);
    CHECK(rep.laws[1].kind == CoordinateLaw::Kind::SignedProduct);
    CHECK(rep.laws[1].scalar == -1);
    CHECK(rep.laws[1].factors == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(rep.laws[2].kind == CoordinateLaw::Kind::SignedProduct);
    CHECK(rep.laws[2].scalar == 1);
    CHECK(rep.laws[2].factors == std::vector<std::pair<int, int>>{{2, 2}});
    CHECK(rep.laws[3].kind == CoordinateLaw::Kind::Constant);
    CHECK(rep.laws[3].constant == Sign::Plus);
    // cardinality at face level
    L0Set sub = restricted_sublrb(sign_image(fc), 0);
    CHECK(sub.face_count() == static_cast<int>(rep.face_map.size()));
}

TEST_CASE("oval embedding example: lists and laws") {
    FaceComplex fc = decompose(embedding_oval_fixture());
    EmbeddingReport rep = embedding_map(fc, 0);
    CHECK(vector_strings(rep.band.vectors) ==
          std::vector<std::string>{"0--", "+--", "+0-", "++-", "++0", "+++"});
    CHECK(vector_strings(rep.ambient_vectors) ==
          std::vector<std::string>{"00-+", "0--+", "0--0", "0---", "0--0", "0--+"});
    REQUIRE(rep.laws.size() == 4);
    CHECK(rep.laws[1].kind == CoordinateLaw::Kind::SignedProduct);
    CHECK(rep.laws[1].scalar == -1);
    CHECK(rep.laws[1].factors == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(rep.laws[2].kind == CoordinateLaw::Kind::Constant);
    CHECK(rep.laws[2].constant == Sign::Minus);
    CHECK(rep.laws[3].kind == CoordinateLaw::Kind::SignedProduct);
    CHECK(rep.laws[3].scalar == 1);
    CHECK(rep.laws[3].factors == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});
    CHECK(rep.pointed.removed_point.has_value());
}

TEST_CASE("parity of the multiplicities is all that matters") {
    for (int which : {0, 1}) {
        FaceComplex fc =
            decompose(which == 0 ? embedding_line_fixture() : embedding_oval_fixture());
        EmbeddingReport rep = embedding_map(fc, 0);
        for (const auto& law : rep.laws) {
            if (law.kind != CoordinateLaw::Kind::SignedProduct) continue;
            for (size_t m = 0; m < rep.face_map.size(); ++m) {
                Sign rhs = Sign::Plus;
                for (auto& [idx, mult] : law.factors) {
                    int parity_mult = mult % 2 == 1 ? 1 : 2;
                    rhs = sign_mul(rhs,
                                   sign_pow(rep.band.vectors[m][idx - 1], parity_mult));
                }
                if (law.scalar < 0) rhs = sign_negate(rhs);
                CHECK(rep.ambient_vectors[m][law.coordinate] == rhs);
            }
        }
    }
}

TEST_CASE("line arrangements: the embedding is an isomorphism") {
    // five lines: H2 parallel to H1; H3 and H5 through one point of H1; H4 elsewhere
    Arrangement arr = validate({Curve::line(0, 1, 0, "H1"), Curve::line(0, -1, 5, "H2"),
                                Curve::line(-1, 0, 0, "H3"), Curve::line(1, 1, -2, "H4"),
                                Curve::line(1, 1, 0, "H5")});
    FaceComplex fc = decompose(arr);
    EmbeddingReport rep = embedding_map(fc, 0);
    CHECK(rep.pointed.points.size() == 2);
    CHECK(rep.product_preserving);
    // coordinate laws: H2 constant, H3/H5 depend on p1, H4 on p2
    CHECK(rep.laws[1].kind == CoordinateLaw::Kind::Constant);
    CHECK(rep.laws[2].factors == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(rep.laws[3].factors == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(rep.laws[4].factors == std::vector<std::pair<int, int>>{{1, 1}});
}

TEST_CASE("the embedding need not preserve products") {
    FaceComplex fc = decompose(embedding_line_fixture());
    EmbeddingReport rep = embedding_map(fc, 3);  // H4 crosses the conic twice
    CHECK(!rep.product_preserving);
    // the explicit witness: the two conic crossings compose to the middle
    // section downstairs but not upstairs
    REQUIRE(rep.pointed.points.size() == 3);
    int a = -1, c = -1, b = -1;
    for (size_t m = 0; m < rep.face_map.size(); ++m) {
        const Face& f = fc.face(rep.face_map[m]);
        if (f.dim == 0 && f.support == std::vector<int>{2, 3}) (a < 0 ? a : c) = static_cast<int>(m);
    }
    REQUIRE(a >= 0);
    REQUIRE(c >= 0);
    b = (a + c) / 2;  // the section between the two crossings
    SignVector down = compose(rep.band.vectors[static_cast<size_t>(a)],
                              rep.band.vectors[static_cast<size_t>(c)]);
    CHECK(down == rep.band.vectors[static_cast<size_t>(b)]);
    SignVector up = compose(rep.ambient_vectors[static_cast<size_t>(a)],
                            rep.ambient_vectors[static_cast<size_t>(c)]);
    CHECK(!(up == rep.ambient_vectors[static_cast<size_t>(b)]));
}
