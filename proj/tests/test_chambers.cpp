#include "clband/chamber_count.hpp"

#include <doctest.h>

#include <random>

#include "test_support.hpp"

using namespace clband;
using namespace clband::testing;

TEST_CASE("bound pairs on the transversal line-circle fixture") {
    FaceComplex fc = decompose(line_circle_fixture());
    // sections of the line: left ray, chord, right ray
    auto secs = fc.edges_on_curve(0);
    REQUIRE(secs.size() == 3);
    int chord = -1, left = -1, right = -1;
    for (int e : secs) {
        const Face& f = fc.face(e);
        if (f.signs.to_string() == "0-") chord = e;
        else if (compare(f.sample.x_alg(), Rational(0)) < 0) left = e;
        else right = e;
    }
    REQUIRE(chord >= 0);
    auto pc = bound_pair(fc, chord);
    CHECK(fc.face(pc.first).signs.zero_count() == 0);
    // the chord separates the two inside chambers
    CHECK(fc.face(pc.first).bounded);
    CHECK(fc.face(pc.second).bounded);
    // the rays share their chamber pair (outside above / outside below)
    CHECK(bound_pair(fc, left) == bound_pair(fc, right));
    CHECK(bound_pair(fc, left) != pc);

    auto classes_line = bound_classes(fc, 0);
    CHECK(classes_line.size() == 2);
    auto classes_circle = bound_classes(fc, 1);
    CHECK(classes_circle.size() == 2);
}

TEST_CASE("deletion-restriction on a single line") {
    FaceComplex fc = decompose(validate({Curve::line(0, 1, 0)}));
    auto rows = deletion_restriction_report(fc);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].chambers_full == 2);
    CHECK(rows[0].chambers_deleted == 1);
    CHECK(rows[0].bound_count == 1);
    CHECK(rows[0].cl_identity);
    CHECK(rows[0].split_counts_ok);
}

TEST_CASE("deletion-restriction on the line-circle fixture") {
    FaceComplex fc = decompose(line_circle_fixture());
    auto rows = deletion_restriction_report(fc);
    REQUIRE(rows.size() == 2);
    // via the line: 4 = 2 + 2, classical 2 + 3 fails
    CHECK(rows[0].chambers_full == 4);
    CHECK(rows[0].chambers_deleted == 2);
    CHECK(rows[0].restricted_sections == 3);
    CHECK(rows[0].bound_count == 2);
    CHECK(rows[0].cl_identity);
    CHECK(!rows[0].classical_identity);
    // via the circle: 4 = 2 + 2
    CHECK(rows[1].chambers_deleted == 2);
    CHECK(rows[1].restricted_sections == 2);
    CHECK(rows[1].bound_count == 2);
    CHECK(rows[1].cl_identity);
    for (const auto& r : rows) CHECK(r.split_counts_ok);
}

TEST_CASE("deletion-restriction on the inscribed-triangle arrangement") {
    FaceComplex fc = decompose(triangle_circle_fixture());
    CHECK(fc.chambers().size() == 10);
    for (const auto& r : deletion_restriction_report(fc)) {
        CHECK(r.cl_identity);
        CHECK(r.split_counts_ok);
    }
}

TEST_CASE("line arrangements: classes are singletons and both identities agree") {
    std::mt19937_64 rng(83);
    for (int iter = 0; iter < 8; ++iter) {
        FaceComplex fc = decompose(random_line_arrangement(rng, 5));
        for (int h = 0; h < fc.arrangement().size(); ++h) {
            auto classes = bound_classes(fc, h);
            for (const auto& cls : classes) CHECK(cls.sections.size() == 1);
            CHECK(static_cast<int>(classes.size()) ==
                  static_cast<int>(fc.edges_on_curve(h).size()));
        }
        for (const auto& r : deletion_restriction_report(fc)) {
            CHECK(r.cl_identity);
            CHECK(r.classical_identity);
            CHECK(r.split_counts_ok);
        }
    }
}

TEST_CASE("bound count never exceeds the section count") {
    std::mt19937_64 rng(89);
    for (int iter = 0; iter < 10; ++iter) {
        FaceComplex fc = decompose(random_cl_arrangement(rng, 3));
        for (int h = 0; h < fc.arrangement().size(); ++h)
            CHECK(bound_classes(fc, h).size() <= fc.edges_on_curve(h).size());
    }
}

TEST_CASE("chambers form a two-sided ideal of a closed sign image") {
    for (const Arrangement& arr :
         {tangent_fixture(), line_circle_fixture(), two_tangents_secant_fixture()}) {
        FaceComplex fc = decompose(arr);
        L0Set l0 = sign_image(fc);
        REQUIRE(!closure_witness(l0).has_value());
        auto is_chamber_vector = [&](const SignVector& v) { return v.zero_count() == 0; };
        for (const auto& u : l0.elements)
            for (const auto& v : l0.elements) {
                if (is_chamber_vector(u)) CHECK(is_chamber_vector(compose(u, v)));
                if (is_chamber_vector(v)) CHECK(is_chamber_vector(compose(u, v)));
            }
    }
}

TEST_CASE("identity holds across fixtures with tangencies") {
    for (const Arrangement& arr : {tangent_fixture(), two_tangents_secant_fixture(),
                                   embedding_line_fixture(), embedding_oval_fixture()}) {
        FaceComplex fc = decompose(arr);
        for (const auto& r : deletion_restriction_report(fc)) {
            CHECK(r.cl_identity);
            CHECK(r.split_counts_ok);
        }
    }
}
