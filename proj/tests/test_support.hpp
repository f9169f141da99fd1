#pragma once

// Shared fixture constructors and small oracles used across the test suites.

#include "clband/chamber_count.hpp"
#include "clband/json_io.hpp"
#include "clband/restriction.hpp"

#include <random>

namespace clband::testing {

// --- fixtures -------------------------------------------------------------

// y = 0 with a circle tangent from above at the origin
inline Arrangement tangent_fixture() {
    return validate({Curve::line(0, 1, 0, "L"), Curve::conic(1, 0, 1, 0, -2, 0, "C")});
}

// y = 0 and the unit circle (transversal)
inline Arrangement line_circle_fixture() {
    return validate({Curve::line(0, 1, 0, "H"), Curve::conic(1, 0, 1, 0, 0, -1, "C")});
}

// three lines in general position and the circle through their intersection
// points: y = 0, 1 - x - y = 0, y - x - 1 = 0, x^2 + y^2 - 1 = 0
inline Arrangement triangle_circle_fixture() {
    return validate({Curve::line(0, 1, 0, "H1"), Curve::line(-1, -1, 1, "H2"),
                     Curve::line(-1, 1, -1, "H3"), Curve::conic(1, 0, 1, 0, 0, -1, "C")});
}

// circle with two horizontal tangent lines and a vertical secant at x = -1/2
inline Arrangement two_tangents_secant_fixture() {
    return validate({Curve::conic(1, 0, 1, 0, 0, -1, "C"), Curve::line(0, 1, -1, "T1"),
                     Curve::line(0, 1, 1, "T2"), Curve::line(2, 0, 1, "S")});
}

// three lines + conic tangent to the first: restriction/embedding example.
// H1: y = 0; H2: -x = 0; H3: circle centered (2,1) radius 1 (tangent to H1 at (2,0));
// H4: 1 - y = 0 (parallel to H1, crossing the circle at (1,1) and (3,1))
inline Arrangement embedding_line_fixture() {
    return validate({Curve::line(0, 1, 0, "H1"), Curve::line(-1, 0, 0, "H2"),
                     Curve::conic(1, 0, 1, -4, -2, 4, "H3"), Curve::line(0, -1, 1, "H4")});
}

// unit circle restricted: tangent vertical line (f = -x-1), distant line,
// secant y = -1/2
inline Arrangement embedding_oval_fixture() {
    return validate({Curve::conic(1, 0, 1, 0, 0, -1, "H1"), Curve::line(-1, 0, -1, "H2"),
                     Curve::line(0, 1, -3, "H3"), Curve::line(0, 2, 1, "H4")});
}

// square inscribed in the unit circle, edges extended: each polygon vertex
// lies on two lines and the circle
inline Arrangement ngon4_fixture() {
    return validate({Curve::line(1, 1, -1, "E1"), Curve::line(-1, 1, -1, "E2"),
                     Curve::line(1, 1, 1, "E3"), Curve::line(-1, 1, 1, "E4"),
                     Curve::conic(1, 0, 1, 0, 0, -1, "C")});
}

// two circles meeting the second intersection example: unit circle and the
// circle through (0,+-1) centered at (1,0), plus the tangent line y = 1
inline Arrangement no_candidate_fixture() {
    return validate({Curve::conic(1, 0, 1, 0, 0, -1, "H1"), Curve::line(0, 1, -1, "H2"),
                     Curve::conic(1, 0, 1, -2, 0, -1, "H3")});
}

// --- oracles ---------------------------------------------------------------

// Euler oracle for a connected union of curves: chambers = E - V + 1 when some
// curve is unbounded (the point at infinity joins the complex), E - V + 2 when
// every curve is an oval.
inline int euler_chambers(const FaceComplex& fc) {
    int v = 0, e = 0;
    for (const Face& f : fc.faces()) {
        if (f.dim == 0) ++v;
        if (f.dim == 1) ++e;
    }
    bool unbounded = false;
    for (const Curve& c : fc.arrangement().curves)
        if (!c.is_oval()) unbounded = true;
    return e - v + (unbounded ? 1 : 2);
}

inline int face_id_by_label(const FaceComplex& fc, const std::string& label) {
    for (const Face& f : fc.faces())
        if (f.label == label) return f.id;
    throw std::invalid_argument("no face labeled " + label);
}

// face id with the given sign string; must be unique
inline int face_by_signs(const FaceComplex& fc, const std::string& signs) {
    int found = -1;
    for (const Face& f : fc.faces())
        if (f.signs.to_string() == signs) {
            if (found >= 0) throw std::invalid_argument("sign vector not unique: " + signs);
            found = f.id;
        }
    if (found < 0) throw std::invalid_argument("no face with signs " + signs);
    return found;
}

// --- random corpora ---------------------------------------------------------

inline Rational small_rational(std::mt19937_64& rng, int num_range = 3, int dens = 2) {
    std::uniform_int_distribution<int> n(-num_range, num_range);
    std::uniform_int_distribution<int> d(1, dens);
    return Rational(n(rng), d(rng));
}

/// Random line arrangement with up to max_lines lines (valid, possibly with
/// coincident intersection points).
inline Arrangement random_line_arrangement(std::mt19937_64& rng, int max_lines = 6) {
    std::uniform_int_distribution<int> count(1, max_lines);
    int n = count(rng);
    std::vector<Curve> curves;
    int guard = 0;
    while (static_cast<int>(curves.size()) < n && guard++ < 200) {
        Rational a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
        if (a == 0 && b == 0) continue;
        Curve cand = Curve::line(a, b, c);
        bool dup = false;
        for (const Curve& k : curves)
            if (same_locus(k, cand)) dup = true;
        if (!dup) curves.push_back(cand);
    }
    return validate(std::move(curves));
}

/// Random circle/ellipse with small rational data.
inline Curve random_oval(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> cc(-2, 2);
    std::uniform_int_distribution<int> rr(1, 3);
    Rational cx(cc(rng)), cy(cc(rng));
    Rational ax(rr(rng)), by(rr(rng));
    // ax*(x-cx)^2 + by*(y-cy)^2 = ax*by  (ellipse with rational axes)
    return Curve::conic(ax, 0, by, -2 * ax * cx, -2 * by * cy,
                        ax * cx * cx + by * cy * cy - ax * by);
}

/// Random CL arrangement (lines + ovals + occasional parabola), validated.
inline Arrangement random_cl_arrangement(std::mt19937_64& rng, int max_curves = 3,
                                         bool allow_parabola = true) {
    std::uniform_int_distribution<int> count(1, max_curves);
    std::uniform_int_distribution<int> kind(0, 5);
    int n = count(rng);
    std::vector<Curve> curves;
    int guard = 0;
    while (static_cast<int>(curves.size()) < n && guard++ < 200) {
        int k = kind(rng);
        Curve cand;
        if (k <= 2) {
            Rational a = small_rational(rng), b = small_rational(rng), c = small_rational(rng);
            if (a == 0 && b == 0) continue;
            cand = Curve::line(a, b, c);
        } else if (k <= 4 || !allow_parabola) {
            cand = random_oval(rng);
        } else {
            // parabola y = q x^2 + r
            Rational q(std::uniform_int_distribution<int>(1, 2)(rng));
            Rational r = small_rational(rng);
            cand = Curve::conic(q, 0, 0, 0, -1, r);
        }
        bool dup = false;
        for (const Curve& c : curves)
            if (same_locus(c, cand)) dup = true;
        if (!dup) curves.push_back(cand);
    }
    return validate(std::move(curves));
}

}  // namespace clband::testing
