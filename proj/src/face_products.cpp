#include "clband/face_products.hpp"

#include <algorithm>

namespace clband {

std::vector<int> product_candidates(const FaceComplex& fc, int p1, int p2) {
    SignVector target = compose(fc.face(p1).signs, fc.face(p2).signs);
    std::vector<int> out;
    for (const Face& f : fc.faces())
        if (f.signs == target && fc.leq(p1, f.id)) out.push_back(f.id);
    return out;
}

std::vector<int> product_candidates(const FaceComplex& fc, const L0Set& l0, int p1, int p2) {
    SignVector target = compose(fc.face(p1).signs, fc.face(p2).signs);
    std::vector<int> out;
    int idx = l0.index_of(target);
    if (idx < 0) return out;
    for (int f : l0.fibers[static_cast<size_t>(idx)])
        if (fc.leq(p1, f)) out.push_back(f);
    return out;
}

namespace {

// position of a face id in a chain node list
int chain_position(const FaceComplex::Chain& ch, int id) {
    for (size_t i = 0; i < ch.nodes.size(); ++i)
        if (ch.nodes[i] == id) return static_cast<int>(i);
    return -1;
}

// Part II on a common unbounded curve: walk from p1 toward p2.
int product_on_unbounded(const FaceComplex& fc, int curve, int p1, int p2,
                         const std::vector<int>& cands) {
    for (const auto& ch : fc.chains(curve)) {
        int pos = chain_position(ch, p1);
        if (pos < 0) continue;
        if (ch.cycle) throw std::logic_error("product_on_unbounded: cycle chain");
        for (int dir : {1, -1}) {
            for (int i = pos + dir; i >= 0 && i < static_cast<int>(ch.nodes.size()); i += dir) {
                if (ch.nodes[static_cast<size_t>(i)] != p2) continue;
                int first_edge = ch.nodes[static_cast<size_t>(pos + dir)];
                if (std::find(cands.begin(), cands.end(), first_edge) == cands.end())
                    throw std::logic_error("product_on_unbounded: walk left the candidate set");
                return first_edge;
            }
        }
        throw AmbiguousTieError("target lies on a different component of the common curve");
    }
    throw std::logic_error("product_on_unbounded: p1 not on the curve");
}

struct OvalWalk {
    int candidate;      // first edge from p1 in this direction
    int reach_vertex;   // vertex where (the closure of) p2 is first met
    bool target_is_vertex;
};

// walk the cycle from position pos in direction dir until p2 is met
OvalWalk walk_to_target(const FaceComplex& fc, const FaceComplex::Chain& ch, int pos, int dir,
                        int p2) {
    int n = static_cast<int>(ch.nodes.size());
    auto at = [&](int i) { return ch.nodes[static_cast<size_t>(((i % n) + n) % n)]; };
    OvalWalk w;
    w.candidate = at(pos + dir);
    int last_vertex = -1;
    for (int step = 1; step < 2 * n + 2; ++step) {
        int node = at(pos + dir * step);
        const Face& f = fc.face(node);
        if (node == p2) {
            w.target_is_vertex = (f.dim == 0);
            w.reach_vertex = w.target_is_vertex ? p2 : last_vertex;
            if (w.reach_vertex < 0) throw std::logic_error("walk_to_target: no vertex before target");
            return w;
        }
        if (f.dim == 0) last_vertex = node;
    }
    throw std::logic_error("walk_to_target: target not on the cycle");
}

// Is edge `q` (adjacent to vertex p1 on the oval, with far endpoint `far`)
// the arc entered when moving clockwise from p1?
bool arc_is_clockwise(const OvalFrame& frame, const FaceComplex& fc, int p1, int q, int far) {
    const AlgebraicPoint& P = fc.face(p1).sample;
    const AlgebraicPoint& S = fc.face(q).sample;
    const AlgebraicPoint& V = fc.face(far).sample;
    if (points_equal(P, V)) throw std::logic_error("arc_is_clockwise: degenerate loop arc");
    return frame.cw_between(P, S, V);
}

int product_on_oval(const FaceComplex& fc, int curve, int p1, int p2,
                    const std::vector<int>& cands, const GeometricOptions& opt) {
    const auto& chains = fc.chains(curve);
    const FaceComplex::Chain* cyc = nullptr;
    int pos = -1;
    for (const auto& ch : chains) {
        int p = chain_position(ch, p1);
        if (p >= 0) {
            cyc = &ch;
            pos = p;
        }
    }
    if (!cyc || !cyc->cycle) throw std::logic_error("product_on_oval: no cycle through p1");
    OvalFrame frame(fc.arrangement()[curve]);

    OvalWalk plus = walk_to_target(fc, *cyc, pos, +1, p2);
    OvalWalk minus = walk_to_target(fc, *cyc, pos, -1, p2);
    if (!((plus.candidate == cands[0] && minus.candidate == cands[1]) ||
          (plus.candidate == cands[1] && minus.candidate == cands[0])))
        throw std::logic_error("product_on_oval: candidates do not flank p1");

    int n = static_cast<int>(cyc->nodes.size());
    auto at = [&](int i) { return cyc->nodes[static_cast<size_t>(((i % n) + n) % n)]; };
    auto cw_candidate = [&]() {
        int far_plus = at(pos + 2);
        bool plus_cw = arc_is_clockwise(frame, fc, p1, plus.candidate, far_plus);
        return plus_cw ? plus.candidate : minus.candidate;
    };

    const AlgebraicPoint& P1 = fc.face(p1).sample;

    // exact tie detection
    if (plus.target_is_vertex) {
        // the two routes end at the same vertex: tie iff it is the antipode
        if (points_equal(fc.face(p2).sample, frame.antipode(P1))) return cw_candidate();
    } else if (frame.is_circle() && P1.is_rational()) {
        // reflection across the diameter through p1 is an isometry; the tie
        // condition is that it swaps the two reach vertices
        Rational dx = P1.x_alg().rational_value() - frame.cx();
        Rational dy = P1.y_alg().rational_value() - frame.cy();
        Rational n2 = dx * dx + dy * dy;
        if (n2 != 0) {
            Rational m11 = (dx * dx - dy * dy) / n2, m12 = 2 * dx * dy / n2;
            // reflect around the center: x' = c + M (x - c)
            Rational b1 = frame.cx() - m11 * frame.cx() - m12 * frame.cy();
            Rational b2 = frame.cy() - m12 * frame.cx() + m11 * frame.cy();
            AlgebraicPoint mirrored = fc.face(plus.reach_vertex)
                                          .sample.affine_image(m11, m12, b1, m12, -m11, b2);
            if (points_equal(mirrored, fc.face(minus.reach_vertex).sample)) return cw_candidate();
        }
    }

    // certified length comparison; direction +1 may be either rotation sense
    int far_plus = at(pos + 2);
    bool plus_is_cw = arc_is_clockwise(frame, fc, p1, plus.candidate, far_plus);
    const AlgebraicPoint& reach_p = fc.face(plus.reach_vertex).sample;
    const AlgebraicPoint& reach_m = fc.face(minus.reach_vertex).sample;
    for (int effort = 0; effort <= opt.refinement_depth; ++effort) {
        QInterval lp = plus_is_cw ? frame.arc_length_cw(P1, reach_p, effort)
                                  : frame.arc_length_cw(reach_p, P1, effort);
        QInterval lm = plus_is_cw ? frame.arc_length_cw(reach_m, P1, effort)
                                  : frame.arc_length_cw(P1, reach_m, effort);
        if (disjoint(lp, lm)) return lp.hi < lm.lo ? plus.candidate : minus.candidate;
    }
    throw AmbiguousTieError("arc lengths did not separate within the configured depth");
}

// Part II with two chamber candidates at a tangency on an arrangement line:
// the clockwise witness-circle rule reduces to the side of that line.
int product_on_tangent_line(const FaceComplex& fc, int p1, int p2, const std::vector<int>& cands) {
    const Face& f1 = fc.face(p1);
    int lineidx = -1;
    for (int k : f1.support)
        if (fc.arrangement()[k].kind == CurveKind::Line) lineidx = k;
    if (lineidx < 0)
        throw AmbiguousTieError("chamber candidates at a conic-conic tangency");
    Sign s = fc.face(p2).signs[lineidx];
    if (s == Sign::Zero)
        throw AmbiguousTieError("target lies on the tangent line itself");

    std::vector<int> ledges;
    for (int e : fc.incident_edges(p1))
        if (fc.face(e).support == std::vector<int>{lineidx}) ledges.push_back(e);
    if (ledges.size() != 2) throw std::logic_error("tangency without two line edges");

    const Curve& L = fc.arrangement()[lineidx];
    auto side_of = [&](int e) {
        // sign of the parameter along direction (-E, D) from p1 to the edge
        const AlgebraicPoint& s1 = fc.face(p1).sample;
        const AlgebraicPoint& s2 = fc.face(e).sample;
        if (L.E != 0) {
            int dxs = compare(s2.x_alg(), s1.x_alg());
            return -dxs * sign_of(L.E);
        }
        int dys = compare(s2.y_alg(), s1.y_alg());
        return dys * sign_of(L.D);
    };
    int want = (s == Sign::Plus) ? 1 : -1;
    int chosen_edge = -1;
    for (int e : ledges)
        if (side_of(e) == want) chosen_edge = e;
    if (chosen_edge < 0) throw std::logic_error("no line edge on the required side");
    int result = -1;
    for (int q : cands)
        if (fc.leq(chosen_edge, q)) {
            if (result >= 0) throw std::logic_error("both candidates contain the chosen edge");
            result = q;
        }
    if (result < 0) throw std::logic_error("no candidate above the chosen line edge");
    return result;
}

}  // namespace

int geometric_product(const FaceComplex& fc, int p1, int p2, const GeometricOptions& opt) {
    std::vector<int> cands = opt.sign_index ? product_candidates(fc, *opt.sign_index, p1, p2)
                                            : product_candidates(fc, p1, p2);
    if (cands.empty()) return p1;
    if (cands.size() == 1) return cands[0];
    if (std::find(cands.begin(), cands.end(), p2) != cands.end()) return p2;
    if (cands.size() != 2) throw std::logic_error("more than two product candidates");
    if (fc.face(p1).dim != 0) throw std::logic_error("two candidates above a positive-dim face");

    const Face &q1 = fc.face(cands[0]), &q2 = fc.face(cands[1]);
    if (q1.dim == 1 && q2.dim == 1) {
        if (q1.support != q2.support) throw std::logic_error("candidate edges on distinct curves");
        int curve = q1.support[0];
        const Curve& H = fc.arrangement()[curve];
        if (H.is_oval()) return product_on_oval(fc, curve, p1, p2, cands, opt);
        return product_on_unbounded(fc, curve, p1, p2, cands);
    }
    if (q1.dim == 2 && q2.dim == 2) return product_on_tangent_line(fc, p1, p2, cands);
    throw std::logic_error("mixed-dimension candidate pair");
}

ProductTable geometric_table(const FaceComplex& fc, const GeometricOptions& opt) {
    std::vector<std::string> labels;
    for (const Face& f : fc.faces()) labels.push_back(f.label);
    ProductTable t = ProductTable::empty(ProductTable::Kind::Geometric, std::move(labels));
    L0Set l0 = sign_image(fc);
    GeometricOptions fast = opt;
    fast.sign_index = &l0;
    for (int i = 0; i < fc.size(); ++i)
        for (int j = 0; j < fc.size(); ++j) t.set(i, j, geometric_product(fc, i, j, fast));
    return t;
}

ChoiceFunction canonical_choice(const FaceComplex& fc, const L0Set& l0) {
    ChoiceFunction j;
    for (const auto& fiber : l0.fibers) {
        int best = fiber.front();
        for (int f : fiber)
            if (compare_points(fc.face(f).sample, fc.face(best).sample) < 0) best = f;
        j.pick.push_back(best);
    }
    return j;
}

int associative_product(const FaceComplex& fc, const L0Set& l0, const ChoiceFunction& j, int x,
                        int y) {
    SignVector p = compose(fc.face(x).signs, fc.face(y).signs);
    int idx = l0.index_of(p);
    if (idx < 0) {
        if (auto w = closure_witness(l0)) throw NotClosedError(*w);
        throw std::logic_error("associative_product: product vector missing from closed image");
    }
    return j.pick[static_cast<size_t>(idx)];
}

ProductTable associative_table(const FaceComplex& fc, const L0Set& l0, const ChoiceFunction& j) {
    if (auto w = closure_witness(l0)) throw NotClosedError(*w);
    std::vector<std::string> labels;
    for (const Face& f : fc.faces()) labels.push_back(f.label);
    ProductTable t = ProductTable::empty(ProductTable::Kind::Associative, std::move(labels));
    for (int x = 0; x < fc.size(); ++x)
        for (int y = 0; y < fc.size(); ++y) t.set(x, y, associative_product(fc, l0, j, x, y));
    return t;
}

}  // namespace clband
