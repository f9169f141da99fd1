#include "clband/restriction.hpp"

#include <algorithm>

namespace clband {

PointedCurve restrict_to(const FaceComplex& fc, int h) {
    const Arrangement& arr = fc.arrangement();
    if (h < 0 || h >= arr.size()) throw std::invalid_argument("restrict_to: bad component index");
    const Curve& H = arr[h];
    if (H.kind == CurveKind::Conic && H.conic_class() == ConicClass::Hyperbola)
        throw ComponentNotRestrictableError(
            "restriction requires a connected component; a hyperbola has two branches");

    PointedCurve pc;
    pc.component = h;
    pc.curve = H;
    pc.oval = H.is_oval();

    std::vector<int> vs = fc.vertices_on_curve(h);
    if (!pc.oval) {
        // single path chain; vertex order along it is the orientation
        const auto& chains = fc.chains(h);
        if (chains.size() != 1)
            throw ComponentNotRestrictableError("component is not connected");
        const auto& ch = chains[0];
        for (int n : ch.nodes)
            if (fc.face(n).dim == 0) pc.point_vertices.push_back(n);
    } else if (!vs.empty()) {
        OvalFrame frame(H);
        int start = vs[0];
        for (int v : vs)
            if (compare_points(fc.face(v).sample, fc.face(start).sample) < 0) start = v;
        std::vector<int> rest;
        for (int v : vs)
            if (v != start) rest.push_back(v);
        const AlgebraicPoint& s = fc.face(start).sample;
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            return frame.cw_between(s, fc.face(a).sample, fc.face(b).sample);
        });
        pc.point_vertices.push_back(start);
        for (int v : rest) pc.point_vertices.push_back(v);
    }
    for (int v : pc.point_vertices) pc.points.push_back(fc.face(v).sample);

    // multiplicities per point and other curve
    pc.point_mults.resize(pc.points.size());
    for (size_t i = 0; i < pc.points.size(); ++i) {
        for (int j = 0; j < arr.size(); ++j) {
            if (j == h) continue;
            for (const auto& rec : fc.pair_intersections(std::min(h, j), std::max(h, j)))
                if (points_equal(rec.point, pc.points[i]))
                    pc.point_mults[i].push_back({j, rec.multiplicity});
        }
    }

    if (pc.oval) {
        OvalFrame frame(H);
        int k = static_cast<int>(pc.points.size());
        if (k == 0) {
            pc.removed_gap = -1;
            pc.removed_point = frame.point_at_direction(Rational(1), Rational(0));
        } else if (k == 1) {
            pc.removed_gap = 0;
            pc.removed_point = frame.antipode(pc.points[0]);
        } else {
            pc.removed_gap = k - 1;
            pc.removed_point =
                frame.point_in_cw_gap(pc.points[static_cast<size_t>(k) - 1], pc.points[0]);
        }
    }
    return pc;
}

PointedBand pointed_curve_band(const PointedCurve& pc, int cut_gap) {
    PointedBand band;
    band.k = static_cast<int>(pc.points.size());
    band.oval = pc.oval;
    int k = band.k;

    int nfaces;
    band.point_positions.assign(static_cast<size_t>(k), -1);
    if (!pc.oval) {
        if (cut_gap >= 0) throw std::invalid_argument("cut_gap applies to ovals only");
        nfaces = 2 * k + 1;
        for (int i = 0; i < k; ++i) band.point_positions[static_cast<size_t>(i)] = 2 * i + 1;
        int si = 0;
        for (int m = 0; m < nfaces; ++m) {
            if (m % 2 == 1)
                band.face_names.push_back("p" + std::to_string(m / 2 + 1));
            else
                band.face_names.push_back("s" + std::to_string(si++));
        }
    } else {
        if (k == 0) {
            band.cut_gap = -1;
            band.face_names = {"s0"};
            band.vectors.push_back(SignVector(std::vector<Sign>{}));
            band.table = ProductTable::empty(ProductTable::Kind::SignVectors, {"s0"});
            band.table.set(0, 0, 0);
            return band;
        }
        band.cut_gap = cut_gap >= 0 ? cut_gap : (pc.removed_gap >= 0 ? pc.removed_gap : k - 1);
        if (band.cut_gap < 0 || band.cut_gap >= k)
            throw std::invalid_argument("pointed_curve_band: bad gap");
        nfaces = 2 * k;
        int start = (band.cut_gap + 1) % k;
        for (int t = 0; t < k; ++t) {
            int orig = (start + t) % k;
            band.point_positions[static_cast<size_t>(orig)] = 2 * t;
            band.face_names.push_back("p" + std::to_string(orig + 1));
            band.face_names.push_back("s" + std::to_string(t + 1));
        }
        // names were pushed in interleaved order already
        std::vector<std::string> names;
        for (int t = 0; t < k; ++t) {
            names.push_back("p" + std::to_string((start + t) % k + 1));
            names.push_back("s" + std::to_string(t + 1));
        }
        band.face_names = std::move(names);
    }

    // sign vectors: coordinate i is 0 at p_i's position, + after, - before
    for (int m = 0; m < nfaces; ++m) {
        std::vector<Sign> e(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            int pos = band.point_positions[static_cast<size_t>(i)];
            e[static_cast<size_t>(i)] =
                m == pos ? Sign::Zero : (m > pos ? Sign::Plus : Sign::Minus);
        }
        band.vectors.push_back(SignVector(std::move(e)));
    }

    band.table = ProductTable::empty(ProductTable::Kind::SignVectors, band.face_names);
    auto index_of = [&](const SignVector& v) {
        for (int m = 0; m < nfaces; ++m)
            if (band.vectors[static_cast<size_t>(m)] == v) return m;
        return -1;
    };
    for (int a = 0; a < nfaces; ++a)
        for (int b = 0; b < nfaces; ++b) {
            int c = index_of(compose(band.vectors[static_cast<size_t>(a)],
                                     band.vectors[static_cast<size_t>(b)]));
            if (c < 0) throw std::logic_error("pointed band is not closed");
            band.table.set(a, b, c);
        }
    return band;
}

bool oval_placements_isomorphic(const PointedCurve& pc) {
    if (!pc.oval) throw std::invalid_argument("oval_placements_isomorphic: not an oval");
    int k = static_cast<int>(pc.points.size());
    if (k <= 1) return true;
    PointedBand first = pointed_curve_band(pc, 0);
    for (int g = 1; g < k; ++g) {
        PointedBand other = pointed_curve_band(pc, g);
        if (other.table.n() != first.table.n()) return false;
        // the cyclic shift p_i -> p_{i+g} is the positional identity of the tables
        for (int a = 0; a < first.table.n(); ++a)
            for (int b = 0; b < first.table.n(); ++b)
                if (first.table.at(a, b) != other.table.at(a, b)) return false;
    }
    return true;
}

EmbeddingReport embedding_map(const FaceComplex& fc, int h) {
    EmbeddingReport rep;
    rep.component = h;
    rep.pointed = restrict_to(fc, h);
    rep.band = pointed_curve_band(rep.pointed);
    const PointedCurve& pc = rep.pointed;
    int k = static_cast<int>(pc.points.size());

    // face map in the band's linear order
    if (!pc.oval) {
        const auto& ch = fc.chains(h)[0];
        rep.face_map = ch.nodes;
        if (static_cast<int>(rep.face_map.size()) != 2 * k + 1)
            throw std::logic_error("embedding_map: chain/point count mismatch");
    } else if (k == 0) {
        auto es = fc.edges_on_curve(h);
        if (es.size() != 1) throw std::logic_error("embedding_map: oval without points");
        rep.face_map = {es[0]};
    } else {
        OvalFrame frame(pc.curve);
        auto edge_between_cw = [&](int va, int vb) {
            std::vector<int> shared;
            for (int e : fc.edges_on_curve(h))
                if (fc.leq(va, e) && fc.leq(vb, e)) shared.push_back(e);
            if (shared.size() == 1) return shared[0];
            if (shared.size() == 2) {
                // two arcs join the same two vertices: take the clockwise one from va
                const AlgebraicPoint& A = fc.face(va).sample;
                const AlgebraicPoint& B = fc.face(vb).sample;
                for (int e : shared)
                    if (frame.cw_between(A, fc.face(e).sample, B)) return e;
            }
            if (va == vb && shared.empty()) {
                auto es = fc.edges_on_curve(h);
                if (es.size() == 1) return es[0];  // loop arc, single marked point
            }
            throw std::logic_error("embedding_map: no clockwise arc between points");
        };
        for (int t = 0; t < k; ++t) {
            int va = pc.point_vertices[static_cast<size_t>(t)];
            int vb = pc.point_vertices[static_cast<size_t>((t + 1) % k)];
            rep.face_map.push_back(va);
            rep.face_map.push_back(edge_between_cw(va, vb));
        }
    }

    for (int m : rep.face_map) rep.ambient_vectors.push_back(fc.face(m).signs);

    // coordinate laws
    const Arrangement& arr = fc.arrangement();
    int nfaces = static_cast<int>(rep.face_map.size());
    for (int j = 0; j < arr.size(); ++j) {
        CoordinateLaw law;
        law.coordinate = j;
        if (j == h) {
            law.kind = CoordinateLaw::Kind::ZeroCoordinate;
            for (int m = 0; m < nfaces; ++m)
                if (rep.ambient_vectors[static_cast<size_t>(m)][j] != Sign::Zero)
                    throw LawViolationError("restricted face not on the component");
            rep.laws.push_back(std::move(law));
            continue;
        }
        std::vector<std::pair<int, int>> factors;
        for (int i = 0; i < k; ++i)
            for (auto& [cj, mult] : pc.point_mults[static_cast<size_t>(i)])
                if (cj == j) factors.push_back({i, mult});
        if (factors.empty()) {
            law.kind = CoordinateLaw::Kind::Constant;
            law.constant = rep.ambient_vectors[0][j];
            if (law.constant == Sign::Zero)
                throw LawViolationError("constant law with zero sign");
            for (int m = 1; m < nfaces; ++m)
                if (rep.ambient_vectors[static_cast<size_t>(m)][j] != law.constant)
                    throw LawViolationError("constant law violated at coordinate " +
                                            std::to_string(j));
            rep.laws.push_back(std::move(law));
            continue;
        }
        law.kind = CoordinateLaw::Kind::SignedProduct;
        for (auto& [i, mult] : factors) law.factors.push_back({i + 1, mult});
        std::vector<Sign> rhs(static_cast<size_t>(nfaces));
        for (int m = 0; m < nfaces; ++m) {
            Sign s = Sign::Plus;
            for (auto& [i, mult] : factors)
                s = sign_mul(s, sign_pow(rep.band.vectors[static_cast<size_t>(m)][i], mult));
            rhs[static_cast<size_t>(m)] = s;
        }
        int scalar = 0;
        for (int m = 0; m < nfaces; ++m) {
            Sign a = rep.ambient_vectors[static_cast<size_t>(m)][j];
            Sign r = rhs[static_cast<size_t>(m)];
            if ((a == Sign::Zero) != (r == Sign::Zero))
                throw LawViolationError("zero pattern mismatch at coordinate " + std::to_string(j));
            if (a == Sign::Zero) continue;
            int this_scalar = a == r ? 1 : -1;
            if (scalar == 0) scalar = this_scalar;
            if (scalar != this_scalar)
                throw LawViolationError("inconsistent scalar at coordinate " + std::to_string(j));
        }
        law.scalar = scalar == 0 ? 1 : scalar;
        rep.laws.push_back(std::move(law));
    }

    // is the induced vector map a homomorphism?
    rep.product_preserving = true;
    auto band_index = [&](const SignVector& v) {
        for (int m = 0; m < nfaces; ++m)
            if (rep.band.vectors[static_cast<size_t>(m)] == v) return m;
        return -1;
    };
    for (int a = 0; a < nfaces && rep.product_preserving; ++a)
        for (int b = 0; b < nfaces; ++b) {
            int c = band_index(compose(rep.band.vectors[static_cast<size_t>(a)],
                                       rep.band.vectors[static_cast<size_t>(b)]));
            if (c < 0) throw std::logic_error("embedding_map: band not closed");
            SignVector lhs = compose(rep.ambient_vectors[static_cast<size_t>(a)],
                                     rep.ambient_vectors[static_cast<size_t>(b)]);
            if (!(lhs == rep.ambient_vectors[static_cast<size_t>(c)])) {
                rep.product_preserving = false;
                break;
            }
        }
    return rep;
}

L0Set restricted_sublrb(const L0Set& l0, int h) {
    L0Set out;
    for (int i = 0; i < l0.size(); ++i) {
        if (l0.elements[static_cast<size_t>(i)][h] != Sign::Zero) continue;
        out.elements.push_back(l0.elements[static_cast<size_t>(i)]);
        out.fibers.push_back(l0.fibers[static_cast<size_t>(i)]);
    }
    return out;
}

}  // namespace clband
