#include "clband/cell_complex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace clband {

namespace {

constexpr int kMaxLoops = 100000;

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<size_t>(a)] != a) {
            parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
            a = parent[static_cast<size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

Rational rational_strictly_between(RealAlgebraic a, RealAlgebraic b) {
    for (int i = 0; i < kMaxLoops; ++i) {
        if (a.hi() < b.lo()) {
            // shrink the gap so endpoint values themselves cannot be chosen
            Rational u = a.hi(), v = b.lo();
            Rational cand = simplest_in(u + (v - u) / 4, v - (v - u) / 4);
            if (compare(a, cand) < 0 && compare(b, cand) > 0) return cand;
        }
        a = a.refined();
        b = b.refined();
    }
    throw std::logic_error("rational_strictly_between: refinement stalled");
}

Rational rational_below(const RealAlgebraic& a) { return Rational(floor_q(a.lo()) - 1); }
Rational rational_above(const RealAlgebraic& a) { return Rational(ceil_q(a.hi()) + 1); }

// y-roots of a curve over a fixed rational x, in increasing order (each simple).
std::vector<RealAlgebraic> curve_y_roots(const Curve& c, const Rational& x) {
    Poly fy({c.yc0().eval(x), c.yc1().eval(x), c.C});
    if (fy.is_zero()) throw std::logic_error("curve_y_roots: vertical line at this x");
    std::vector<RealAlgebraic> out;
    for (auto& rm : isolate_real_roots(fy)) out.push_back(std::move(rm.root));
    return out;
}

// A point on a critical line x = xhat, with a refinable y-enclosure.
struct LinePoint {
    enum Kind { VertexPt, RatPt, QuadPt } kind = VertexPt;
    bool is_vertex = false;
    int vertex_index = -1;  // builder vertex list
    int curve = -1;         // RatPt/QuadPt: the carrying curve

    RealAlgebraic y_exact;        // VertexPt
    Poly num, den;                // RatPt: y = num(x)/den(x) at xhat
    const Curve* qcurve = nullptr;  // QuadPt
    int branch = 0;               // QuadPt: 0 = lower root, 1 = upper

    RealAlgebraic x;   // refinable local copy of the critical value
    QInterval yint;
    unsigned prec = 8;
    bool have = false;

    void refine_once() {
        prec += 4;
        switch (kind) {
            case VertexPt: {
                y_exact = y_exact.refined().refined();
                yint = y_exact.interval();
                have = true;
                return;
            }
            case RatPt: {
                if (have) x = x.refined().refined();
                for (int i = 0; i < kMaxLoops; ++i) {
                    QInterval d = den.eval_interval(x.interval());
                    if (d.definite_sign() != 0) {
                        yint = num.eval_interval(x.interval()) / d;
                        have = true;
                        return;
                    }
                    x = x.refined();
                }
                throw std::logic_error("LinePoint: denominator refinement stalled");
            }
            case QuadPt: {
                // monic roots of y^2 + p y + q with p = yc1/C, q = yc0/C
                if (have) x = x.refined().refined();
                Rational invc = Rational(1) / qcurve->C;
                for (int i = 0; i < kMaxLoops; ++i) {
                    QInterval p = invc * qcurve->yc1().eval_interval(x.interval());
                    QInterval q = invc * qcurve->yc0().eval_interval(x.interval());
                    QInterval disc = p * p - Rational(4) * q;
                    if (disc.hi >= 0) {
                        QInterval s = sqrt_enclosure(
                            QInterval(std::max(Rational(0), disc.lo), disc.hi), prec);
                        yint = (branch == 0 ? (-p - s) : (-p + s)) * QInterval(Rational(1, 2));
                        have = true;
                        return;
                    }
                    x = x.refined();
                }
                throw std::logic_error("LinePoint: discriminant refinement stalled");
            }
        }
    }
    const QInterval& interval() {
        if (!have) refine_once();
        return yint;
    }
};

// strict y-order of two distinct points on the same critical line
bool line_point_less(LinePoint& a, LinePoint& b) {
    if (a.kind == LinePoint::VertexPt && b.kind == LinePoint::VertexPt)
        return compare(a.y_exact, b.y_exact) < 0;
    for (int i = 0; i < 256; ++i) {
        if (disjoint(a.interval(), b.interval())) return a.interval().hi < b.interval().lo;
        a.refine_once();
        b.refine_once();
    }
    auto describe = [](const LinePoint& p) {
        std::string s = p.kind == LinePoint::VertexPt
                            ? "vertex " + std::to_string(p.vertex_index)
                            : (p.kind == LinePoint::RatPt ? "rational-point" : "quad-point");
        if (!p.is_vertex)
            s += " on curve " + std::to_string(p.curve) + " branch " + std::to_string(p.branch);
        return s;
    };
    throw std::logic_error("line_point_less: points failed to separate: " + describe(a) +
                           " vs " + describe(b));
}

struct ArcLimit {
    enum Kind { None, ToPoint, ToInf } kind = None;
    int point = -1;  // index into the line's sorted points
    int inf_sign = 0;
};

enum class Role { V, E, C };

struct CellInfo {
    Role role = Role::C;
    int curve = -1;     // Role::E
    int vertex = -1;    // Role::V
    bool unbounded = false;
    // sample provenance
    int slab = -1, arc_idx = -1, region_idx = -1;
    int line = -1, seg_idx = -1;
};

struct SlabArc {
    int curve;
    int branch;        // index within this curve's roots at the slab sample, bottom-up
    RealAlgebraic y;   // value at the slab sample x
    int cell;
};

struct Slab {
    Rational sample_x;
    std::vector<SlabArc> arcs;       // sorted by y
    std::vector<int> region_cells;   // arcs.size()+1 cells
    std::vector<std::vector<int>> arcs_of_curve;  // curve -> arc indices bottom-up
};

struct CritLine {
    RealAlgebraic x;
    int vline_curve = -1;
    std::vector<LinePoint> pts;                   // sorted by y
    std::vector<int> point_cells;
    std::vector<int> segment_cells;               // pts.size()+1
    std::vector<std::vector<int>> points_of_curve;  // curve -> indices into pts, bottom-up
};

}  // namespace

class ComplexBuilder {
  public:
    explicit ComplexBuilder(const Arrangement& arr) : arr_(arr), n_(arr.size()) {}

    FaceComplex build();

  private:
    struct Vertex {
        AlgebraicPoint pt;
        std::vector<int> curves;
    };

    int new_cell(CellInfo info) {
        cells_.push_back(std::move(info));
        return static_cast<int>(cells_.size()) - 1;
    }

    void compute_intersections();
    void compute_vertices();
    void compute_criticals();
    void build_slabs();
    void build_lines();
    void connect();
    ArcLimit arc_limit(const Slab& slab, const SlabArc& arc, CritLine& line);
    void assemble(FaceComplex& out);

    const Arrangement& arr_;
    int n_;
    std::map<std::pair<int, int>, std::vector<IntersectionRecord>> inter_;
    std::vector<Vertex> verts_;
    std::vector<RealAlgebraic> crits_;
    std::vector<Slab> slabs_;
    std::vector<CritLine> lines_;
    std::vector<CellInfo> cells_;
    std::vector<std::pair<int, int>> unions_;
    std::vector<std::pair<int, int>> incid_;  // (lower cell, upper cell)
};

void ComplexBuilder::compute_intersections() {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) inter_[{i, j}] = intersect(arr_[i], arr_[j]);
}

void ComplexBuilder::compute_vertices() {
    std::vector<AlgebraicPoint> pts;
    for (auto& [key, recs] : inter_)
        for (auto& r : recs) pts.push_back(r.point);
    std::sort(pts.begin(), pts.end(),
              [](const AlgebraicPoint& a, const AlgebraicPoint& b) { return compare_points(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const AlgebraicPoint& a, const AlgebraicPoint& b) {
                              return points_equal(a, b);
                          }),
              pts.end());
    for (auto& p : pts) {
        Vertex v;
        v.pt = p;
        for (int k = 0; k < n_; ++k)
            if (arr_[k].sign_at(p) == 0) v.curves.push_back(k);
        if (v.curves.size() < 2) throw std::logic_error("vertex with fewer than two curves");
        verts_.push_back(std::move(v));
    }
}

void ComplexBuilder::compute_criticals() {
    std::vector<RealAlgebraic> xs;
    for (const auto& v : verts_) xs.push_back(v.pt.x_alg());
    for (int k = 0; k < n_; ++k) {
        const Curve& c = arr_[k];
        if (c.kind == CurveKind::Line) {
            if (c.is_vertical_line()) xs.push_back(RealAlgebraic(-c.F / c.D));
            continue;
        }
        if (c.C != 0) {
            Poly disc = c.disc_y();
            if (disc.degree() >= 1)
                for (auto& rm : isolate_real_roots(disc)) xs.push_back(std::move(rm.root));
        } else if (c.B != 0) {
            xs.push_back(RealAlgebraic(-c.E / c.B));  // vertical asymptote
        }
    }
    std::sort(xs.begin(), xs.end(),
              [](const RealAlgebraic& a, const RealAlgebraic& b) { return compare(a, b) < 0; });
    for (auto& x : xs)
        if (crits_.empty() || compare(crits_.back(), x) != 0) crits_.push_back(std::move(x));
}

void ComplexBuilder::build_slabs() {
    int m = static_cast<int>(crits_.size());
    slabs_.resize(static_cast<size_t>(m) + 1);
    for (int s = 0; s <= m; ++s) {
        Slab& slab = slabs_[static_cast<size_t>(s)];
        if (m == 0)
            slab.sample_x = 0;
        else if (s == 0)
            slab.sample_x = rational_below(crits_[0]);
        else if (s == m)
            slab.sample_x = rational_above(crits_[static_cast<size_t>(m) - 1]);
        else
            slab.sample_x = rational_strictly_between(crits_[static_cast<size_t>(s) - 1],
                                                      crits_[static_cast<size_t>(s)]);
        slab.arcs_of_curve.resize(static_cast<size_t>(n_));
        for (int k = 0; k < n_; ++k) {
            const Curve& c = arr_[k];
            if (c.is_vertical_line()) continue;
            for (auto& y : curve_y_roots(c, slab.sample_x)) {
                SlabArc a;
                a.curve = k;
                a.y = std::move(y);
                a.cell = -1;
                slab.arcs.push_back(std::move(a));
            }
        }
        std::sort(slab.arcs.begin(), slab.arcs.end(),
                  [](const SlabArc& a, const SlabArc& b) { return compare(a.y, b.y) < 0; });
        std::vector<int> seen(static_cast<size_t>(n_), 0);
        for (size_t i = 0; i < slab.arcs.size(); ++i) {
            SlabArc& a = slab.arcs[i];
            a.branch = seen[static_cast<size_t>(a.curve)]++;
            CellInfo info;
            info.role = Role::E;
            info.curve = a.curve;
            info.slab = s;
            info.arc_idx = static_cast<int>(i);
            info.unbounded = (s == 0 || s == m);
            a.cell = new_cell(info);
            slab.arcs_of_curve[static_cast<size_t>(a.curve)].push_back(static_cast<int>(i));
        }
        for (size_t r = 0; r <= slab.arcs.size(); ++r) {
            CellInfo info;
            info.role = Role::C;
            info.slab = s;
            info.region_idx = static_cast<int>(r);
            info.unbounded = (s == 0 || s == m || r == 0 || r == slab.arcs.size());
            slab.region_cells.push_back(new_cell(info));
        }
        // stacking incidences: arc r bounds regions r and r+1
        for (size_t r = 0; r < slab.arcs.size(); ++r) {
            incid_.push_back({slab.arcs[r].cell, slab.region_cells[r]});
            incid_.push_back({slab.arcs[r].cell, slab.region_cells[r + 1]});
        }
    }
}

void ComplexBuilder::build_lines() {
    lines_.resize(crits_.size());
    for (size_t li = 0; li < crits_.size(); ++li) {
        CritLine& line = lines_[li];
        line.x = crits_[li];
        line.points_of_curve.resize(static_cast<size_t>(n_));
        for (int k = 0; k < n_; ++k) {
            const Curve& c = arr_[k];
            if (c.is_vertical_line() && compare(line.x, Rational(-c.F / c.D)) == 0) {
                line.vline_curve = k;
            }
        }
        // vertices on this line, per curve
        std::vector<int> verts_here;
        for (size_t vi = 0; vi < verts_.size(); ++vi)
            if (compare(verts_[vi].pt.x_alg(), line.x) == 0) verts_here.push_back(static_cast<int>(vi));

        std::vector<LinePoint> pts;
        for (int vi : verts_here) {
            LinePoint p;
            p.kind = LinePoint::VertexPt;
            p.is_vertex = true;
            p.vertex_index = vi;
            p.y_exact = verts_[static_cast<size_t>(vi)].pt.y_alg();
            p.yint = p.y_exact.interval();
            p.have = true;
            pts.push_back(std::move(p));
        }
        for (int k = 0; k < n_; ++k) {
            const Curve& c = arr_[k];
            if (k == line.vline_curve) continue;
            if (c.is_vertical_line()) continue;
            int expected = 0;
            LinePoint proto;
            proto.curve = k;
            proto.x = line.x;
            if (c.kind == CurveKind::Line) {
                expected = 1;
                proto.kind = LinePoint::RatPt;
                proto.num = -Poly({c.F, c.D});
                proto.den = Poly::constant(c.E);
            } else if (c.C != 0) {
                int ds = sign_at_alg(c.disc_y(), line.x);
                expected = ds > 0 ? 2 : (ds == 0 ? 1 : 0);
                if (expected == 1) {
                    proto.kind = LinePoint::RatPt;
                    proto.num = Rational(-1) * c.yc1();
                    proto.den = Poly::constant(2 * c.C);
                } else {
                    proto.kind = LinePoint::QuadPt;
                    proto.qcurve = &arr_[k];
                }
            } else if (c.B != 0) {
                int gs = sign_at_alg(Poly({c.E, c.B}), line.x);
                expected = gs != 0 ? 1 : 0;
                proto.kind = LinePoint::RatPt;
                proto.num = Rational(-1) * c.yc0();
                proto.den = Poly({c.E, c.B});
            } else {
                expected = 1;
                proto.kind = LinePoint::RatPt;
                proto.num = Rational(-1) * c.yc0();
                proto.den = Poly::constant(c.E);
            }
            int on_vertices = 0;
            for (int vi : verts_here) {
                const auto& cs = verts_[static_cast<size_t>(vi)].curves;
                if (std::find(cs.begin(), cs.end(), k) != cs.end()) ++on_vertices;
            }
            int remaining = expected - on_vertices;
            if (remaining < 0) throw std::logic_error("more vertices than curve points on line");
            if (remaining == 0) continue;
            if (proto.kind == LinePoint::RatPt) {
                if (remaining != 1) throw std::logic_error("rational-point count mismatch");
                pts.push_back(proto);
                continue;
            }
            // quadratic case: expected == 2
            if (remaining == 2) {
                for (int b = 0; b < 2; ++b) {
                    LinePoint p = proto;
                    p.branch = b;
                    pts.push_back(std::move(p));
                }
                continue;
            }
            // one of the two branches is a vertex: keep the branch that
            // separates from every vertex of this curve on the line
            int vid = -1;
            for (int vi : verts_here) {
                const auto& cs = verts_[static_cast<size_t>(vi)].curves;
                if (std::find(cs.begin(), cs.end(), k) != cs.end()) vid = vi;
            }
            LinePoint cand0 = proto, cand1 = proto;
            cand0.branch = 0;
            cand1.branch = 1;
            RealAlgebraic vy = verts_[static_cast<size_t>(vid)].pt.y_alg();
            bool resolved = false;
            for (int it = 0; it < kMaxLoops && !resolved; ++it) {
                bool d0 = disjoint(cand0.interval(), vy.interval());
                bool d1 = disjoint(cand1.interval(), vy.interval());
                if (d0 != d1) {
                    pts.push_back(d0 ? cand0 : cand1);
                    resolved = true;
                } else {
                    cand0.refine_once();
                    cand1.refine_once();
                    vy = vy.refined().refined();
                }
            }
            if (!resolved) throw std::logic_error("vertex branch disambiguation stalled");
        }

        // sort by y
        std::vector<size_t> order(pts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return line_point_less(pts[a], pts[b]); });
        for (size_t oi : order) line.pts.push_back(std::move(pts[oi]));
        for (size_t pi = 0; pi < line.pts.size(); ++pi) {
            const LinePoint& p = line.pts[pi];
            if (!p.is_vertex)
                line.points_of_curve[static_cast<size_t>(p.curve)].push_back(static_cast<int>(pi));
            else
                for (int k : verts_[static_cast<size_t>(p.vertex_index)].curves)
                    if (k != line.vline_curve)
                        line.points_of_curve[static_cast<size_t>(k)].push_back(static_cast<int>(pi));
        }

        // cells on the line
        for (size_t pi = 0; pi < line.pts.size(); ++pi) {
            CellInfo info;
            const LinePoint& p = line.pts[pi];
            if (p.is_vertex) {
                info.role = Role::V;
                info.vertex = p.vertex_index;
            } else {
                info.role = Role::E;
                info.curve = p.curve;
            }
            info.line = static_cast<int>(li);
            line.point_cells.push_back(new_cell(info));
        }
        size_t nseg = line.pts.size() + 1;
        for (size_t m = 0; m < nseg; ++m) {
            CellInfo info;
            if (line.vline_curve >= 0) {
                info.role = Role::E;
                info.curve = line.vline_curve;
            } else {
                info.role = Role::C;
            }
            info.line = static_cast<int>(li);
            info.seg_idx = static_cast<int>(m);
            info.unbounded = (m == 0 || m == nseg - 1);
            line.segment_cells.push_back(new_cell(info));
        }
        // point-segment incidences
        for (size_t m = 0; m < nseg; ++m) {
            if (m > 0) incid_.push_back({line.point_cells[m - 1], line.segment_cells[m]});
            if (m < line.pts.size()) incid_.push_back({line.point_cells[m], line.segment_cells[m]});
        }
    }
}

ArcLimit ComplexBuilder::arc_limit(const Slab& slab, const SlabArc& arc, CritLine& line) {
    const auto& cpts = line.points_of_curve[static_cast<size_t>(arc.curve)];
    const Curve& c = arr_[arc.curve];
    if (cpts.empty()) {
        // vertical asymptote: y = -yc0/(Bx+E) near the line
        ArcLimit lim;
        lim.kind = ArcLimit::ToInf;
        int sn = sign_at_alg(c.yc0(), line.x);
        int sg = sign_of(Poly({c.E, c.B}).eval(slab.sample_x));
        if (sn == 0 || sg == 0) throw std::logic_error("arc_limit: degenerate asymptote");
        lim.inf_sign = -sn * sg;
        return lim;
    }
    ArcLimit lim;
    lim.kind = ArcLimit::ToPoint;
    if (cpts.size() == 1) {
        lim.point = cpts[0];
    } else if (cpts.size() == 2) {
        int nb = static_cast<int>(slab.arcs_of_curve[static_cast<size_t>(arc.curve)].size());
        if (nb != 2) throw std::logic_error("arc_limit: branch/point mismatch");
        lim.point = arc.branch == 0 ? cpts[0] : cpts[1];
    } else {
        throw std::logic_error("arc_limit: more than two curve points on a line");
    }
    return lim;
}

void ComplexBuilder::connect() {
    for (size_t li = 0; li < lines_.size(); ++li) {
        CritLine& line = lines_[li];
        int npts = static_cast<int>(line.pts.size());
        for (int side = 0; side < 2; ++side) {
            Slab& slab = slabs_[li + static_cast<size_t>(side)];  // left: slab li, right: li+1
            int narcs = static_cast<int>(slab.arcs.size());
            std::vector<ArcLimit> limits(static_cast<size_t>(narcs));
            for (int a = 0; a < narcs; ++a) {
                limits[static_cast<size_t>(a)] = arc_limit(slab, slab.arcs[static_cast<size_t>(a)], line);
                const ArcLimit& lim = limits[static_cast<size_t>(a)];
                int acell = slab.arcs[static_cast<size_t>(a)].cell;
                if (lim.kind == ArcLimit::ToInf) {
                    cells_[static_cast<size_t>(acell)].unbounded = true;
                } else {
                    int pcell = line.point_cells[static_cast<size_t>(lim.point)];
                    if (line.pts[static_cast<size_t>(lim.point)].is_vertex)
                        incid_.push_back({pcell, acell});
                    else
                        unions_.push_back({pcell, acell});
                }
            }
            // region limits
            for (int r = 0; r <= narcs; ++r) {
                int rcell = slab.region_cells[static_cast<size_t>(r)];
                int L = -1, U = npts;
                bool empty = false;
                if (r > 0) {
                    const ArcLimit& lim = limits[static_cast<size_t>(r) - 1];
                    if (lim.kind == ArcLimit::ToPoint) {
                        L = lim.point;
                    } else {
                        cells_[static_cast<size_t>(rcell)].unbounded = true;
                        if (lim.inf_sign > 0) empty = true;  // lower bound escapes to +inf
                    }
                }
                if (r < narcs) {
                    const ArcLimit& lim = limits[static_cast<size_t>(r)];
                    if (lim.kind == ArcLimit::ToPoint) {
                        U = lim.point;
                    } else {
                        cells_[static_cast<size_t>(rcell)].unbounded = true;
                        if (lim.inf_sign < 0) empty = true;  // upper bound escapes to -inf
                    }
                }
                if (empty) continue;
                for (int m = L + 1; m <= U && m <= npts; ++m) {
                    if (m < 0) continue;
                    int scell = line.segment_cells[static_cast<size_t>(m)];
                    if (line.vline_curve >= 0)
                        incid_.push_back({scell, rcell});
                    else
                        unions_.push_back({scell, rcell});
                }
                for (int p = std::max(L, 0); p <= std::min(U, npts - 1); ++p)
                    incid_.push_back({line.point_cells[static_cast<size_t>(p)], rcell});
            }
        }
    }
}

void ComplexBuilder::assemble(FaceComplex& out) {
    int ncells = static_cast<int>(cells_.size());
    UnionFind uf(ncells);
    for (auto& [a, b] : unions_) {
        if (cells_[static_cast<size_t>(a)].role != cells_[static_cast<size_t>(b)].role)
            throw std::logic_error("assemble: union across roles");
        uf.unite(a, b);
    }
    // gather components
    std::map<int, std::vector<int>> comps;
    for (int c = 0; c < ncells; ++c) comps[uf.find(c)].push_back(c);

    struct ProtoFace {
        Role role;
        std::vector<int> cells;
        AlgebraicPoint sample;
        bool bounded = true;
        int curve = -1;
        int vertex = -1;
    };
    std::vector<ProtoFace> protos;
    std::map<int, int> root_to_proto;
    for (auto& [root, cs] : comps) {
        ProtoFace pf;
        pf.role = cells_[static_cast<size_t>(cs.front())].role;
        for (int c : cs) {
            const CellInfo& info = cells_[static_cast<size_t>(c)];
            if (info.role != pf.role) throw std::logic_error("assemble: mixed face roles");
            if (info.unbounded) pf.bounded = false;
            if (info.role == Role::E && info.curve >= 0) pf.curve = info.curve;
            if (info.role == Role::V) pf.vertex = info.vertex;
        }
        pf.cells = cs;
        root_to_proto[root] = static_cast<int>(protos.size());
        protos.push_back(std::move(pf));
    }

    // samples
    for (auto& pf : protos) {
        if (pf.role == Role::V) {
            pf.sample = verts_[static_cast<size_t>(pf.vertex)].pt;
            continue;
        }
        if (pf.role == Role::E) {
            // prefer a slab arc cell
            int best = -1;
            for (int c : pf.cells) {
                const CellInfo& info = cells_[static_cast<size_t>(c)];
                if (info.slab >= 0 && info.arc_idx >= 0 && (best < 0 || c < best)) best = c;
            }
            if (best >= 0) {
                const CellInfo& info = cells_[static_cast<size_t>(best)];
                const Slab& slab = slabs_[static_cast<size_t>(info.slab)];
                const SlabArc& arc = slab.arcs[static_cast<size_t>(info.arc_idx)];
                pf.sample = AlgebraicPoint::from_rational_x(slab.sample_x, arc.y);
            } else {
                // vertical-line edge: a segment on the carrying line
                int seg = -1;
                for (int c : pf.cells) {
                    const CellInfo& info = cells_[static_cast<size_t>(c)];
                    if (info.line >= 0 && info.seg_idx >= 0 && (seg < 0 || c < seg)) seg = c;
                }
                if (seg < 0) throw std::logic_error("edge face without sampleable cell");
                const CellInfo& info = cells_[static_cast<size_t>(seg)];
                CritLine& line = lines_[static_cast<size_t>(info.line)];
                const Curve& vl = arr_[line.vline_curve];
                Rational x = -vl.F / vl.D;
                int m = info.seg_idx;
                int npts = static_cast<int>(line.pts.size());
                Rational y;
                if (npts == 0)
                    y = 0;
                else if (m == 0)
                    y = rational_below(line.pts[0].y_exact);
                else if (m == npts)
                    y = rational_above(line.pts[static_cast<size_t>(npts) - 1].y_exact);
                else
                    y = rational_strictly_between(line.pts[static_cast<size_t>(m) - 1].y_exact,
                                                  line.pts[static_cast<size_t>(m)].y_exact);
                pf.sample = AlgebraicPoint(x, y);
            }
            continue;
        }
        // chamber: smallest region cell
        int best = -1;
        for (int c : pf.cells) {
            const CellInfo& info = cells_[static_cast<size_t>(c)];
            if (info.slab >= 0 && info.region_idx >= 0 && (best < 0 || c < best)) best = c;
        }
        if (best < 0) throw std::logic_error("chamber face without region cell");
        const CellInfo& info = cells_[static_cast<size_t>(best)];
        const Slab& slab = slabs_[static_cast<size_t>(info.slab)];
        int r = info.region_idx;
        int narcs = static_cast<int>(slab.arcs.size());
        Rational y;
        if (narcs == 0)
            y = 0;
        else if (r == 0)
            y = rational_below(slab.arcs[0].y);
        else if (r == narcs)
            y = rational_above(slab.arcs[static_cast<size_t>(narcs) - 1].y);
        else
            y = rational_strictly_between(slab.arcs[static_cast<size_t>(r) - 1].y,
                                          slab.arcs[static_cast<size_t>(r)].y);
        pf.sample = AlgebraicPoint(slab.sample_x, y);
    }

    // deterministic face order: vertices by point, edges by (curve, sample), chambers by sample
    std::vector<int> order(protos.size());
    std::iota(order.begin(), order.end(), 0);
    auto role_rank = [](Role r) { return r == Role::V ? 0 : (r == Role::E ? 1 : 2); };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const ProtoFace &pa = protos[static_cast<size_t>(a)], &pb = protos[static_cast<size_t>(b)];
        if (role_rank(pa.role) != role_rank(pb.role)) return role_rank(pa.role) < role_rank(pb.role);
        if (pa.role == Role::E && pa.curve != pb.curve) return pa.curve < pb.curve;
        return compare_points(pa.sample, pb.sample) < 0;
    });

    std::vector<int> proto_to_face(protos.size());
    int nv = 0, ne = 0, nc = 0;
    out.faces_.resize(protos.size());
    for (size_t fi = 0; fi < order.size(); ++fi) {
        const ProtoFace& pf = protos[static_cast<size_t>(order[fi])];
        Face f;
        f.id = static_cast<int>(fi);
        f.dim = pf.role == Role::V ? 0 : (pf.role == Role::E ? 1 : 2);
        f.label = pf.role == Role::V ? ("v" + std::to_string(nv++))
                                     : (pf.role == Role::E ? ("e" + std::to_string(ne++))
                                                           : ("c" + std::to_string(nc++)));
        f.sample = pf.sample;
        f.bounded = pf.bounded;
        // exact signs at the sample; support = zero set
        std::vector<Sign> sv;
        for (int k = 0; k < n_; ++k) {
            int s = arr_[k].sign_at(f.sample);
            sv.push_back(sign_from_int(s));
            if (s == 0) f.support.push_back(k);
        }
        f.signs = SignVector(std::move(sv));
        if (f.dim == 2 && !f.support.empty()) throw std::logic_error("chamber sample on a curve");
        if (f.dim == 1 && !(f.support.size() == 1 && f.support[0] == pf.curve))
            throw std::logic_error("edge sample support mismatch");
        if (f.dim == 0 && f.support != verts_[static_cast<size_t>(pf.vertex)].curves)
            throw std::logic_error("vertex support mismatch");
        out.faces_[fi] = std::move(f);
        proto_to_face[static_cast<size_t>(order[fi])] = static_cast<int>(fi);
    }

    auto cell_face = [&](int cell) {
        return proto_to_face[static_cast<size_t>(root_to_proto.at(uf.find(cell)))];
    };

    int nf = static_cast<int>(protos.size());
    out.leq_.assign(static_cast<size_t>(nf), std::vector<bool>(static_cast<size_t>(nf), false));
    for (int f = 0; f < nf; ++f) out.leq_[static_cast<size_t>(f)][static_cast<size_t>(f)] = true;
    for (auto& [lo, hi] : incid_) {
        int a = cell_face(lo), b = cell_face(hi);
        if (a == b) {
            if (out.faces_[static_cast<size_t>(a)].dim == out.faces_[static_cast<size_t>(b)].dim)
                continue;
            throw std::logic_error("incidence inside one face");
        }
        out.leq_[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    }
    // transitivity: vertex <= edge <= chamber
    for (int e = 0; e < nf; ++e) {
        if (out.faces_[static_cast<size_t>(e)].dim != 1) continue;
        for (int v = 0; v < nf; ++v) {
            if (out.faces_[static_cast<size_t>(v)].dim != 0 ||
                !out.leq_[static_cast<size_t>(v)][static_cast<size_t>(e)])
                continue;
            for (int c = 0; c < nf; ++c)
                if (out.faces_[static_cast<size_t>(c)].dim == 2 &&
                    out.leq_[static_cast<size_t>(e)][static_cast<size_t>(c)])
                    out.leq_[static_cast<size_t>(v)][static_cast<size_t>(c)] = true;
        }
    }

    // adjacency structures
    out.edge_chambers_.assign(static_cast<size_t>(nf), {-1, -1});
    out.vertex_edges_.assign(static_cast<size_t>(nf), {});
    for (int e = 0; e < nf; ++e) {
        if (out.faces_[static_cast<size_t>(e)].dim != 1) continue;
        std::vector<int> cs;
        for (int c = 0; c < nf; ++c)
            if (out.faces_[static_cast<size_t>(c)].dim == 2 &&
                out.leq_[static_cast<size_t>(e)][static_cast<size_t>(c)])
                cs.push_back(c);
        if (cs.size() != 2)
            throw std::logic_error("edge with " + std::to_string(cs.size()) + " incident chambers");
        out.edge_chambers_[static_cast<size_t>(e)] = {cs[0], cs[1]};
    }
    for (int v = 0; v < nf; ++v) {
        if (out.faces_[static_cast<size_t>(v)].dim != 0) continue;
        for (int e = 0; e < nf; ++e)
            if (out.faces_[static_cast<size_t>(e)].dim == 1 &&
                out.leq_[static_cast<size_t>(v)][static_cast<size_t>(e)])
                out.vertex_edges_[static_cast<size_t>(v)].push_back(e);
    }

    // curve chains
    out.chains_.assign(static_cast<size_t>(n_), {});
    for (int k = 0; k < n_; ++k) {
        std::vector<int> edges = out.edges_on_curve(k);
        std::vector<int> vertsk = out.vertices_on_curve(k);
        std::map<int, std::vector<int>> vedges;  // vertex -> incident k-edges
        std::map<int, std::vector<int>> everts;  // edge -> endpoint vertices
        for (int v : vertsk)
            for (int e : edges)
                if (out.leq_[static_cast<size_t>(v)][static_cast<size_t>(e)]) {
                    vedges[v].push_back(e);
                    everts[e].push_back(v);
                }
        bool oval = arr_[k].is_oval();
        std::map<int, bool> used_edge;
        // an oval cut at a single point: one edge closing on one vertex
        if (oval && vertsk.size() == 1 && edges.size() == 1) {
            FaceComplex::Chain ch;
            ch.cycle = true;
            ch.nodes = {vertsk[0], edges[0]};
            out.chains_[static_cast<size_t>(k)].push_back(std::move(ch));
            continue;
        }
        for (auto& [v, es] : vedges)
            if (es.size() != 2)
                throw std::logic_error("vertex with degree != 2 along its curve");
        auto sample_less = [&](int a, int b) {
            return compare_points(out.faces_[static_cast<size_t>(a)].sample,
                                  out.faces_[static_cast<size_t>(b)].sample) < 0;
        };
        // path components start from end edges (exactly 1 endpoint)
        for (int e : edges) {
            if (used_edge[e] || everts[e].size() != 1) continue;
            FaceComplex::Chain ch;
            ch.cycle = false;
            int cur_e = e, prev_v = -1;
            while (true) {
                ch.nodes.push_back(cur_e);
                used_edge[cur_e] = true;
                int next_v = -1;
                for (int v : everts[cur_e])
                    if (v != prev_v) next_v = v;
                if (next_v < 0) break;
                ch.nodes.push_back(next_v);
                int next_e = -1;
                for (int e2 : vedges[next_v])
                    if (e2 != cur_e) next_e = e2;
                if (next_e < 0) throw std::logic_error("chain walk failed");
                prev_v = next_v;
                cur_e = next_e;
            }
            if (sample_less(ch.nodes.back(), ch.nodes.front()))
                std::reverse(ch.nodes.begin(), ch.nodes.end());
            out.chains_[static_cast<size_t>(k)].push_back(std::move(ch));
        }
        // remaining edges with two endpoints form cycles
        while (true) {
            int start_v = -1;
            for (int v : vertsk) {
                bool free_v = !vedges[v].empty() && !used_edge[vedges[v][0]];
                if (free_v && (start_v < 0 || sample_less(v, start_v))) start_v = v;
            }
            if (start_v < 0) break;
            int e0 = vedges[start_v][0], e1 = vedges[start_v][1];
            FaceComplex::Chain ch;
            ch.cycle = true;
            int cur_v = start_v;
            int cur_e = sample_less(e0, e1) ? e0 : e1;
            while (true) {
                ch.nodes.push_back(cur_v);
                ch.nodes.push_back(cur_e);
                used_edge[cur_e] = true;
                int next_v = -1;
                for (int v2 : everts[cur_e])
                    if (v2 != cur_v) next_v = v2;
                if (next_v < 0 || next_v == start_v) break;
                int next_e = -1;
                for (int e2 : vedges[next_v])
                    if (e2 != cur_e) next_e = e2;
                cur_v = next_v;
                cur_e = next_e;
            }
            out.chains_[static_cast<size_t>(k)].push_back(std::move(ch));
        }
        // whole components without vertices
        for (int e : edges) {
            if (used_edge[e] || !everts[e].empty()) continue;
            FaceComplex::Chain ch;
            ch.cycle = oval;
            ch.nodes = {e};
            out.chains_[static_cast<size_t>(k)].push_back(std::move(ch));
        }
    }

    // point-location tables
    for (size_t s = 0; s < slabs_.size(); ++s) {
        const Slab& slab = slabs_[s];
        FaceComplex::LocSlab ls;
        ls.sample_x = slab.sample_x;
        for (const SlabArc& a : slab.arcs)
            ls.arcs.push_back({a.curve, a.branch, cell_face(a.cell)});
        for (int rc : slab.region_cells) ls.region_faces.push_back(cell_face(rc));
        out.loc_slabs_.push_back(std::move(ls));
    }
    out.critical_xs_ = crits_;
    out.intersections_ = std::move(inter_);
}

FaceComplex ComplexBuilder::build() {
    compute_intersections();
    compute_vertices();
    compute_criticals();
    build_slabs();
    build_lines();
    connect();
    FaceComplex out;
    out.arr_ = arr_;
    assemble(out);
    return out;
}

FaceComplex decompose(const Arrangement& arr) { return ComplexBuilder(arr).build(); }

bool FaceComplex::leq(int a, int b) const {
    return leq_.at(static_cast<size_t>(a)).at(static_cast<size_t>(b));
}

std::vector<std::pair<int, int>> FaceComplex::order_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (a != b && leq_[static_cast<size_t>(a)][static_cast<size_t>(b)]) out.push_back({a, b});
    return out;
}

std::vector<std::pair<int, int>> FaceComplex::hasse_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (auto& [a, b] : order_pairs()) {
        bool covered = true;
        for (int m = 0; m < size() && covered; ++m)
            if (m != a && m != b && leq_[static_cast<size_t>(a)][static_cast<size_t>(m)] &&
                leq_[static_cast<size_t>(m)][static_cast<size_t>(b)])
                covered = false;
        if (covered) out.push_back({a, b});
    }
    return out;
}

std::pair<int, int> FaceComplex::incident_chambers(int edge_id) const {
    if (face(edge_id).dim != 1) throw std::invalid_argument("incident_chambers: not an edge");
    return edge_chambers_.at(static_cast<size_t>(edge_id));
}

std::vector<int> FaceComplex::incident_edges(int vertex_id) const {
    if (face(vertex_id).dim != 0) throw std::invalid_argument("incident_edges: not a vertex");
    return vertex_edges_.at(static_cast<size_t>(vertex_id));
}

std::vector<int> FaceComplex::chambers() const {
    std::vector<int> out;
    for (const Face& f : faces_)
        if (f.dim == 2) out.push_back(f.id);
    return out;
}

std::vector<int> FaceComplex::vertices() const {
    std::vector<int> out;
    for (const Face& f : faces_)
        if (f.dim == 0) out.push_back(f.id);
    return out;
}

std::vector<int> FaceComplex::edges_on_curve(int k) const {
    std::vector<int> out;
    for (const Face& f : faces_)
        if (f.dim == 1 && f.support.size() == 1 && f.support[0] == k) out.push_back(f.id);
    return out;
}

std::vector<int> FaceComplex::vertices_on_curve(int k) const {
    std::vector<int> out;
    for (const Face& f : faces_)
        if (f.dim == 0 && std::find(f.support.begin(), f.support.end(), k) != f.support.end())
            out.push_back(f.id);
    return out;
}

const std::vector<FaceComplex::Chain>& FaceComplex::chains(int curve) const {
    return chains_.at(static_cast<size_t>(curve));
}

const std::vector<IntersectionRecord>& FaceComplex::pair_intersections(int i, int j) const {
    if (i > j) std::swap(i, j);
    return intersections_.at({i, j});
}

int FaceComplex::vertex_at(const AlgebraicPoint& p) const {
    for (const Face& f : faces_) {
        if (f.dim != 0) continue;
        if (points_equal(f.sample, p)) return f.id;
    }
    return -1;
}

SignVector FaceComplex::signs_at(const AlgebraicPoint& p) const {
    std::vector<Sign> sv;
    for (int k = 0; k < arr_.size(); ++k) sv.push_back(sign_from_int(arr_[k].sign_at(p)));
    return SignVector(std::move(sv));
}

int FaceComplex::locate(const AlgebraicPoint& p) const {
    if (!p.x_alg().is_rational())
        throw std::invalid_argument("locate: x-coordinate must be rational");
    const Rational& px = p.x_alg().rational_value();
    size_t s = 0;
    bool on_critical = false;
    for (; s < critical_xs_.size(); ++s) {
        int c = compare(critical_xs_[s], px);
        if (c == 0) {
            on_critical = true;
            break;
        }
        if (c > 0) break;
    }
    if (on_critical) {
        // Nudge right along y = py, exactly: stop before the first curve
        // crossing and before the next critical value. Valid only when the
        // point lies on no curve of this arrangement (interior of a chamber).
        if (!p.y_alg().is_rational())
            throw std::invalid_argument("locate: critical x needs a rational y");
        const Rational& py = p.y_alg().rational_value();
        for (int k = 0; k < arr_.size(); ++k)
            if (arr_[k].sign_at(p) == 0)
                throw std::invalid_argument("locate: point on a curve at a critical line");
        RealAlgebraic barrier = s + 1 < critical_xs_.size()
                                    ? critical_xs_[s + 1]
                                    : RealAlgebraic(px + 2);
        for (int k = 0; k < arr_.size(); ++k) {
            const Curve& c = arr_[k];
            // f(x, py) as a univariate polynomial in x
            Poly fx({c.C * py * py + c.E * py + c.F, c.B * py + c.D, c.A});
            if (fx.is_zero()) throw std::logic_error("locate: curve contains the sweep row");
            for (auto& rm : isolate_real_roots(fx))
                if (compare(rm.root, px) > 0 && compare(rm.root, barrier) < 0)
                    barrier = rm.root;
        }
        Rational x2 = rational_strictly_between(RealAlgebraic(px), barrier);
        return locate(AlgebraicPoint(x2, py));
    }
    const LocSlab& slab = loc_slabs_.at(s);
    // roots per curve at px, consumed bottom-up per branch index
    std::vector<std::vector<RealAlgebraic>> roots(static_cast<size_t>(arr_.size()));
    for (int k = 0; k < arr_.size(); ++k)
        if (!arr_[k].is_vertical_line()) roots[static_cast<size_t>(k)] = curve_y_roots(arr_[k], px);
    int below = 0;
    for (const LocArc& a : slab.arcs) {
        const RealAlgebraic& y = roots[static_cast<size_t>(a.curve)].at(static_cast<size_t>(a.branch));
        int c = compare(p.y_alg(), y);
        if (c == 0) return a.face;
        if (c > 0) ++below;
    }
    return slab.region_faces.at(static_cast<size_t>(below));
}

}  // namespace clband
