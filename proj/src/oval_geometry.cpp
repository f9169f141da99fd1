#include "clband/oval_geometry.hpp"

#include <algorithm>
#include <cmath>

namespace clband {

namespace {
constexpr int kMaxLoops = 100000;

QInterval interval_dist(const std::pair<QInterval, QInterval>& a,
                        const std::pair<QInterval, QInterval>& b, unsigned prec) {
    QInterval dx = a.first - b.first, dy = a.second - b.second;
    return sqrt_enclosure(dx * dx + dy * dy, prec);
}
}  // namespace

OvalFrame::OvalFrame(Curve conic) : c_(std::move(conic)) {
    if (!c_.is_oval()) throw std::invalid_argument("OvalFrame: curve is not a bounded conic");
    auto ctr = c_.center();
    cx_ = ctr.first;
    cy_ = ctr.second;
}

AlgebraicPoint OvalFrame::antipode(const AlgebraicPoint& p) const {
    return p.reflected_through(cx_, cy_);
}

int OvalFrame::cross_sign(const AlgebraicPoint& p, const AlgebraicPoint& q) const {
    for (int depth = 1; depth < kMaxLoops; ++depth) {
        auto bp = p.enclosure(depth);
        auto bq = q.enclosure(depth);
        QInterval cr = (bp.first - QInterval(cx_)) * (bq.second - QInterval(cy_)) -
                       (bp.second - QInterval(cy_)) * (bq.first - QInterval(cx_));
        int s = cr.definite_sign();
        if (s != 0) return s;
    }
    throw std::logic_error("cross_sign: refinement stalled");
}

OvalFrame::Ray OvalFrame::ray_relation(const AlgebraicPoint& p, const AlgebraicPoint& q) const {
    if (points_equal(q, antipode(p))) return Ray::Opposite;
    return cross_sign(p, q) > 0 ? Ray::Ccw : Ray::Cw;
}

bool OvalFrame::cw_between(const AlgebraicPoint& a, const AlgebraicPoint& b,
                           const AlgebraicPoint& c) const {
    auto rank = [](Ray r) { return r == Ray::Cw ? 0 : (r == Ray::Opposite ? 1 : 2); };
    Ray rb = ray_relation(a, b), rc = ray_relation(a, c);
    if (rb != rc) return rank(rb) < rank(rc);
    if (rb == Ray::Opposite) throw std::logic_error("cw_between: b and c both antipodal to a");
    // same open half-turn from a: clockwise order within it
    return ray_relation(b, c) == Ray::Cw;
}

AlgebraicPoint OvalFrame::point_at_direction(const Rational& dx, const Rational& dy) const {
    if (dx == 0 && dy == 0) throw std::invalid_argument("point_at_direction: zero direction");
    // f(cx + t dx, cy + t dy) as a quadratic in t
    Rational q2 = c_.A * dx * dx + c_.B * dx * dy + c_.C * dy * dy;
    Rational fx = 2 * c_.A * cx_ + c_.B * cy_ + c_.D;
    Rational fy = c_.B * cx_ + 2 * c_.C * cy_ + c_.E;
    Rational q1 = fx * dx + fy * dy;  // zero at the center, kept for generality
    Rational q0 = c_.eval(cx_, cy_);
    Poly quad({q0, q1, q2});
    for (auto& rm : isolate_real_roots(quad)) {
        if (compare(rm.root, Rational(0)) > 0) {
            Poly X({cx_, dx}), Y({cy_, dy});
            return AlgebraicPoint::make(rm.root, RatFunc{X, Poly::constant(Rational(1))},
                                        RatFunc{Y, Poly::constant(Rational(1))});
        }
    }
    throw std::logic_error("point_at_direction: no forward intersection");
}

AlgebraicPoint OvalFrame::point_in_cw_gap(const AlgebraicPoint& a, const AlgebraicPoint& b) const {
    auto angle_of = [&](const AlgebraicPoint& p, int depth) {
        auto box = p.enclosure(depth);
        double x = to_double(box.first.mid()) - to_double(cx_);
        double y = to_double(box.second.mid()) - to_double(cy_);
        return std::atan2(y, x);
    };
    for (int depth = 2; depth < 40; ++depth) {
        double ta = angle_of(a, depth), tb = angle_of(b, depth);
        // clockwise from a to b: decreasing angle; span in (0, 2pi)
        double span = ta - tb;
        while (span <= 0) span += 2 * 3.14159265358979323846;
        for (int frac = 1; frac < 8; ++frac) {
            double theta = ta - span * frac / 8.0;
            Rational dx(Int(std::llround(std::cos(theta) * (1 << 20))), Int(1) << 20);
            Rational dy(Int(std::llround(std::sin(theta) * (1 << 20))), Int(1) << 20);
            if (dx == 0 && dy == 0) continue;
            AlgebraicPoint cand = point_at_direction(dx, dy);
            if (points_equal(cand, a) || points_equal(cand, b)) continue;
            if (cw_between(a, cand, b)) return cand;
        }
    }
    throw std::logic_error("point_in_cw_gap: no point found");
}

QInterval OvalFrame::arc_length_cw(const AlgebraicPoint& from, const AlgebraicPoint& to,
                                   int effort) const {
    if (points_equal(from, to)) throw std::invalid_argument("arc_length_cw: equal endpoints");
    // breakpoints: axis-extreme points of the oval (vertical/horizontal tangents)
    std::vector<AlgebraicPoint> breaks;
    for (auto& rm : isolate_real_roots(c_.disc_y())) {
        Poly num = Rational(-1) * c_.yc1();
        Poly den = Poly::constant(2 * c_.C);
        breaks.push_back(AlgebraicPoint::make(rm.root, RatFunc::identity(), RatFunc{num, den}));
    }
    for (auto& rm : isolate_real_roots(c_.disc_x())) {
        Poly num = Rational(-1) * c_.xc1();
        Poly den = Poly::constant(2 * c_.A);
        breaks.push_back(AlgebraicPoint::make(rm.root, RatFunc{num, den}, RatFunc::identity()));
    }
    std::vector<AlgebraicPoint> mids;
    for (auto& p : breaks) {
        if (points_equal(p, from) || points_equal(p, to)) continue;
        if (cw_between(from, p, to)) mids.push_back(p);
    }
    std::sort(mids.begin(), mids.end(), [&](const AlgebraicPoint& u, const AlgebraicPoint& v) {
        return cw_between(from, u, v);
    });
    std::vector<AlgebraicPoint> nodes;
    nodes.push_back(from);
    for (auto& p : mids) nodes.push_back(p);
    nodes.push_back(to);

    // refine pieces until the tangent directions are certified within a quarter turn
    unsigned prec = 12 + 4 * static_cast<unsigned>(std::max(effort, 0));
    int box_depth = 2 + effort;
    auto grad_box = [&](const AlgebraicPoint& p) {
        auto box = p.enclosure(box_depth);
        QInterval gx = Rational(2 * c_.A) * box.first + c_.B * box.second + QInterval(c_.D);
        QInterval gy = c_.B * box.first + Rational(2 * c_.C) * box.second + QInterval(c_.E);
        return std::make_pair(gx, gy);
    };
    for (int pass = 0; pass < 12; ++pass) {
        bool split = false;
        std::vector<AlgebraicPoint> next;
        for (size_t i = 0; i + 1 < nodes.size(); ++i) {
            next.push_back(nodes[i]);
            auto g1 = grad_box(nodes[i]), g2 = grad_box(nodes[i + 1]);
            QInterval dot = g1.first * g2.first + g1.second * g2.second;
            if (dot.definite_sign() <= 0) {
                next.push_back(point_in_cw_gap(nodes[i], nodes[i + 1]));
                split = true;
            }
        }
        next.push_back(nodes.back());
        nodes = std::move(next);
        if (!split) break;
    }
    // extra uniform splits sharpen both bounds as effort grows
    for (int e = 0; e < effort && nodes.size() < 48; ++e) {
        std::vector<AlgebraicPoint> next;
        for (size_t i = 0; i + 1 < nodes.size(); ++i) {
            next.push_back(nodes[i]);
            next.push_back(point_in_cw_gap(nodes[i], nodes[i + 1]));
        }
        next.push_back(nodes.back());
        nodes = std::move(next);
    }

    Rational lo(0), hi(0);
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        const AlgebraicPoint &P = nodes[i], &Q = nodes[i + 1];
        int depth = box_depth;
        for (int tries = 0;; ++tries, ++depth) {
            if (tries > 60) throw std::logic_error("arc_length_cw: tangent refinement stalled");
            auto bp = P.enclosure(depth), bq = Q.enclosure(depth);
            QInterval chord = interval_dist(bp, bq, prec);
            // tangent lines: grad(P) . (X - P) = 0
            QInterval a1 = Rational(2 * c_.A) * bp.first + c_.B * bp.second + QInterval(c_.D);
            QInterval b1 = c_.B * bp.first + Rational(2 * c_.C) * bp.second + QInterval(c_.E);
            QInterval a2 = Rational(2 * c_.A) * bq.first + c_.B * bq.second + QInterval(c_.D);
            QInterval b2 = c_.B * bq.first + Rational(2 * c_.C) * bq.second + QInterval(c_.E);
            QInterval det = a1 * b2 - a2 * b1;
            if (det.definite_sign() == 0) continue;
            QInterval r1 = a1 * bp.first + b1 * bp.second;
            QInterval r2 = a2 * bq.first + b2 * bq.second;
            QInterval tx = (r1 * b2 - r2 * b1) / det;
            QInterval ty = (a1 * r2 - a2 * r1) / det;
            QInterval upper =
                interval_dist(bp, {tx, ty}, prec) + interval_dist({tx, ty}, bq, prec);
            lo += chord.lo;
            hi += upper.hi;
            break;
        }
    }
    if (lo > hi) throw std::logic_error("arc_length_cw: inverted enclosure");
    return QInterval(lo, hi);
}

}  // namespace clband
