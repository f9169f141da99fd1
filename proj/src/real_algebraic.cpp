#include "clband/real_algebraic.hpp"

#include <cassert>
#include <stdexcept>

namespace clband {

namespace {
constexpr int kMaxRefineLoops = 100000;

[[noreturn]] void refinement_overrun(const char* where) {
    throw std::logic_error(std::string("refinement loop failed to converge in ") + where);
}
}  // namespace

RealAlgebraic::RealAlgebraic(Rational value) : lo_(value), hi_(value) {
    // defining polynomial q*x - p
    p_ = Poly({-num(value), den(value)}).normalized();
}

const Rational& RealAlgebraic::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value on irrational");
    return lo_;
}

RealAlgebraic RealAlgebraic::make_irrational(Poly p, Rational lo, Rational hi) {
    RealAlgebraic a(Rational(0));
    a.p_ = p.normalized();
    a.lo_ = std::move(lo);
    a.hi_ = std::move(hi);
    if (a.lo_ >= a.hi_) throw std::invalid_argument("make_irrational: empty interval");
    int slo = sign_of(a.p_.eval(a.lo_)), shi = sign_of(a.p_.eval(a.hi_));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("make_irrational: interval is not isolating");
    return a;
}

RealAlgebraic RealAlgebraic::refined() const {
    if (is_rational()) return *this;
    Rational m = (lo_ + hi_) / 2;
    Rational pm = p_.eval(m);
    if (pm == 0) return RealAlgebraic(m);
    RealAlgebraic r = *this;
    if (sign_of(pm) == sign_of(p_.eval(lo_)))
        r.lo_ = m;
    else
        r.hi_ = m;
    return r;
}

RealAlgebraic RealAlgebraic::refined_to(const Rational& w) const {
    RealAlgebraic r = *this;
    for (int i = 0; i < kMaxRefineLoops && r.hi_ - r.lo_ > w; ++i) r = r.refined();
    return r;
}

double RealAlgebraic::approx() const {
    RealAlgebraic r = refined_to(Rational(1, Int(1) << 60));
    return to_double((r.lo_ + r.hi_) / 2);
}

int compare(const RealAlgebraic& a, const Rational& r) {
    if (a.is_rational()) {
        const Rational& v = a.rational_value();
        return v < r ? -1 : (v > r ? 1 : 0);
    }
    if (r <= a.lo()) return 1;   // root strictly inside (lo, hi)
    if (r >= a.hi()) return -1;
    int sr = sign_of(a.defining_poly().eval(r));
    if (sr == 0) return 0;
    int slo = sign_of(a.defining_poly().eval(a.lo()));
    // sign has not flipped at r  <=>  the root lies to the right of r
    return sr == slo ? 1 : -1;
}

int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
    if (b.is_rational()) return compare(a, b.rational_value());
    if (a.is_rational()) return -compare(b, a.rational_value());

    Poly g = poly_gcd(a.defining_poly(), b.defining_poly());
    if (g.degree() >= 1) {
        Rational ilo = std::max(a.lo(), b.lo());
        Rational ihi = std::min(a.hi(), b.hi());
        if (ilo <= ihi) {
            // Endpoints of the overlap cannot be roots of g (they would be
            // roots of a or b's defining polynomial at its own endpoint).
            int s1 = sign_of(g.eval(ilo)), s2 = sign_of(g.eval(ihi));
            if (s1 * s2 < 0) return 0;
        }
    }
    RealAlgebraic x = a, y = b;
    for (int i = 0; i < kMaxRefineLoops; ++i) {
        if (x.hi() < y.lo()) return -1;
        if (y.hi() < x.lo()) return 1;
        x = x.refined();
        y = y.refined();
    }
    refinement_overrun("compare");
}

int sign_at_alg(const Poly& q, const RealAlgebraic& a) {
    if (q.is_zero()) return 0;
    if (a.is_rational()) return sign_of(q.eval(a.rational_value()));
    Poly g = poly_gcd(q, a.defining_poly());
    if (g.degree() >= 1) {
        int s1 = sign_of(g.eval(a.lo())), s2 = sign_of(g.eval(a.hi()));
        if (s1 * s2 < 0) return 0;
    }
    RealAlgebraic x = a;
    for (int i = 0; i < kMaxRefineLoops; ++i) {
        int s = q.eval_interval(x.interval()).definite_sign();
        if (s != 0) return s;
        x = x.refined();
    }
    refinement_overrun("sign_at_alg");
}

RealAlgebraic shift_by(const RealAlgebraic& a, const Rational& c) {
    if (a.is_rational()) return RealAlgebraic(a.rational_value() + c);
    return RealAlgebraic::make_irrational(a.defining_poly().taylor_shift(-c), a.lo() + c,
                                          a.hi() + c);
}

namespace {

// Number of sign changes of (1+x)^n p((a+bx)/(1+x)): Descartes count for (a,b).
int descartes_count(const Poly& p, const Rational& a, const Rational& b) {
    Poly q = p.taylor_shift(a).scale_arg(b - a);  // roots in (a,b) -> (0,1)
    q = q.reversed().taylor_shift(Rational(1));   // (0,1) -> (0,inf)
    return q.sign_changes();
}

void isolate_in(const Poly& p, const Rational& a, const Rational& b,
                std::vector<RealAlgebraic>& out) {
    int v = descartes_count(p, a, b);
    if (v == 0) return;
    if (v == 1) {
        // One simple root strictly inside (a,b); cosmetically prefer a rational rep.
        Rational lo = a, hi = b;
        for (int round = 0; round < 8; ++round) {
            Rational r = simplest_in(lo, hi);
            Rational pr = p.eval(r);
            if (pr == 0 && r > a && r < b) {
                out.push_back(RealAlgebraic(r));
                return;
            }
            Rational m = (lo + hi) / 2;
            Rational pm = p.eval(m);
            if (pm == 0) {
                out.push_back(RealAlgebraic(m));
                return;
            }
            if (sign_of(pm) == sign_of(p.eval(lo)))
                lo = m;
            else
                hi = m;
        }
        out.push_back(RealAlgebraic::make_irrational(p, lo, hi));
        return;
    }
    Rational m = (a + b) / 2;
    if (p.eval(m) == 0) {
        out.push_back(RealAlgebraic(m));
        Poly q = exact_div(p, Poly({-m, Rational(1)}));
        isolate_in(q, a, m, out);
        isolate_in(q, m, b, out);
        return;
    }
    isolate_in(p, a, m, out);
    isolate_in(p, m, b, out);
}

std::vector<RealAlgebraic> isolate_quadratic(const Poly& p) {
    Rational a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    Rational disc = b * b - 4 * a * c;
    std::vector<RealAlgebraic> out;
    if (disc < 0) return out;
    if (disc == 0) throw std::logic_error("isolate_quadratic: squarefree input expected");
    Rational scaled = disc;  // disc = (n/d); sqrt rational iff n*d is a perfect square
    auto ps = perfect_sqrt(num(scaled) * den(scaled));
    if (ps) {
        Rational s = Rational(*ps, den(scaled));
        out.push_back(RealAlgebraic((-b - s) / (2 * a)));
        out.push_back(RealAlgebraic((-b + s) / (2 * a)));
    } else {
        unsigned prec = 4;
        while (true) {
            Rational s1 = sqrt_lower(disc, prec), s2 = sqrt_upper(disc, prec);
            if (s1 > 0) {
                QInterval r1 = (QInterval(-b) - QInterval(s1, s2)) / QInterval(2 * a);
                QInterval r2 = (QInterval(-b) + QInterval(s1, s2)) / QInterval(2 * a);
                if (disjoint(r1, r2) && sign_of(p.eval(r1.lo)) != 0 &&
                    sign_of(p.eval(r1.hi)) != 0 && sign_of(p.eval(r2.lo)) != 0 &&
                    sign_of(p.eval(r2.hi)) != 0) {
                    out.push_back(RealAlgebraic::make_irrational(p, r1.lo, r1.hi));
                    out.push_back(RealAlgebraic::make_irrational(p, r2.lo, r2.hi));
                    break;
                }
            }
            prec += 8;
            if (prec > 4096) refinement_overrun("isolate_quadratic");
        }
    }
    if (compare(out[0], out[1]) > 0) std::swap(out[0], out[1]);
    return out;
}

}  // namespace

std::vector<RealAlgebraic> isolate_squarefree(const Poly& p) {
    std::vector<RealAlgebraic> out;
    if (p.degree() <= 0) return out;
    if (p.degree() == 1) {
        out.push_back(RealAlgebraic(-p.coeff(0) / p.coeff(1)));
        return out;
    }
    if (p.degree() == 2) return isolate_quadratic(p);
    // Cauchy bound
    Rational m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs_q(p.coeff(k)));
    Rational bound = Rational(ceil_q(Rational(1) + m / abs_q(p.lead()))) + 1;
    isolate_in(p, -bound, bound, out);
    std::sort(out.begin(), out.end(),
              [](const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) < 0; });
    return out;
}

std::vector<RootWithMultiplicity> isolate_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("undefined root set");
    std::vector<RootWithMultiplicity> out;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (auto& r : isolate_squarefree(factor)) out.push_back({std::move(r), mult});
    }
    std::sort(out.begin(), out.end(), [](const RootWithMultiplicity& x,
                                         const RootWithMultiplicity& y) {
        return compare(x.root, y.root) < 0;
    });
    return out;
}

RealAlgebraic algebraic_from_enclosure(const Poly& vanishing,
                                       const std::function<QInterval(int)>& enclose) {
    Poly sf = squarefree_part(vanishing);
    std::vector<RealAlgebraic> roots = isolate_squarefree(sf);
    if (roots.empty()) throw std::logic_error("algebraic_from_enclosure: no real roots");
    for (int depth = 1; depth < 64; ++depth) {
        QInterval e = enclose(depth);
        int hit = -1, hits = 0;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (!disjoint(e, roots[i].interval())) {
                ++hits;
                hit = static_cast<int>(i);
            }
        }
        if (hits == 1) return roots[static_cast<size_t>(hit)];
        for (auto& r : roots) r = r.refined().refined();
    }
    refinement_overrun("algebraic_from_enclosure");
}

namespace {

// Fraction-free determinant (one-step Bareiss) of a square matrix over Q[t].
Poly det_bareiss(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(Rational(1));
    int sign = 1;
    Poly prev = Poly::constant(Rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Poly();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

}  // namespace

Poly ratfunc_vanishing_poly(const RealAlgebraic& a, const Poly& numer, const Poly& denom) {
    Poly def = a.defining_poly();
    // Strip factors shared with the denominator; they cannot vanish at a.
    while (true) {
        Poly g = poly_gcd(def, denom);
        if (g.degree() < 1) break;
        def = exact_div(def, g);
    }
    if (def.degree() < 1) throw std::logic_error("ratfunc_vanishing_poly: degenerate defining poly");

    // Sylvester resultant in s of def(s) and denom(s)*t - numer(s); entries in Q[t].
    int dm = def.degree();
    int dn = std::max(denom.degree(), numer.degree());
    if (dn < 0) throw std::logic_error("ratfunc_vanishing_poly: zero rational function");
    if (dn == 0) {
        // constant num/den: t - num0/den0
        return Poly({-numer.coeff(0), denom.coeff(0)}).normalized();
    }
    size_t size = static_cast<size_t>(dm + dn);
    std::vector<std::vector<Poly>> mat(size, std::vector<Poly>(size, Poly()));
    // dn rows of def coefficients (constants in t)
    for (int r = 0; r < dn; ++r)
        for (int j = 0; j <= dm; ++j)
            mat[static_cast<size_t>(r)][static_cast<size_t>(r + j)] =
                Poly::constant(def.coeff(dm - j));
    // dm rows of B = den(s) t - num(s), coefficient of s^(dn-j): den_(dn-j)*t - num_(dn-j)
    for (int r = 0; r < dm; ++r)
        for (int j = 0; j <= dn; ++j)
            mat[static_cast<size_t>(dn + r)][static_cast<size_t>(r + j)] =
                Poly({-numer.coeff(dn - j), denom.coeff(dn - j)});
    Poly res = det_bareiss(std::move(mat));
    if (res.is_zero()) throw std::logic_error("ratfunc_vanishing_poly: vanishing resultant");
    return res.normalized();
}

RealAlgebraic eval_ratfunc(const RealAlgebraic& a, const Poly& numer, const Poly& denom) {
    if (denom.is_zero()) throw std::domain_error("eval_ratfunc: zero denominator");
    if (a.is_rational()) {
        Rational d = denom.eval(a.rational_value());
        if (d == 0) throw std::domain_error("eval_ratfunc: denominator vanishes");
        return RealAlgebraic(numer.eval(a.rational_value()) / d);
    }
    if (numer.degree() <= 0 && denom.degree() <= 0)
        return RealAlgebraic(numer.coeff(0) / denom.coeff(0));
    Poly vanish = ratfunc_vanishing_poly(a, numer, denom);
    auto enclose = [&](int depth) {
        RealAlgebraic x = a;
        for (int i = 0; i < 8 * depth; ++i) x = x.refined();
        for (int i = 0; i < kMaxRefineLoops; ++i) {
            QInterval d = denom.eval_interval(x.interval());
            if (d.definite_sign() != 0) return numer.eval_interval(x.interval()) / d;
            x = x.refined();
        }
        refinement_overrun("eval_ratfunc enclosure");
    };
    return algebraic_from_enclosure(vanish, enclose);
}

}  // namespace clband
