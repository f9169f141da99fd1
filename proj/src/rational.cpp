#include "clband/rational.hpp"

namespace clband {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rational(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + s + "'");
    }
}

std::string rational_to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) {
        s += "/";
        s += den(q).str();
    }
    return s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

Rational sqrt_lower(const Rational& q, unsigned precision) {
    if (q < 0) throw std::domain_error("sqrt of negative");
    if (q == 0) return 0;
    // sqrt(n/d) = sqrt(n*d)/d; scale by 4^p so the integer sqrt carries p extra bits.
    Int scale = Int(1) << precision;
    Int nd = num(q) * den(q) * scale * scale;
    Int r = isqrt(nd);
    return Rational(r, den(q) * scale);
}

Rational sqrt_upper(const Rational& q, unsigned precision) {
    if (q < 0) throw std::domain_error("sqrt of negative");
    if (q == 0) return 0;
    Int scale = Int(1) << precision;
    Int nd = num(q) * den(q) * scale * scale;
    Int r = isqrt(nd);
    if (r * r != nd) ++r;
    return Rational(r, den(q) * scale);
}

namespace {
// Simplest rational in [lo, hi] for 0 <= lo <= hi, by continued-fraction descent.
Rational simplest_nonneg(const Rational& lo, const Rational& hi) {
    Int fl = floor_q(lo);
    if (Rational(fl) == lo) return lo;       // lo itself is integral
    if (fl + 1 <= hi) return Rational(fl + 1);  // an integer lies inside
    Rational rlo = Rational(1) / (hi - Rational(fl));
    Rational rhi = Rational(1) / (lo - Rational(fl));
    return Rational(fl) + Rational(1) / simplest_nonneg(rlo, rhi);
}
}  // namespace

Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_in: empty interval");
    if (lo <= 0 && hi >= 0) return 0;
    if (lo > 0) return simplest_nonneg(lo, hi);
    return -simplest_nonneg(-hi, -lo);
}

}  // namespace clband
