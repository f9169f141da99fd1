#pragma once

/**
 * @file interval.hpp
 * @brief Closed rational intervals with outward arithmetic, used as certified enclosures.
 */

#include "clband/rational.hpp"

#include <algorithm>

namespace clband {

struct QInterval {
    Rational lo, hi;

    QInterval() : lo(0), hi(0) {}
    QInterval(Rational v) : lo(v), hi(v) {}
    QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("QInterval: lo > hi");
    }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }

    // Sign if definite: -1, +1, or 0 meaning "undetermined (straddles zero)".
    int definite_sign() const {
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        return 0;
    }
};

inline QInterval operator+(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo + b.lo, a.hi + b.hi);
}
inline QInterval operator-(const QInterval& a, const QInterval& b) {
    return QInterval(a.lo - b.hi, a.hi - b.lo);
}
inline QInterval operator-(const QInterval& a) { return QInterval(-a.hi, -a.lo); }

inline QInterval operator*(const QInterval& a, const QInterval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return QInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                     std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline QInterval operator*(const Rational& c, const QInterval& a) {
    return c >= 0 ? QInterval(c * a.lo, c * a.hi) : QInterval(c * a.hi, c * a.lo);
}

// Reciprocal; interval must not contain zero.
inline QInterval recip(const QInterval& a) {
    if (a.contains_zero()) throw std::domain_error("recip: interval contains zero");
    return QInterval(Rational(1) / a.hi, Rational(1) / a.lo);
}

inline QInterval operator/(const QInterval& a, const QInterval& b) { return a * recip(b); }

inline bool disjoint(const QInterval& a, const QInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

inline QInterval sqrt_enclosure(const QInterval& a, unsigned precision) {
    Rational lo = a.lo < 0 ? Rational(0) : sqrt_lower(a.lo, precision);
    return QInterval(lo, sqrt_upper(a.hi, precision));
}

}  // namespace clband
