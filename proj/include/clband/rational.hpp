#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational scalars and small number-theoretic helpers.
 *
 * All exact arithmetic in the library bottoms out here. Rationals are
 * boost::multiprecision::cpp_rational: always reduced, denominator positive.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace clband {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

inline Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Largest integer <= q.
inline Int floor_q(const Rational& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int ceil_q(const Rational& q) { return -floor_q(-q); }

/// Parses "p/q" or "p"; denominator must be positive after reduction.
Rational parse_rational(const std::string& s);

/// Serializes as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

double to_double(const Rational& q);

/// Floor of sqrt(n); n must be >= 0.
Int isqrt(const Int& n);

/// Exact square root if n is a perfect square.
std::optional<Int> perfect_sqrt(const Int& n);

/// Rational lower/upper bounds for sqrt(q) (q >= 0), within 4^-precision relative scale.
Rational sqrt_lower(const Rational& q, unsigned precision);
Rational sqrt_upper(const Rational& q, unsigned precision);

/// The rational with smallest denominator (then smallest |numerator|) in [lo, hi].
Rational simplest_in(const Rational& lo, const Rational& hi);

}  // namespace clband
