#pragma once

/**
 * @file real_algebraic.hpp
 * @brief Real algebraic numbers as (squarefree defining polynomial, isolating
 *        interval), with exact comparison and exact sign evaluation.
 *
 * Values are immutable; refinement returns a tightened copy of the same number.
 * Invariants: the defining polynomial has exactly one real root in [lo, hi];
 * lo == hi iff the number is rational; for irrational values the endpoints are
 * never roots of the defining polynomial.
 */

#include "clband/poly.hpp"

#include <functional>
#include <vector>

namespace clband {

class RealAlgebraic {
  public:
    RealAlgebraic() : RealAlgebraic(Rational(0)) {}
    explicit RealAlgebraic(Rational value);

    /// p squarefree with exactly one root in [lo, hi], endpoints not roots.
    static RealAlgebraic make_irrational(Poly p, Rational lo, Rational hi);

    bool is_rational() const { return lo_ == hi_; }
    const Rational& rational_value() const;

    const Poly& defining_poly() const { return p_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    QInterval interval() const { return QInterval(lo_, hi_); }

    /// One bisection step (no-op on rationals).
    RealAlgebraic refined() const;
    /// Bisect until the interval width is <= w.
    RealAlgebraic refined_to(const Rational& w) const;

    double approx() const;

    friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);

  private:
    Poly p_;          // squarefree, integer-primitive, positive lead
    Rational lo_, hi_;
};

/// Exact order: -1, 0, +1.
int compare(const RealAlgebraic& a, const RealAlgebraic& b);
int compare(const RealAlgebraic& a, const Rational& b);

inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) == 0;
}
inline bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
    return compare(a, b) < 0;
}

/// Exact sign of q(a).
int sign_at_alg(const Poly& q, const RealAlgebraic& a);

/// Sum with a rational, as a real algebraic number.
RealAlgebraic shift_by(const RealAlgebraic& a, const Rational& c);

struct RootWithMultiplicity {
    RealAlgebraic root;
    int multiplicity;
};

/// All distinct real roots of p in increasing order, with multiplicities.
/// Throws std::domain_error("undefined root set") on the zero polynomial.
std::vector<RootWithMultiplicity> isolate_real_roots(const Poly& p);

/// Real roots of a squarefree polynomial, increasing.
std::vector<RealAlgebraic> isolate_squarefree(const Poly& p);

/// A number y = num(a)/den(a) presented by refinable enclosures of a rational
/// expression in one algebraic number. `enclose(depth)` must return nested
/// intervals converging to y as depth grows.
RealAlgebraic algebraic_from_enclosure(const Poly& vanishing,
                                       const std::function<QInterval(int)>& enclose);

/// Defining polynomial for num(a)/den(a): resultant_s(def_a(s), den(s)*t - num(s)).
/// den must not vanish at a.
Poly ratfunc_vanishing_poly(const RealAlgebraic& a, const Poly& num, const Poly& den);

/// num(a)/den(a) as a standalone RealAlgebraic.
RealAlgebraic eval_ratfunc(const RealAlgebraic& a, const Poly& num, const Poly& den);

}  // namespace clband
