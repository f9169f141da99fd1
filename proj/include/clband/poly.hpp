#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Q: arithmetic, gcd, squarefree
 *        decomposition, Moebius transforms for Descartes isolation.
 */

#include "clband/interval.hpp"
#include "clband/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace clband {

class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Rational v) { return Poly({std::move(v)}); }
    // x^k with coefficient c
    static Poly monomial(Rational coeff, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rational& coeff(int k) const;
    const Rational& lead() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x) const;
    QInterval eval_interval(const QInterval& x) const;

    Poly derivative() const;

    /// Divides out rational content and makes the leading coefficient positive.
    Poly normalized() const;
    Poly monic() const;

    /// p(x + c)
    Poly taylor_shift(const Rational& c) const;
    /// p(c * x)
    Poly scale_arg(const Rational& c) const;
    /// x^deg * p(1/x)
    Poly reversed() const;

    int sign_changes() const;

    std::string to_string(const std::string& var = "x") const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& k, const Poly& a);
    friend Poly operator*(const Poly& a, const Rational& k) { return k * a; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  private:
    void trim();
    std::vector<Rational> c_;  // c_[k] multiplies x^k; no trailing zeros
};

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// Exact quotient; throws if the division leaves a remainder.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd over Q (gcd(0,0) = 0).
Poly poly_gcd(Poly a, Poly b);

/// p with all repeated roots collapsed: p / gcd(p, p').
Poly squarefree_part(const Poly& p);

/// Yun's algorithm: pairwise-coprime squarefree factors with multiplicities,
/// multiplicities strictly increasing.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

}  // namespace clband
