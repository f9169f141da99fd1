#include "clband/poly.hpp"

#include <numeric>
#include <sstream>

namespace clband {

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(Rational coeff, int k) {
    if (coeff == 0) return Poly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = std::move(coeff);
    return Poly(std::move(v));
}

const Rational& Poly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

const Rational& Poly::lead() const {
    if (c_.empty()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QInterval Poly::eval_interval(const QInterval& x) const {
    QInterval acc{Rational(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QInterval(*it);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<int>(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::normalized() const {
    if (is_zero()) return *this;
    // common denominator, then integer content
    Int d(1);
    for (const auto& q : c_) d = boost::multiprecision::lcm(d, den(q));
    Int g(0);
    for (const auto& q : c_) g = boost::multiprecision::gcd(g, Int(num(q) * (d / den(q))));
    Rational scale = Rational(d, g);
    if (lead() < 0) scale = -scale;
    return scale * (*this);
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / lead()) * (*this);
}

Poly Poly::taylor_shift(const Rational& c) const {
    // synthetic in-place shift: repeated Horner
    std::vector<Rational> a = c_;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) a[j] += c * a[j + 1];
    return Poly(std::move(a));
}

Poly Poly::scale_arg(const Rational& c) const {
    std::vector<Rational> a = c_;
    Rational p(1);
    for (size_t k = 1; k < a.size(); ++k) {
        p *= c;
        a[k] *= p;
    }
    return Poly(std::move(a));
}

Poly Poly::reversed() const {
    std::vector<Rational> a(c_.rbegin(), c_.rend());
    return Poly(std::move(a));
}

int Poly::sign_changes() const {
    int changes = 0, last = 0;
    for (const auto& q : c_) {
        int s = sign_of(q);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& q = coeff(k);
        if (q == 0) continue;
        if (!first) os << (q > 0 ? " + " : " - ");
        else if (q < 0) os << "-";
        Rational a = abs_q(q);
        if (a != 1 || k == 0) os << rational_to_string(a);
        if (k > 0) {
            if (a != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator-(const Poly& a) {
    std::vector<Rational> r = a.c_;
    for (auto& q : r) q = -q;
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly operator*(const Rational& k, const Poly& a) {
    if (k == 0) return Poly();
    std::vector<Rational> r = a.c_;
    for (auto& q : r) q *= k;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> rem = a.coeffs();
    int db = b.degree();
    int dq = static_cast<int>(rem.size()) - 1 - db;
    if (dq < 0) return {Poly(), a};
    std::vector<Rational> quo(static_cast<size_t>(dq) + 1, Rational(0));
    for (int k = dq; k >= 0; --k) {
        Rational f = rem[static_cast<size_t>(k + db)] / b.lead();
        quo[static_cast<size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k + j)] -= f * b.coeff(j);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    Poly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.normalized();
    return exact_div(p, g).normalized();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    // Yun
    Poly a = p.normalized();
    Poly da = a.derivative();
    Poly g = poly_gcd(a, da);
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    Poly b = exact_div(a, g);
    Poly c = exact_div(da, g);
    Poly d = c - b.derivative();
    int mult = 1;
    while (true) {
        Poly f = poly_gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f.normalized(), mult);
        Poly bn = exact_div(b, f);
        if (bn.degree() == 0) break;
        Poly cn = exact_div(d, f);
        b = std::move(bn);
        d = cn - b.derivative();
        ++mult;
    }
    return out;
}

}  // namespace clband
