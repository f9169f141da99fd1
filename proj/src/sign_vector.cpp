#include "clband/sign_vector.hpp"

#include <stdexcept>

namespace clband {

char to_char(Sign s) {
    switch (s) {
        case Sign::Zero: return '0';
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
    }
    return '?';
}

Sign sign_from_char(char c) {
    switch (c) {
        case '0': return Sign::Zero;
        case '+': return Sign::Plus;
        case '-': return Sign::Minus;
    }
    throw std::invalid_argument(std::string("bad sign character '") + c + "'");
}

Sign sign_mul(Sign x, Sign y) {
    if (x == Sign::Zero || y == Sign::Zero) return Sign::Zero;
    return x == y ? Sign::Plus : Sign::Minus;
}

Sign sign_pow(Sign x, int m) {
    if (m < 1) throw std::invalid_argument("sign_pow: exponent must be >= 1");
    if (x == Sign::Zero) return Sign::Zero;
    if (m % 2 == 0) return Sign::Plus;
    return x;
}

Sign sign_negate(Sign x) {
    if (x == Sign::Plus) return Sign::Minus;
    if (x == Sign::Minus) return Sign::Plus;
    return Sign::Zero;
}

int SignVector::zero_count() const {
    int n = 0;
    for (Sign s : e_)
        if (s == Sign::Zero) ++n;
    return n;
}

std::string SignVector::to_string() const {
    std::string s;
    s.reserve(e_.size());
    for (Sign x : e_) s += to_char(x);
    return s;
}

SignVector SignVector::parse(const std::string& s) {
    std::vector<Sign> e;
    e.reserve(s.size());
    for (char c : s) e.push_back(sign_from_char(c));
    return SignVector(std::move(e));
}

SignVector SignVector::with_coordinate_dropped(int k) const {
    std::vector<Sign> e;
    e.reserve(e_.size() - 1);
    for (int i = 0; i < size(); ++i)
        if (i != k) e.push_back(e_[static_cast<size_t>(i)]);
    return SignVector(std::move(e));
}

SignVector SignVector::with_coordinate_negated(int k) const {
    std::vector<Sign> e = e_;
    e[static_cast<size_t>(k)] = sign_negate(e[static_cast<size_t>(k)]);
    return SignVector(std::move(e));
}

SignVector compose(const SignVector& u, const SignVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("compose: length mismatch");
    std::vector<Sign> e(static_cast<size_t>(u.size()));
    for (int k = 0; k < u.size(); ++k) e[static_cast<size_t>(k)] = compose(u[k], v[k]);
    return SignVector(std::move(e));
}

}  // namespace clband
