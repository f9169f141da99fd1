#pragma once

/**
 * @file sign_vector.hpp
 * @brief The three-element band {+,-,0} and sign vectors with the
 *        componentwise left-regular composition.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace clband {

/// Ordered Zero < Plus < Minus; the order fixes every lexicographic scan.
enum class Sign : uint8_t { Zero = 0, Plus = 1, Minus = 2 };

inline Sign sign_from_int(int s) {
    return s == 0 ? Sign::Zero : (s > 0 ? Sign::Plus : Sign::Minus);
}
char to_char(Sign s);
Sign sign_from_char(char c);

/// Left-regular product on {+,-,0}: x if x != 0, else y.
inline Sign compose(Sign x, Sign y) { return x == Sign::Zero ? y : x; }

/// Ordinary sign multiplication: (+)(+)=(-)(-)=+, (+)(-)=-, 0 absorbs.
Sign sign_mul(Sign x, Sign y);
/// x^m under ordinary multiplication (m >= 1).
Sign sign_pow(Sign x, int m);
Sign sign_negate(Sign x);

class SignVector {
  public:
    SignVector() = default;
    explicit SignVector(std::vector<Sign> entries) : e_(std::move(entries)) {}

    int size() const { return static_cast<int>(e_.size()); }
    Sign operator[](int k) const { return e_[static_cast<size_t>(k)]; }
    Sign& operator[](int k) { return e_[static_cast<size_t>(k)]; }
    const std::vector<Sign>& entries() const { return e_; }

    int zero_count() const;
    std::string to_string() const;             // e.g. "0+-0"
    static SignVector parse(const std::string& s);

    /// Entry at position k removed (restriction to a deleted arrangement).
    SignVector with_coordinate_dropped(int k) const;
    SignVector with_coordinate_negated(int k) const;

    friend bool operator==(const SignVector& a, const SignVector& b) { return a.e_ == b.e_; }
    friend bool operator<(const SignVector& a, const SignVector& b) { return a.e_ < b.e_; }

  private:
    std::vector<Sign> e_;
};

/// Componentwise left-regular composition; lengths must agree.
SignVector compose(const SignVector& u, const SignVector& v);

}  // namespace clband
