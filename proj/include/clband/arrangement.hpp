#pragma once

/**
 * @file arrangement.hpp
 * @brief Validated conic-line arrangements and the deletion operation.
 */

#include "clband/curve.hpp"

#include <stdexcept>
#include <vector>

namespace clband {

enum class ValidationCode {
    InvalidCoefficients,
    EmptyRealLocus,
    PointLocus,
    DoubleLine,
    ReducibleConic,
    DuplicateCurve,
};

const char* to_string(ValidationCode code);

class ValidationError : public std::runtime_error {
  public:
    ValidationError(ValidationCode code, int curve_index, const std::string& msg)
        : std::runtime_error(msg), code_(code), curve_index_(curve_index) {}
    ValidationCode code() const { return code_; }
    int curve_index() const { return curve_index_; }

  private:
    ValidationCode code_;
    int curve_index_;
};

struct Arrangement {
    std::vector<Curve> curves;  // order fixes the sign-vector coordinates

    int size() const { return static_cast<int>(curves.size()); }
    const Curve& operator[](int k) const { return curves[static_cast<size_t>(k)]; }
    int index_of_label(const std::string& label) const;  // -1 if absent
};

/// Checks every curve against the admissibility rules and rejects duplicates.
/// Conics must have a nonempty real locus that is neither a point, a (double)
/// line, nor a pair of lines. Throws ValidationError naming the violated rule.
Arrangement validate(std::vector<Curve> curves);

/// Arrangement with curve h removed.
Arrangement deleted_arrangement(const Arrangement& arr, int h);

}  // namespace clband
