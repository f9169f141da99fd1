#pragma once

/**
 * @file intersect.hpp
 * @brief Exact pairwise curve intersection with multiplicities and tangency flags.
 */

#include "clband/curve.hpp"

#include <vector>

namespace clband {

struct IntersectionRecord {
    AlgebraicPoint point;
    int multiplicity = 1;   // local intersection multiplicity
    bool tangential = false;  // gradients parallel at the point <=> multiplicity >= 2
};

class IdenticalCurvesError : public std::invalid_argument {
  public:
    IdenticalCurvesError() : std::invalid_argument("curves share their zero locus") {}
};

/// All real intersection points of two distinct curves, sorted by (x, y).
/// Conic-conic multiplicities come from the root multiplicity of the
/// y-resultant after a rational shear that separates all intersection
/// x-coordinates (including complex ones); the shear is certified by
/// requiring the degree-1 subresultant coefficient to be nonzero at every
/// real root.
std::vector<IntersectionRecord> intersect(const Curve& c1, const Curve& c2);

/// Exact test: gradients of the two curves parallel at p (zero Jacobian det).
bool gradients_parallel(const Curve& c1, const Curve& c2, const AlgebraicPoint& p);

}  // namespace clband
