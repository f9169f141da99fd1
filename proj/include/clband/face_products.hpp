#pragma once

/**
 * @file face_products.hpp
 * @brief The two products on the face poset: the geometric product (an
 *        alternative left regular band) and the associative product defined
 *        through a choice function on the sign-vector fibers.
 */

#include "clband/oval_geometry.hpp"
#include "clband/semigroup.hpp"

namespace clband {

class AmbiguousTieError : public std::runtime_error {
  public:
    explicit AmbiguousTieError(const std::string& msg)
        : std::runtime_error("ambiguous tie: " + msg) {}
};

/// Candidate set for the geometric product: faces above p1 whose sign vector
/// is the composition of the two sign vectors. Cardinality is 0, 1, or 2.
std::vector<int> product_candidates(const FaceComplex& fc, int p1, int p2);
/// Same, using fibers of a precomputed sign image of the complex.
std::vector<int> product_candidates(const FaceComplex& fc, const L0Set& l0, int p1, int p2);

struct GeometricOptions {
    int refinement_depth = 24;     // effort cap for certified length comparisons
    const L0Set* sign_index = nullptr;  // optional fiber index for candidate lookup
};

/// Geometric product; throws AmbiguousTieError when a tie cannot be certified
/// within the configured effort.
int geometric_product(const FaceComplex& fc, int p1, int p2, const GeometricOptions& opt = {});

/// Full face-by-face table (labels are face labels).
ProductTable geometric_table(const FaceComplex& fc, const GeometricOptions& opt = {});

/// One chosen face per sign vector, defining the associative product.
struct ChoiceFunction {
    std::vector<int> pick;  // parallel to L0Set::elements
};

/// Deterministic choice: the fiber face with lexicographically smallest sample.
ChoiceFunction canonical_choice(const FaceComplex& fc, const L0Set& l0);

/// j(i(x) i(y)); requires the sign image closed (throws NotClosedError).
int associative_product(const FaceComplex& fc, const L0Set& l0, const ChoiceFunction& j, int x,
                        int y);

ProductTable associative_table(const FaceComplex& fc, const L0Set& l0, const ChoiceFunction& j);

}  // namespace clband
