#pragma once

/**
 * @file chamber_count.hpp
 * @brief The bound map on sections, its equivalence classes, and the
 *        deletion-restriction chamber identity for CL arrangements.
 */

#include "clband/semigroup.hpp"

namespace clband {

/// The unordered pair of chambers whose closures contain the section (dim-1 face).
std::pair<int, int> bound_pair(const FaceComplex& fc, int section);

struct BoundClass {
    std::pair<int, int> chamber_pair;
    std::vector<int> sections;  // the equivalence class, sorted by face id
};

/// Sections of component h grouped by their bound pair.
std::vector<BoundClass> bound_classes(const FaceComplex& fc, int h);

struct DeletionRestrictionRow {
    int component = -1;
    std::string label;
    int chambers_full = 0;        // |C(A)|
    int chambers_deleted = 0;     // |C(A^H)|
    int restricted_sections = 0;  // |C(A_H)|
    int bound_count = 0;          // |b(H)|
    bool cl_identity = false;     // |C(A)| == |C(A^H)| + |b(H)|
    bool classical_identity = false;  // |C(A)| == |C(A^H)| + |C(A_H)|
    bool split_counts_ok = false;  // per split chamber X: classes inside X == k_X - 1
};

/// One row per component; recomputes each deleted arrangement.
std::vector<DeletionRestrictionRow> deletion_restriction_report(const FaceComplex& fc);

/// Proof-mechanism invariant behind the identity.
bool split_chamber_counts_ok(const FaceComplex& fc, const FaceComplex& deleted, int h);

}  // namespace clband
