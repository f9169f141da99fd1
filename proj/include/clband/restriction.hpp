#pragma once

/**
 * @file restriction.hpp
 * @brief Restricted arrangements as pointed curves, the induced band on a
 *        pointed line or oval, and the embedding of the restricted band into
 *        the ambient one with multiplicity-weighted coordinate laws.
 */

#include "clband/face_products.hpp"

#include <optional>

namespace clband {

class ComponentNotRestrictableError : public std::invalid_argument {
  public:
    explicit ComponentNotRestrictableError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct PointedCurve {
    int component = -1;  // index of H in the source arrangement
    Curve curve;
    bool oval = false;
    /// Marked points: intersections of the other curves with H. Ordered along
    /// the orientation (increasing (x, y) ends for unbounded curves; clockwise
    /// from the lexicographically smallest point for ovals).
    std::vector<AlgebraicPoint> points;
    std::vector<int> point_vertices;                   // face ids in the source complex
    std::vector<std::vector<std::pair<int, int>>> point_mults;  // per point: (other curve, mult)
    std::optional<AlgebraicPoint> removed_point;  // ovals: a point inside the removed gap
    int removed_gap = -1;  // gap g: removed point lies clockwise-between points[g] and points[g+1 mod k]
};

/// Restriction of the arrangement to component h. Throws
/// ComponentNotRestrictableError for disconnected loci (hyperbolas).
PointedCurve restrict_to(const FaceComplex& fc, int h);

/// The band of a pointed curve: faces in linear order with their sign vectors
/// in (L21)^k, plus the composition table. For ovals the curve is cut inside
/// the chosen gap; faces are [p, s, p, s, ...] starting at the first point
/// after the cut (2k faces). Unbounded curves give [s, p, s, ..., p, s]
/// (2k+1 faces).
struct PointedBand {
    int k = 0;
    bool oval = false;
    int cut_gap = -1;
    std::vector<std::string> face_names;   // "p<i>" and "s<j>"
    std::vector<SignVector> vectors;       // length-k vectors, coordinate i <-> points[i]
    std::vector<int> point_positions;      // linear position of each point p_i
    ProductTable table;                    // composition on the face vectors
};

PointedBand pointed_curve_band(const PointedCurve& pc, int cut_gap = -1);

/// All removed-point placements give pairwise isomorphic bands via the cyclic
/// shift (positional identity of the tables).
bool oval_placements_isomorphic(const PointedCurve& pc);

struct CoordinateLaw {
    int coordinate;  // curve index in the ambient arrangement
    enum class Kind { ZeroCoordinate, Constant, SignedProduct } kind = Kind::ZeroCoordinate;
    Sign constant = Sign::Zero;                 // Constant
    int scalar = 1;                             // SignedProduct: +1 or -1
    std::vector<std::pair<int, int>> factors;   // (1-based point index, multiplicity)
};

class LawViolationError : public std::logic_error {
  public:
    explicit LawViolationError(const std::string& msg) : std::logic_error(msg) {}
};

struct EmbeddingReport {
    int component = -1;
    PointedCurve pointed;
    PointedBand band;
    std::vector<int> face_map;                // linear position -> face id in the complex
    std::vector<SignVector> ambient_vectors;  // i_A(face_map[m])
    std::vector<CoordinateLaw> laws;
    bool product_preserving = false;  // the vector map is a semigroup homomorphism
};

/// Constructs the face-level bijection phi geometrically and verifies the
/// per-coordinate law of the ambient signs; throws LawViolationError if a
/// coordinate fails its law.
EmbeddingReport embedding_map(const FaceComplex& fc, int h);

/// Elements of l0 vanishing at coordinate h, fibers kept.
L0Set restricted_sublrb(const L0Set& l0, int h);

}  // namespace clband
