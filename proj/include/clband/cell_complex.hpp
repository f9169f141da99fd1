#pragma once

/**
 * @file cell_complex.hpp
 * @brief Exact face decomposition of the plane induced by a CL arrangement.
 *
 * Construction sweeps vertical slabs between critical x-values (intersection
 * x-coordinates, vertical tangents, vertical lines, vertical asymptotes),
 * stacks cells in each slab and on each critical line, and glues adjacent
 * cells with equal sign data into faces by union-find. Faces are the connected
 * components of the sign-invariant strata: vertices, curve sections, chambers.
 */

#include "clband/arrangement.hpp"
#include "clband/intersect.hpp"
#include "clband/sign_vector.hpp"

#include <map>
#include <memory>
#include <optional>

namespace clband {

struct Face {
    int id = -1;
    std::string label;           // "v0", "e0", "c0"
    int dim = -1;                // 0, 1, 2
    std::vector<int> support;    // sorted curve indices; chambers: empty
    AlgebraicPoint sample;       // interior point (the vertex itself for dim 0)
    bool bounded = false;
    SignVector signs;            // exact signs of every curve at the sample
};

class FaceComplex {
  public:
    const Arrangement& arrangement() const { return arr_; }
    int size() const { return static_cast<int>(faces_.size()); }
    const Face& face(int id) const { return faces_.at(static_cast<size_t>(id)); }
    const std::vector<Face>& faces() const { return faces_; }

    /// Closure partial order: a lies in the topological closure of b.
    bool leq(int a, int b) const;
    /// All strict pairs (lower, upper).
    std::vector<std::pair<int, int>> order_pairs() const;
    /// Covering pairs of the Hasse diagram.
    std::vector<std::pair<int, int>> hasse_pairs() const;

    /// The two distinct chambers incident to a dim-1 face.
    std::pair<int, int> incident_chambers(int edge_id) const;
    /// Edges incident to a vertex.
    std::vector<int> incident_edges(int vertex_id) const;

    std::vector<int> chambers() const;
    std::vector<int> vertices() const;
    std::vector<int> edges_on_curve(int k) const;
    std::vector<int> vertices_on_curve(int k) const;

    /// Alternating vertex/edge walk along one connected piece of a curve.
    /// For cycles the node list is [v0, e0, v1, e1, ...] closing back to v0;
    /// for paths it is [e?, v, e, v, ..., e?] with the unbounded end edges included.
    struct Chain {
        bool cycle = false;
        std::vector<int> nodes;
    };
    const std::vector<Chain>& chains(int curve) const;

    const std::vector<IntersectionRecord>& pair_intersections(int i, int j) const;

    /// Face id of the vertex at p, or -1.
    int vertex_at(const AlgebraicPoint& p) const;

    /// Face containing a point whose x-coordinate is rational and not a
    /// critical value (sufficient for every internal use).
    int locate(const AlgebraicPoint& p) const;

    /// Exact sign vector of an arbitrary point (not cached).
    SignVector signs_at(const AlgebraicPoint& p) const;

    friend class ComplexBuilder;

  private:
    Arrangement arr_;
    std::vector<Face> faces_;
    std::vector<std::vector<bool>> leq_;  // leq_[a][b] : a in closure(b)
    std::vector<std::pair<int, int>> edge_chambers_;
    std::vector<std::vector<int>> vertex_edges_;
    std::vector<std::vector<Chain>> chains_;
    std::map<std::pair<int, int>, std::vector<IntersectionRecord>> intersections_;

    // point-location data
    std::vector<RealAlgebraic> critical_xs_;
    struct LocArc {
        int curve;
        int branch;
        int face;
    };
    struct LocSlab {
        Rational sample_x;
        std::vector<LocArc> arcs;        // in increasing y at sample_x
        std::vector<int> region_faces;   // size arcs+1, bottom to top
    };
    std::vector<LocSlab> loc_slabs_;
};

/// Computes the full face complex of a validated arrangement.
FaceComplex decompose(const Arrangement& arr);

}  // namespace clband
