#pragma once

/**
 * @file semigroup.hpp
 * @brief The sign-vector image of a face complex, closure checking, finite
 *        product tables, and band axiom verification.
 */

#include "clband/cell_complex.hpp"

#include <optional>

namespace clband {

/// Image of the sign map together with its fibers (faces sharing a vector).
struct L0Set {
    std::vector<SignVector> elements;        // sorted by the canonical sign order
    std::vector<std::vector<int>> fibers;    // parallel: face ids mapping to the element

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(const SignVector& v) const;  // -1 if absent
    bool contains(const SignVector& v) const { return index_of(v) >= 0; }
    /// Total number of faces across fibers.
    int face_count() const;
};

/// Exact sign vector per face, with fibers recorded.
L0Set sign_image(const FaceComplex& fc);

struct ClosureWitness {
    SignVector u, v, product;  // u, v in the set, product outside
};

/// nullopt iff the set is closed under composition; otherwise the
/// lexicographically first failing ordered pair.
std::optional<ClosureWitness> closure_witness(const L0Set& l0);

/// True iff every intersection point lies on exactly two curves.
bool two_component_condition(const FaceComplex& fc);

class NotClosedError : public std::runtime_error {
  public:
    explicit NotClosedError(const ClosureWitness& w)
        : std::runtime_error("sign image is not closed: " + w.u.to_string() + " * " +
                             w.v.to_string() + " = " + w.product.to_string() +
                             " lies outside"),
          witness(w) {}
    ClosureWitness witness;
};

/// Finite magma table over an element list; entries index into the list.
struct ProductTable {
    enum class Kind { Geometric, Associative, SignVectors };
    Kind kind = Kind::SignVectors;
    std::vector<std::string> labels;
    std::vector<int> entries;  // row-major n*n

    int n() const { return static_cast<int>(labels.size()); }
    int at(int i, int j) const { return entries[static_cast<size_t>(i) * labels.size() + static_cast<size_t>(j)]; }
    void set(int i, int j, int v) { entries[static_cast<size_t>(i) * labels.size() + static_cast<size_t>(j)] = v; }
    static ProductTable empty(Kind kind, std::vector<std::string> labels);
};

struct AxiomViolation {
    enum class Kind { Idempotence, LeftRegularity, Associativity, Alternativity, Aperiodicity };
    Kind kind;
    std::vector<int> witness;  // element indices, in the order they appear in the law
};

const char* to_string(AxiomViolation::Kind k);

/// x*x = x, x*y*x = x*y, and associativity; first violation in scan order.
std::optional<AxiomViolation> check_lrb_axioms(const ProductTable& t);
/// x*x = x, x(xy) = (xx)y, x(yy) = (xy)y, x*y*x = x*y (associativity not required).
std::optional<AxiomViolation> check_alternative_lrb(const ProductTable& t);
std::optional<AxiomViolation> check_associativity(const ProductTable& t);
/// x^2 = x^3 for every x.
std::optional<AxiomViolation> check_aperiodicity(const ProductTable& t);

/// Composition table on the elements of a closed L0 set; throws NotClosedError.
ProductTable l0_table(const L0Set& l0);

/// Quadruple certifying that no monomorphism into any power of the
/// three-element band exists: a*b = a, b*a = b, a != b, a*c = b*c = d.
struct ObstructionCertificate {
    int a, b, c, d;
};
std::optional<ObstructionCertificate> find_embedding_obstruction(const ProductTable& t);

/// True iff bij (a bijection on indices) carries table a onto table b.
bool tables_isomorphic_under(const ProductTable& a, const ProductTable& b,
                             const std::vector<int>& bij);

}  // namespace clband
