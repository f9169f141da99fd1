#include "clband/semigroup.hpp"

#include <algorithm>

namespace clband {

int L0Set::index_of(const SignVector& v) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), v);
    if (it != elements.end() && *it == v) return static_cast<int>(it - elements.begin());
    return -1;
}

int L0Set::face_count() const {
    int n = 0;
    for (const auto& f : fibers) n += static_cast<int>(f.size());
    return n;
}

L0Set sign_image(const FaceComplex& fc) {
    std::vector<std::pair<SignVector, int>> items;
    for (const Face& f : fc.faces()) items.push_back({f.signs, f.id});
    std::sort(items.begin(), items.end());
    L0Set out;
    for (auto& [v, id] : items) {
        if (out.elements.empty() || !(out.elements.back() == v)) {
            out.elements.push_back(v);
            out.fibers.push_back({});
        }
        out.fibers.back().push_back(id);
    }
    return out;
}

std::optional<ClosureWitness> closure_witness(const L0Set& l0) {
    for (const SignVector& u : l0.elements)
        for (const SignVector& v : l0.elements) {
            SignVector p = compose(u, v);
            if (!l0.contains(p)) return ClosureWitness{u, v, p};
        }
    return std::nullopt;
}

bool two_component_condition(const FaceComplex& fc) {
    for (const Face& f : fc.faces())
        if (f.dim == 0 && f.support.size() != 2) return false;
    return true;
}

ProductTable ProductTable::empty(Kind kind, std::vector<std::string> labels) {
    ProductTable t;
    t.kind = kind;
    t.labels = std::move(labels);
    t.entries.assign(t.labels.size() * t.labels.size(), -1);
    return t;
}

const char* to_string(AxiomViolation::Kind k) {
    switch (k) {
        case AxiomViolation::Kind::Idempotence: return "idempotence";
        case AxiomViolation::Kind::LeftRegularity: return "left-regularity";
        case AxiomViolation::Kind::Associativity: return "associativity";
        case AxiomViolation::Kind::Alternativity: return "alternativity";
        case AxiomViolation::Kind::Aperiodicity: return "aperiodicity";
    }
    return "?";
}

std::optional<AxiomViolation> check_associativity(const ProductTable& t) {
    int n = t.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
                    return AxiomViolation{AxiomViolation::Kind::Associativity, {x, y, z}};
    return std::nullopt;
}

namespace {

std::optional<AxiomViolation> check_idempotence(const ProductTable& t) {
    for (int x = 0; x < t.n(); ++x)
        if (t.at(x, x) != x) return AxiomViolation{AxiomViolation::Kind::Idempotence, {x}};
    return std::nullopt;
}

// x*y*x = x*y, evaluated left-to-right (well-defined for the tables we build)
std::optional<AxiomViolation> check_left_regularity(const ProductTable& t) {
    for (int x = 0; x < t.n(); ++x)
        for (int y = 0; y < t.n(); ++y)
            if (t.at(t.at(x, y), x) != t.at(x, y))
                return AxiomViolation{AxiomViolation::Kind::LeftRegularity, {x, y}};
    return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> check_lrb_axioms(const ProductTable& t) {
    if (auto v = check_idempotence(t)) return v;
    if (auto v = check_left_regularity(t)) return v;
    if (auto v = check_associativity(t)) return v;
    return std::nullopt;
}

std::optional<AxiomViolation> check_alternative_lrb(const ProductTable& t) {
    if (auto v = check_idempotence(t)) return v;
    int n = t.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (t.at(x, t.at(x, y)) != t.at(t.at(x, x), y))
                return AxiomViolation{AxiomViolation::Kind::Alternativity, {x, x, y}};
            if (t.at(x, t.at(y, y)) != t.at(t.at(x, y), y))
                return AxiomViolation{AxiomViolation::Kind::Alternativity, {x, y, y}};
        }
    if (auto v = check_left_regularity(t)) return v;
    return std::nullopt;
}

std::optional<AxiomViolation> check_aperiodicity(const ProductTable& t) {
    for (int x = 0; x < t.n(); ++x) {
        int x2 = t.at(x, x);
        if (t.at(x2, x) != x2) return AxiomViolation{AxiomViolation::Kind::Aperiodicity, {x}};
    }
    return std::nullopt;
}

ProductTable l0_table(const L0Set& l0) {
    std::vector<std::string> labels;
    for (const auto& v : l0.elements) labels.push_back(v.to_string());
    ProductTable t = ProductTable::empty(ProductTable::Kind::SignVectors, std::move(labels));
    for (int i = 0; i < l0.size(); ++i)
        for (int j = 0; j < l0.size(); ++j) {
            SignVector p = compose(l0.elements[static_cast<size_t>(i)],
                                   l0.elements[static_cast<size_t>(j)]);
            int k = l0.index_of(p);
            if (k < 0) {
                if (auto w = closure_witness(l0)) throw NotClosedError(*w);
                throw std::logic_error("l0_table: inconsistent closure state");
            }
            t.set(i, j, k);
        }
    return t;
}

std::optional<ObstructionCertificate> find_embedding_obstruction(const ProductTable& t) {
    int n = t.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || t.at(a, b) != a || t.at(b, a) != b) continue;
            for (int c = 0; c < n; ++c)
                if (t.at(a, c) == t.at(b, c))
                    return ObstructionCertificate{a, b, c, t.at(a, c)};
        }
    return std::nullopt;
}

bool tables_isomorphic_under(const ProductTable& a, const ProductTable& b,
                             const std::vector<int>& bij) {
    if (a.n() != b.n() || static_cast<int>(bij.size()) != a.n()) return false;
    std::vector<bool> hit(static_cast<size_t>(a.n()), false);
    for (int v : bij) {
        if (v < 0 || v >= a.n() || hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = true;
    }
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j)
            if (b.at(bij[static_cast<size_t>(i)], bij[static_cast<size_t>(j)]) !=
                bij[static_cast<size_t>(a.at(i, j))])
                return false;
    return true;
}

}  // namespace clband
