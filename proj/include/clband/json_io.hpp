#pragma once

/**
 * @file json_io.hpp
 * @brief Arrangement file format and JSON serialization of reports.
 *
 * The arrangement format is the single input format of the CLI:
 *   {"curves":[{"type":"line","coeffs":["0","1","0"],"label":"H1"},
 *              {"type":"conic","coeffs":["1","0","1","0","-2","0"],"label":"C"}]}
 * with conic coefficients ordered [A,B,C,D,E,F] and rationals as "p/q" strings.
 * Every CLI output embeds the arrangement, and any such output is accepted
 * back as input.
 */

#include "clband/chamber_count.hpp"
#include "clband/restriction.hpp"

#include <json.hpp>

namespace clband {

using Json = nlohmann::ordered_json;

Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);

/// Reads a file holding either a raw arrangement or any CLI output
/// (the embedded "arrangement" object is used).
Arrangement load_arrangement_file(const std::string& path);

Json point_to_json(const AlgebraicPoint& p);
Json face_to_json(const Face& f);
Json faces_to_json(const FaceComplex& fc);
Json l0_to_json(const L0Set& l0, const FaceComplex& fc);
Json table_to_json(const ProductTable& t);
Json closure_to_json(const std::optional<ClosureWitness>& w);
Json violation_to_json(const AxiomViolation& v, const ProductTable& t);
Json law_to_json(const CoordinateLaw& law, const Arrangement& arr);
Json embedding_to_json(const EmbeddingReport& rep, const FaceComplex& fc);
Json chamber_rows_to_json(const std::vector<DeletionRestrictionRow>& rows);

/// Hasse diagram of the closure order, as Graphviz DOT.
std::string hasse_dot(const FaceComplex& fc);

}  // namespace clband
