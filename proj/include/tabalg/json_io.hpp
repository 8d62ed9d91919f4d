#pragma once

#include "tabalg/algebra.hpp"
#include "tabalg/crystal.hpp"
#include "tabalg/lattice.hpp"
#include "tabalg/relations.hpp"
#include "tabalg/spectra.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tabalg::io {

using Json = nlohmann::ordered_json;

// Malformed documents throw Error(ParseError); well-formed documents holding
// invalid objects throw the usual domain errors.

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j, std::optional<Bound> bound = std::nullopt);

Json to_json(const Column& c);
Column column_from_json(const Json& j);

Json to_json(const GeneratorSet& gens);
Json to_json(const Relation& r);

Json to_json(const AlgebraElement& f);
AlgebraElement element_from_json(const Json& j);

Json to_json(const SpectrumPoint& t);
/// Without a bound, n is the tallest column and m the largest entry.
SpectrumPoint spectrum_point_from_json(const Json& j, std::optional<Bound> bound = std::nullopt);

Json to_json(const EvaluationPoint& alpha);
/// The bound is the grid size.
EvaluationPoint evaluation_point_from_json(const Json& j);

Json to_json(const CrystalGraph& g);
std::string to_dot(const CrystalGraph& g);

Json to_json(const GTPattern& g);
GTPattern gt_from_json(const Json& j);

MonomialWord word_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error(ParseError).
Json parse(const std::string& text);

}  // namespace tabalg::io
