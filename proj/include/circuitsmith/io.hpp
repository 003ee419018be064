#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "circuitsmith/circuits.hpp"
#include "circuitsmith/homology.hpp"
#include "circuitsmith/limit.hpp"
#include "circuitsmith/recognition.hpp"
#include "circuitsmith/verdict.hpp"

namespace circuitsmith::io {

using nlohmann::json;

/// Parses a file. Throws MalformedInput on unreadable or invalid JSON.
json read_file(const std::string& path);

/// Largest accepted complex, from CIRCUITSMITH_MAX_SIMPLICES (default 100000).
std::size_t max_simplices();
/// Throws MalformedInput when `k` exceeds max_simplices().
void check_size(const SimplicialComplex& k);

std::vector<Simplex> simplices_from_json(const json& j);
/// Face closure of a list of vertex lists.
SimplicialComplex closure_from_json(const json& j);
json to_json(const Simplex& s);
json to_json(const SimplexSet& s);
json to_json(const std::vector<Simplex>& s);

/// { "maximal": [[...], ...] }
SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& k);

/// { "vertex_map": { "src": tgt, ... } }
std::map<Vertex, Vertex> vertex_map_from_json(const json& j);
json vertex_map_to_json(const std::map<Vertex, Vertex>& m);

/// { "maximal", "boundary", "singular" (optional), "k" }. Without a
/// singular set the default obstruction closure is used.
RelativeCircuitData circuit_from_json(const json& j, bool* singular_supplied = nullptr);
json circuit_to_json(const RelativeCircuitData& q);

/// { "N", "M", "L", "K", "singular", "k" }, each a list of simplices.
BordismData bordism_from_json(const json& j);
json bordism_to_json(const BordismData& r);

/// { "maximal", "relative" }
struct TargetJson {
  SimplicialComplex space;
  SimplicialComplex relative;
};
TargetJson target_from_json(const json& j);

/// { "domain": {"maximal", "punctures"}, "target": {...}, "vertex_map" }
CompactifiedMap limit_map_from_json(const json& j);
json limit_map_to_json(const CompactifiedMap& f);
json limit_set_to_json(const LimitSetResult& l);
json laws_to_json(const std::vector<LawCheck>& laws);

/// { "E", "F", "vertex_map" }
GlueSpec glue_spec_from_json(const json& j);

json verdict_to_json(const Verdict& v);
json coordinates_to_json(const HomologyCoordinates& c);
json integer_to_json(const Integer& x);
Integer integer_from_json(const json& j);
json chain_to_json(const IntChain& z);
json homology_to_json(const HomologyResult& h);
json manifold_report_to_json(const ManifoldReport& r);

}  // namespace circuitsmith::io
