#include "circuitsmith/io.hpp"

#include <cstdlib>
#include <fstream>
#include <limits>

namespace circuitsmith::io {

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

std::size_t max_simplices() {
  const char* env = std::getenv("CIRCUITSMITH_MAX_SIMPLICES");
  if (!env || !*env) return 100000;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw MalformedInput("CIRCUITSMITH_MAX_SIMPLICES must be a positive integer");
  return static_cast<std::size_t>(v);
}

void check_size(const SimplicialComplex& k) {
  if (k.size() > max_simplices()) {
    throw MalformedInput("complex has " + std::to_string(k.size()) + " simplices, limit is " +
                         std::to_string(max_simplices()));
  }
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

std::vector<Simplex> simplices_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("expected a list of simplices");
  std::vector<Simplex> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw MalformedInput("expected a vertex list");
    std::vector<Vertex> vs;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw MalformedInput("vertices must be integers");
      vs.push_back(v.get<Vertex>());
    }
    out.emplace_back(std::move(vs));
  }
  return out;
}

SimplicialComplex closure_from_json(const json& j) {
  auto k = SimplicialComplex::closure_of(simplices_from_json(j));
  check_size(k);
  return k;
}

json to_json(const Simplex& s) { return s.vertices(); }

json to_json(const SimplexSet& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(to_json(x));
  return out;
}

json to_json(const std::vector<Simplex>& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(to_json(x));
  return out;
}

SimplicialComplex complex_from_json(const json& j) { return closure_from_json(field(j, "maximal")); }

json complex_to_json(const SimplicialComplex& k) {
  return json{{"maximal", to_json(k.maximal_simplices())}};
}

std::map<Vertex, Vertex> vertex_map_from_json(const json& j) {
  const auto& m = field(j, "vertex_map");
  if (!m.is_object()) throw MalformedInput("vertex_map must be an object");
  std::map<Vertex, Vertex> out;
  for (const auto& [key, value] : m.items()) {
    std::size_t used = 0;
    int src = 0;
    try {
      src = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || used == 0) throw MalformedInput("vertex_map key \"" + key + "\" is not an integer");
    if (!value.is_number_integer()) throw MalformedInput("vertex_map values must be integers");
    out.emplace(src, value.get<Vertex>());
  }
  return out;
}

json vertex_map_to_json(const std::map<Vertex, Vertex>& m) {
  json out = json::object();
  for (const auto& [s, t] : m) out[std::to_string(s)] = t;
  return json{{"vertex_map", out}};
}

RelativeCircuitData circuit_from_json(const json& j, bool* singular_supplied) {
  RelativeCircuitData q;
  q.complex = complex_from_json(j);
  q.boundary = j.contains("boundary") ? closure_from_json(j.at("boundary")) : SimplicialComplex{};
  const auto& k = field(j, "k");
  if (!k.is_number_integer()) throw MalformedInput("k must be an integer");
  q.k = k.get<int>();
  const bool supplied = j.contains("singular");
  if (singular_supplied) *singular_supplied = supplied;
  q.singular = supplied ? closure_from_json(j.at("singular"))
                        : default_singular_set(q.complex, q.boundary, q.k);
  return q;
}

json circuit_to_json(const RelativeCircuitData& q) {
  return json{{"maximal", to_json(q.complex.maximal_simplices())},
              {"boundary", to_json(q.boundary.maximal_simplices())},
              {"singular", to_json(q.singular.maximal_simplices())},
              {"k", q.k}};
}

BordismData bordism_from_json(const json& j) {
  BordismData r;
  r.complex = closure_from_json(field(j, "N"));
  r.boundary = closure_from_json(field(j, "M"));
  r.circuit = closure_from_json(field(j, "L"));
  r.circuit_boundary = j.contains("K") ? closure_from_json(j.at("K")) : SimplicialComplex{};
  r.singular = j.contains("singular") ? closure_from_json(j.at("singular")) : SimplicialComplex{};
  const auto& k = field(j, "k");
  if (!k.is_number_integer()) throw MalformedInput("k must be an integer");
  r.k = k.get<int>();
  return r;
}

json bordism_to_json(const BordismData& r) {
  return json{{"N", to_json(r.complex.maximal_simplices())},
              {"M", to_json(r.boundary.maximal_simplices())},
              {"L", to_json(r.circuit.maximal_simplices())},
              {"K", to_json(r.circuit_boundary.maximal_simplices())},
              {"singular", to_json(r.singular.maximal_simplices())},
              {"k", r.k}};
}

TargetJson target_from_json(const json& j) {
  TargetJson t;
  t.space = complex_from_json(j);
  t.relative = j.contains("relative") ? closure_from_json(j.at("relative")) : SimplicialComplex{};
  if (!t.relative.is_subcomplex_of(t.space)) throw MalformedInput("relative part is not a subcomplex");
  return t;
}

namespace {

PuncturedComplex punctured_from_json(const json& j) {
  return PuncturedComplex(complex_from_json(j),
                          j.contains("punctures") ? closure_from_json(j.at("punctures"))
                                                  : SimplicialComplex{});
}

json punctured_to_json(const PuncturedComplex& p) {
  return json{{"maximal", to_json(p.compactification().maximal_simplices())},
              {"punctures", to_json(p.punctures().maximal_simplices())}};
}

}  // namespace

CompactifiedMap limit_map_from_json(const json& j) {
  return CompactifiedMap(punctured_from_json(field(j, "domain")), punctured_from_json(field(j, "target")),
                         vertex_map_from_json(j));
}

json limit_map_to_json(const CompactifiedMap& f) {
  auto out = vertex_map_to_json(f.extension().vertex_map());
  out["domain"] = punctured_to_json(f.domain());
  out["target"] = punctured_to_json(f.target());
  return out;
}

json limit_set_to_json(const LimitSetResult& l) {
  return json{{"carrier", to_json(l.carrier.members())},
              {"limit_dimension", l.limit_dimension},
              {"proper", l.carrier.empty()}};
}

json laws_to_json(const std::vector<LawCheck>& laws) {
  json out = json::array();
  for (const auto& l : laws) out.push_back({{"law", l.law}, {"holds", l.holds}, {"detail", l.detail}});
  return out;
}

GlueSpec glue_spec_from_json(const json& j) {
  GlueSpec spec;
  spec.first_part = closure_from_json(field(j, "E"));
  spec.second_part = closure_from_json(field(j, "F"));
  spec.iso = vertex_map_from_json(j);
  return spec;
}

json verdict_to_json(const Verdict& v) {
  json checks = json::array();
  for (const auto& c : v.checks()) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"witnesses", to_json(c.witnesses)},
                      {"detail", c.detail}});
  }
  return json{{"status", to_string(v.status())}, {"checks", checks}};
}

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw MalformedInput("expected an integer");
}

json coordinates_to_json(const HomologyCoordinates& c) {
  json free = json::array();
  json torsion = json::array();
  for (const auto& x : c.free) free.push_back(integer_to_json(x));
  for (const auto& x : c.torsion) torsion.push_back(integer_to_json(x));
  return json{{"free", free}, {"torsion", torsion}};
}

json chain_to_json(const IntChain& z) {
  json terms = json::array();
  for (const auto& [s, c] : z.coefficients) terms.push_back({to_json(s), integer_to_json(c)});
  return json{{"degree", z.degree}, {"terms", terms}};
}

json homology_to_json(const HomologyResult& h) {
  json groups = json::array();
  for (const auto& g : h.groups) {
    json torsion = json::array();
    for (const auto& t : g.torsion) torsion.push_back(integer_to_json(t));
    json gens = json::array();
    for (const auto& z : g.free_generators) gens.push_back(chain_to_json(z));
    groups.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}, {"generators", gens}});
  }
  return json{{"betti", h.betti()}, {"groups", groups}};
}

json manifold_report_to_json(const ManifoldReport& r) {
  json by = json::object();
  for (const auto& [s, c] : r.classification) by[s.to_string()] = to_string(c);
  return json{{"exact", r.exact},
              {"non_manifold", to_json(r.non_manifold_subcomplex.maximal_simplices())},
              {"by_simplex", by}};
}

}  // namespace circuitsmith::io
