#include "circuitsmith/psi.hpp"

#include <algorithm>

#include "circuitsmith/io.hpp"

namespace circuitsmith {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Dual complexes and obstruction bookkeeping

DualComplex dual_complex(const SimplicialComplex& k, int r) {
  if (r < -1 || r > k.dimension()) {
    throw MalformedInput("r must lie in [-1, dim K], got " + std::to_string(r));
  }
  DualComplex out;
  out.r = r;
  out.subdivision = barycentric_subdivision(k);
  const auto& sd = out.subdivision;

  SimplexSet members;
  for (const auto& s : sd.complex) {
    if (sd.chain_of(s).front().dimension() > r) members.insert(s);
  }
  out.complex = SimplicialComplex(std::move(members));
  out.dimension_bound = k.dimension() - r - 1;
  out.within_bound = out.complex.dimension() <= out.dimension_bound;

  out.join_total = true;
  out.join_unique = true;
  for (const auto& s : sd.complex) {
    const auto chain = sd.chain_of(s);
    const auto jd = join_decompose(chain, r);
    const bool low = std::all_of(jd.lambda.begin(), jd.lambda.end(),
                                 [&](const Simplex& t) { return t.dimension() <= r; });
    const bool high = std::all_of(jd.mu.begin(), jd.mu.end(),
                                  [&](const Simplex& t) { return t.dimension() > r; });
    std::vector<Simplex> joined = jd.lambda;
    joined.insert(joined.end(), jd.mu.begin(), jd.mu.end());
    const bool in_dual = jd.mu.empty() || out.complex.contains(sd.simplex_of(jd.mu));
    if (!low || !high || !in_dual || joined != chain) out.join_total = false;

    int splits = 0;
    for (std::size_t l = 0; l <= chain.size(); ++l) {
      bool ok = true;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if ((i < l) != (chain[i].dimension() <= r)) ok = false;
      }
      splits += ok ? 1 : 0;
    }
    if (splits != 1) out.join_unique = false;
  }
  return out;
}

GammaTable GammaTable::known() {
  GammaTable t;
  for (int n = 0; n <= 6; ++n) t.groups.emplace(n, "0");
  t.groups.emplace(7, "Z/28");
  return t;
}

bool GammaTable::trivial(int n) const {
  auto it = groups.find(n);
  return it != groups.end() && it->second == "0";
}

ObstructionReport cw_dimension_bound(SigmaCase c, const SimplicialComplex& ambient, int k,
                                     const GammaTable& table) {
  const int r = std::max(k - 3, -1);
  auto complement_bound = [&](int dim) { return std::max(dim - r - 1, -1); };

  ObstructionReport out;
  out.kase = c;
  const int own = complement_bound(ambient.dimension());
  switch (c) {
    case SigmaCase::A: out.cw_dimension_bound = own; break;
    case SigmaCase::B:
      out.subspace_bound = complement_bound(k - 1);
      out.cw_dimension_bound = std::max(out.subspace_bound + 1, own);
      break;
    case SigmaCase::C:
      out.subspace_bound = complement_bound(k);
      out.cw_dimension_bound = std::max(out.subspace_bound + 1, own);
      break;
  }
  if (r <= ambient.dimension()) out.dual_complex_dim = dual_complex(ambient, r).complex.dimension();

  // Existence uses Gamma_{i-1}, uniqueness Gamma_i, for i up to the CW dimension.
  for (int n = 0; n <= out.cw_dimension_bound; ++n) out.required_gamma.push_back(n);
  out.all_vanish = std::all_of(out.required_gamma.begin(), out.required_gamma.end(),
                               [&](int n) { return table.trivial(n); });
  return out;
}

// ---------------------------------------------------------------------------
// Pipelines

namespace {

std::vector<std::vector<int>> lists(const std::vector<Simplex>& s) {
  std::vector<std::vector<int>> out;
  for (const auto& x : s) out.push_back(x.vertices());
  return out;
}

[[noreturn]] void fail_with(const std::string& stage, const Verdict& v) {
  const Check* c = v.first_failure();
  throw StageFailure(stage, c ? c->name + (c->detail.empty() ? "" : ": " + c->detail) : "failed",
                     c ? lists(c->witnesses) : std::vector<std::vector<int>>{});
}

void check_sigma(const SigmaSet& sigma) {
  if (!sigma.face_closed) throw StageFailure("sigma", "singular set is not face-closed");
  if (!sigma.codim_ok) {
    throw StageFailure("sigma", "dim " + std::to_string(sigma.sigma.dimension()) + " exceeds " +
                                    std::to_string(sigma.dimension_bound));
  }
}

void check_map(const SimplicialMap& a, const SimplicialComplex& source, const TargetPair& target,
               const SimplicialComplex& into_relative, const std::string& what) {
  if (!(a.source() == source)) throw StageFailure("map", "map source is not the " + what);
  std::vector<Simplex> outside, not_relative;
  for (const auto& s : source) {
    const auto img = a.image(s);
    if (!target.space.contains(img)) outside.push_back(s);
    else if (into_relative.contains(s) && !target.relative.contains(img)) not_relative.push_back(s);
  }
  if (!outside.empty()) throw StageFailure("map", "image leaves X", lists(outside));
  if (!not_relative.empty()) throw StageFailure("map", "boundary part is not sent into A", lists(not_relative));
}

LimitBound bound_for(const SimplicialComplex& w, const SimplicialComplex& s, const SimplicialMap& a,
                     const TargetPair& target, int bound) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : w.vertices()) m.emplace(v, a(v));
  LimitBound out;
  try {
    const CompactifiedMap f(PuncturedComplex(w, complex_intersection(w, s)),
                            PuncturedComplex(target.space, {}), std::move(m));
    const auto l = limit_set(f);
    out.carrier = l.carrier;
    out.limit_dimension = l.limit_dimension;
  } catch (const MalformedInput& e) {
    throw StageFailure("limit", e.what());
  }
  out.bound = bound;
  return out;
}

Status combine(std::initializer_list<const Verdict*> verdicts, bool holds) {
  if (!holds) return Status::Fail;
  for (const auto* v : verdicts) {
    if (v->status() == Status::Fail) return Status::Fail;
  }
  for (const auto* v : verdicts) {
    if (v->status() == Status::Unknown) return Status::Unknown;
  }
  return Status::Pass;
}

}  // namespace

Status PseudocycleCertificate::status() const {
  return combine({&circuit_verdict, &prop20_verdict},
                 main.holds() && boundary.holds() && obstruction.all_vanish);
}

Status BordismCertificate::status() const {
  return combine({&nullbordism_verdict, &prop20_verdict},
                 main.holds() && side.holds() && obstruction.all_vanish);
}

PseudocycleCertificate psi(const RelativeCircuitData& q, const SimplicialMap& a,
                           const TargetPair& target) {
  PseudocycleCertificate c;
  c.circuit = q;
  c.map = a;
  c.target = target;
  c.k = q.k;

  try {
    c.circuit_verdict = verify_circuit(q);
  } catch (const StructuralError& e) {
    throw StageFailure("circuit", e.what());
  }
  if (c.circuit_verdict.status() == Status::Fail) fail_with("circuit", c.circuit_verdict);

  c.sigma = sigma_relative(q);
  check_sigma(c.sigma);
  const auto sigma_bd = complex_intersection(c.sigma.sigma, q.boundary);
  if (!sigma_bd.empty() && sigma_bd.dimension() > q.k - 3) {
    throw StageFailure("sigma", "Sigma meets dQ in dimension " + std::to_string(sigma_bd.dimension()));
  }

  c.prop20_verdict = verify_prop20(c.sigma, q);
  if (c.prop20_verdict.status() == Status::Fail) fail_with("prop20", c.prop20_verdict);

  c.orientation = orient_circuit(q);
  c.fundamental_class = fundamental_class(q, c.orientation);

  check_map(a, q.complex, target, q.boundary, "circuit");
  c.coordinates = evaluate(q, a, c.fundamental_class, homology(target.space, target.relative));

  c.main = bound_for(q.complex, c.sigma.sigma, a, target, floor_bound(q.k - 2));
  c.boundary = bound_for(q.boundary, c.sigma.sigma, a, target, floor_bound(q.k - 3));
  c.obstruction = cw_dimension_bound(SigmaCase::B, q.complex, q.k);
  return c;
}

BordismCertificate verify_bordism_certificate(const BordismData& r, const SimplicialMap& d,
                                              const TargetPair& target, BordismMode mode) {
  BordismCertificate c;
  c.bordism = r;
  c.mode = mode;
  c.map = d;
  c.target = target;

  try {
    c.nullbordism_verdict = verify_nullbordism(r, mode);
  } catch (const StructuralError& e) {
    throw StageFailure("nullbordism", e.what());
  }
  if (c.nullbordism_verdict.status() == Status::Fail) fail_with("nullbordism", c.nullbordism_verdict);

  c.sigma = sigma_bordism(r);
  check_sigma(c.sigma);
  c.prop20_verdict = verify_prop20(c.sigma, r);
  if (c.prop20_verdict.status() == Status::Fail) fail_with("prop20", c.prop20_verdict);

  const auto side = r.side_boundary();
  check_map(d, r.complex, target, side, "bordism");
  c.main = bound_for(r.complex, c.sigma.sigma, d, target, floor_bound(r.k - 1));
  c.side = bound_for(side, c.sigma.sigma, d, target, floor_bound(r.k - 2));
  c.obstruction = cw_dimension_bound(SigmaCase::C, r.complex, r.k);
  return c;
}

namespace {

// Coefficients of `z` on the top simplices of an embedded end, pulled back
// through the embedding with the permutation sign.
IntChain pull_back(const IntChain& z, const BordismEnd& end) {
  IntChain out{end.circuit.k, {}};
  for (const auto& s : end.circuit.complex.simplices_of_dimension(end.circuit.k)) {
    std::vector<Vertex> img;
    for (Vertex v : s) img.push_back(end.embedding.at(v));
    int inversions = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t j = i + 1; j < img.size(); ++j) inversions += img[i] > img[j] ? 1 : 0;
    }
    const Integer c = z.coefficient(Simplex(std::move(img)));
    out.add(s, inversions % 2 == 0 ? c : Integer(-c));
  }
  return out;
}

}  // namespace

Verdict bordism_invariance_check(const PseudocycleCertificate& first,
                                 const PseudocycleCertificate& second,
                                 const BordismCertificate& bordism) {
  Verdict v;
  v.add("bordism_certificate", bordism.status());
  const auto& ends = bordism.bordism.ends;
  if (ends.size() != 2) {
    v.add("ends", Status::Fail, {}, "bordism must record exactly two ends");
    return v;
  }
  const bool same_target = first.target.space == second.target.space &&
                           first.target.relative == second.target.relative &&
                           first.target.space == bordism.target.space &&
                           first.target.relative == bordism.target.relative;
  v.add("same_target", same_target ? Status::Pass : Status::Fail);

  const PseudocycleCertificate* certs[2] = {&first, &second};
  bool ends_ok = true;
  for (int i = 0; i < 2; ++i) {
    const auto& end = ends[static_cast<std::size_t>(i)];
    const auto& cert = *certs[i];
    if (!(end.circuit.complex == cert.circuit.complex) || !(end.circuit.boundary == cert.circuit.boundary)) {
      v.add(i == 0 ? "end_circuit.first" : "end_circuit.second", Status::Fail);
      ends_ok = false;
      continue;
    }
    std::vector<Simplex> mismatched;
    for (Vertex x : end.circuit.complex.vertices()) {
      if (bordism.map(end.embedding.at(x)) != cert.map(x)) mismatched.push_back(Simplex{x});
    }
    v.add(i == 0 ? "end_map.first" : "end_map.second",
          mismatched.empty() ? Status::Pass : Status::Fail, mismatched);
    ends_ok = ends_ok && mismatched.empty();
  }
  if (!ends_ok || !same_target) return v;

  IntChain z_r;
  try {
    const auto rq = bordism.bordism.as_circuit();
    z_r = fundamental_class(rq, orient_circuit(rq));
  } catch (const StageFailure& e) {
    v.add("bordism_orientation", Status::Fail, {}, e.what());
    return v;
  }
  const auto dz = boundary(z_r);
  const auto h = homology(first.target.space, first.target.relative);
  HomologyCoordinates induced[2];
  for (int i = 0; i < 2; ++i) {
    const auto pulled = pull_back(dz, ends[static_cast<std::size_t>(i)]);
    const auto& z = certs[i]->fundamental_class;
    const char* name = i == 0 ? "orientation.first" : "orientation.second";
    if (pulled == z) {
      v.add(name, Status::Pass, {}, "+1");
    } else if (pulled == -z) {
      v.add(name, Status::Pass, {}, "-1");
    } else {
      v.add(name, Status::Fail, {}, "end orientation is not +-1 times the certificate class");
    }
    // The first end enters the bordism, so it is counted with reversed orientation.
    const auto pushed = pushforward(certs[i]->map, pulled);
    induced[i] = h.coordinates(i == 0 ? -pushed : pushed);
  }
  v.add("coordinates_agree", induced[0] == induced[1] ? Status::Pass : Status::Fail, {},
        io::coordinates_to_json(induced[0]).dump() + " vs " + io::coordinates_to_json(induced[1]).dump());
  return v;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

const char* status_word(Status s) {
  switch (s) {
    case Status::Pass: return "valid";
    case Status::Fail: return "invalid";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

json bound_json(const LimitBound& b) {
  return json{{"carrier", io::to_json(b.carrier.members())},
              {"limit_dimension", b.limit_dimension},
              {"bound", b.bound},
              {"holds", b.holds()}};
}

json sigma_json(const SigmaSet& s, const SimplicialComplex& boundary) {
  return json{{"case", to_string(s.kase)},
              {"simplices", io::to_json(s.sigma.simplices())},
              {"dimension", s.sigma.dimension()},
              {"dimension_bound", s.dimension_bound},
              {"boundary_dimension", complex_intersection(s.sigma, boundary).dimension()},
              {"face_closed", s.face_closed},
              {"codim_ok", s.codim_ok}};
}

json target_json(const TargetPair& t) {
  return json{{"maximal", io::to_json(t.space.maximal_simplices())},
              {"relative", io::to_json(t.relative.maximal_simplices())}};
}

}  // namespace

json obstruction_json(const ObstructionReport& r) {
  return json{{"case", to_string(r.kase)},
              {"cw_dimension_bound", r.cw_dimension_bound},
              {"subspace_bound", r.subspace_bound},
              {"dual_complex_dim", r.dual_complex_dim},
              {"required_gamma", r.required_gamma},
              {"all_vanish", r.all_vanish}};
}

json certificate_json(const PseudocycleCertificate& c) {
  json signs = json::array();
  for (const auto& [s, sign] : c.orientation.signs) signs.push_back({io::to_json(s), sign});
  return json{{"kind", "pseudocycle"},
              {"k", c.k},
              {"circuit", io::circuit_to_json(c.circuit)},
              {"map", io::vertex_map_to_json(c.map.vertex_map())},
              {"target", target_json(c.target)},
              {"circuit_verdict", io::verdict_to_json(c.circuit_verdict)},
              {"sigma", sigma_json(c.sigma, c.circuit.boundary)},
              {"prop20", io::verdict_to_json(c.prop20_verdict)},
              {"orientation", {{"orientable", c.orientation.orientable}, {"signs", signs}}},
              {"fundamental_class", io::chain_to_json(c.fundamental_class)},
              {"homology_coordinates", io::coordinates_to_json(c.coordinates)},
              {"limit", bound_json(c.main)},
              {"boundary_limit", bound_json(c.boundary)},
              {"obstruction", obstruction_json(c.obstruction)},
              {"status", status_word(c.status())}};
}

json certificate_json(const BordismCertificate& c) {
  return json{{"kind", "bordism"},
              {"k", c.bordism.k},
              {"mode", c.mode == BordismMode::Absolute ? "absolute" : "relative"},
              {"bordism", io::bordism_to_json(c.bordism)},
              {"map", io::vertex_map_to_json(c.map.vertex_map())},
              {"target", target_json(c.target)},
              {"nullbordism", io::verdict_to_json(c.nullbordism_verdict)},
              {"sigma", sigma_json(c.sigma, c.bordism.side_boundary())},
              {"prop20", io::verdict_to_json(c.prop20_verdict)},
              {"limit", bound_json(c.main)},
              {"side_limit", bound_json(c.side)},
              {"obstruction", obstruction_json(c.obstruction)},
              {"status", status_word(c.status())}};
}

namespace {

// Verdicts that can be recomputed from the recorded data alone.
void recheck_bound(const json& rec, const std::string& name, const SimplexSet& expected_carrier,
                   int expected_bound, std::vector<std::string>& out) {
  const auto carrier = io::simplices_from_json(rec.at("carrier"));
  const SimplexSet recorded(carrier.begin(), carrier.end());
  if (recorded != expected_carrier) out.push_back(name + ".carrier: not the image of Sigma");
  const int ld = recorded.empty() ? -1 : recorded.rbegin()->dimension();
  if (rec.at("limit_dimension").get<int>() != ld) out.push_back(name + ".limit_dimension");
  if (rec.at("bound").get<int>() != expected_bound) out.push_back(name + ".bound");
  if (rec.at("holds").get<bool>() != (ld <= expected_bound)) out.push_back(name + ".holds");
}

void recheck_obstruction(const json& rec, std::vector<std::string>& out) {
  const auto table = GammaTable::known();
  const auto gamma = rec.at("required_gamma").get<std::vector<int>>();
  const int bound = rec.at("cw_dimension_bound").get<int>();
  std::vector<int> expected;
  for (int n = 0; n <= bound; ++n) expected.push_back(n);
  if (gamma != expected) out.push_back("obstruction.required_gamma");
  const bool vanish = std::all_of(gamma.begin(), gamma.end(), [&](int n) { return table.trivial(n); });
  if (rec.at("all_vanish").get<bool>() != vanish) out.push_back("obstruction.all_vanish");
}

SimplexSet image_of(const std::map<Vertex, Vertex>& m, const SimplexSet& s) {
  SimplexSet out;
  for (const auto& x : s) {
    std::vector<Vertex> vs;
    for (Vertex v : x) {
      auto it = m.find(v);
      if (it == m.end()) throw MalformedInput("map misses vertex " + std::to_string(v));
      vs.push_back(it->second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    out.insert(Simplex(std::move(vs)));
  }
  return out;
}

SimplexSet filter(const SimplexSet& s, const SimplicialComplex& k) {
  SimplexSet out;
  for (const auto& x : s) {
    if (k.contains(x)) out.insert(x);
  }
  return out;
}

}  // namespace

CertificateCheck verify_certificate(const json& cert) {
  CertificateCheck out;
  auto& mm = out.mismatches;
  try {
    const auto kind = cert.at("kind").get<std::string>();
    const auto m = io::vertex_map_from_json(cert.at("map"));
    const auto tj = io::target_from_json(cert.at("target"));
    const TargetPair target{tj.space, tj.relative};
    const int k = cert.at("k").get<int>();
    const auto sigma_list = io::simplices_from_json(cert.at("sigma").at("simplices"));
    const SimplexSet sigma(sigma_list.begin(), sigma_list.end());

    json fresh;
    if (kind == "pseudocycle") {
      const auto q = io::circuit_from_json(cert.at("circuit"));
      recheck_bound(cert.at("limit"), "limit", image_of(m, sigma), floor_bound(k - 2), mm);
      recheck_bound(cert.at("boundary_limit"), "boundary_limit", image_of(m, filter(sigma, q.boundary)),
                    floor_bound(k - 3), mm);
      fresh = certificate_json(psi(q, SimplicialMap(q.complex, target.space, m), target));
    } else if (kind == "bordism") {
      const auto r = io::bordism_from_json(cert.at("bordism"));
      const auto mode = cert.at("mode").get<std::string>() == "absolute" ? BordismMode::Absolute
                                                                       : BordismMode::Relative;
      recheck_bound(cert.at("limit"), "limit", image_of(m, sigma), floor_bound(k - 1), mm);
      recheck_bound(cert.at("side_limit"), "side_limit", image_of(m, filter(sigma, r.side_boundary())),
                    floor_bound(k - 2), mm);
      fresh = certificate_json(
          verify_bordism_certificate(r, SimplicialMap(r.complex, target.space, m), target, mode));
    } else {
      throw MalformedInput("unknown certificate kind \"" + kind + "\"");
    }
    recheck_obstruction(cert.at("obstruction"), mm);
    for (const auto& op : json::diff(cert, fresh)) mm.push_back("recomputed " + op.at("path").get<std::string>());
    if (!mm.empty()) {
      out.status = Status::Fail;
    } else {
      const auto s = cert.at("status").get<std::string>();
      out.status = s == "valid" ? Status::Pass : s == "unknown" ? Status::Unknown : Status::Fail;
    }
  } catch (const StageFailure& e) {
    mm.push_back(std::string("pipeline: ") + e.what());
    out.status = Status::Fail;
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("certificate: ") + e.what());
  }
  return out;
}

}  // namespace circuitsmith
