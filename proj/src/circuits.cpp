#include "circuitsmith/circuits.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace circuitsmith {

namespace {

std::vector<Simplex> above_dimension(const SimplicialComplex& k, int d) {
  std::vector<Simplex> out;
  for (const auto& s : k) {
    if (s.dimension() > d) out.push_back(s);
  }
  return out;
}

std::vector<Simplex> symmetric_difference(const SimplexSet& a, const SimplexSet& b) {
  std::vector<Simplex> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

SimplexSet minus(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplexSet out;
  for (const auto& s : a) {
    if (!b.contains(s)) out.insert(s);
  }
  return out;
}

// Structural problems throw at the top level and become failed checks in the
// boundary recursion.
void structural(bool top, Verdict& v, const std::string& name, bool holds,
                std::vector<Simplex> witnesses, const std::string& message) {
  if (holds) return;
  if (top) throw StructuralError(message);
  v.add(name, Status::Fail, std::move(witnesses), message);
}

void verify_impl(const RelativeCircuitData& d, bool top, Verdict& v, const std::string& prefix) {
  const auto& l = d.complex;
  const auto& bd = d.boundary;
  const auto& s = d.singular;

  const std::size_t before = v.checks().size();
  const auto stray = minus(bd, l);
  structural(top, v, prefix + "structure", stray.empty(),
             std::vector<Simplex>(stray.begin(), stray.end()),
             "boundary is not a subcomplex of the circuit");
  structural(top, v, prefix + "structure", s.is_subcomplex_of(l), {},
             "singular set is not a subcomplex of the circuit");
  if (v.checks().size() != before) return;

  if (l.empty()) {
    v.add(prefix + "empty", Status::Pass, {}, "empty circuit");
    return;
  }
  structural(top, v, prefix + "dimension", l.dimension() == d.k, {},
             "complex has dimension " + std::to_string(l.dimension()) + ", expected " +
                 std::to_string(d.k));
  structural(top, v, prefix + "singular_dimension", s.empty() || s.dimension() <= d.k - 2,
             above_dimension(s, d.k - 2),
             "singular set has dimension " + std::to_string(s.dimension()) + " > k-2");
  structural(top, v, prefix + "boundary_dimension", bd.empty() || bd.dimension() == d.k - 1, {},
             "boundary has dimension " + std::to_string(bd.dimension()) + ", expected " +
                 std::to_string(d.k - 1));
  if (v.checks().size() != before) return;

  // Q = closure(Q \ S): pure, and every simplex of S is a face of one outside S.
  std::vector<Simplex> closure_witnesses;
  for (const auto& m : l.maximal_simplices()) {
    if (m.dimension() != d.k) closure_witnesses.push_back(m);
  }
  for (const auto& sigma : s) {
    bool covered = false;
    for (const auto& c : l.cofaces(sigma)) {
      if (!s.contains(c)) { covered = true; break; }
    }
    if (!covered) closure_witnesses.push_back(sigma);
  }
  v.add(prefix + "closure", closure_witnesses.empty() ? Status::Pass : Status::Fail,
        closure_witnesses);

  const auto region = complement_in(l, s);
  const auto report = region_is_pl_manifold(region, d.k);
  switch (report.verdict) {
    case Tri::Yes: v.add(prefix + "manifold", Status::Pass); break;
    case Tri::No: v.add(prefix + "manifold", Status::Fail, report.witnesses, "non-manifold points"); break;
    case Tri::Unknown:
      v.add(prefix + "manifold", Status::Unknown, report.witnesses, "link recognition undecided");
      break;
  }

  // Boundary of Q \ S must be exactly dQ \ S (among decided simplices).
  // Simplices already reported as non-manifold or undecided are skipped.
  const SimplexSet reported(report.witnesses.begin(), report.witnesses.end());
  std::vector<Simplex> mismatch;
  for (const auto& x : symmetric_difference(minus(bd, s), report.boundary)) {
    if (!reported.count(x)) mismatch.push_back(x);
  }
  v.add(prefix + "boundary", mismatch.empty() ? Status::Pass : Status::Fail, mismatch,
        mismatch.empty() ? "" : "manifold boundary differs from the designated boundary");

  if (bd.empty()) {
    v.add(prefix + "boundary_circuit", Status::Pass, {}, "closed circuit");
    return;
  }
  const auto s_bd = complex_intersection(s, bd);
  const std::string sub = prefix + "boundary_circuit.";
  if (!s_bd.empty() && s_bd.dimension() > d.k - 3) {
    v.add(sub + "singular_dimension", Status::Fail, above_dimension(s_bd, d.k - 3),
          "S(dQ) = S(Q) n dQ must have dimension <= " + std::to_string(d.k - 3));
    return;
  }
  verify_impl(RelativeCircuitData{bd, SimplicialComplex{}, d.k - 1, s_bd}, false, v, sub);
}

}  // namespace

SimplicialComplex default_singular_set(const SimplicialComplex& complex,
                                       const SimplicialComplex& boundary, int k) {
  SimplexSet bad;
  for (const auto& s : complex) {
    const PointClass c = classify_point(s, complex, k);
    const bool in_boundary = boundary.contains(s);
    if (c == PointClass::NonManifold || (c == PointClass::BoundaryManifold && !in_boundary) ||
        (c == PointClass::InteriorManifold && in_boundary)) {
      bad.insert(s);
    }
  }
  for (const auto& s : boundary) {
    const PointClass c = classify_point(s, boundary, k - 1);
    if (c == PointClass::NonManifold || c == PointClass::BoundaryManifold) bad.insert(s);
  }
  return SimplicialComplex::closure_of(bad);
}

RelativeCircuitData with_default_singular_set(RelativeCircuitData data) {
  data.singular = default_singular_set(data.complex, data.boundary, data.k);
  return data;
}

Verdict verify_circuit(const RelativeCircuitData& data) {
  Verdict v;
  verify_impl(data, true, v, "");
  return v;
}

RelativeCircuitData boundary_circuit(const RelativeCircuitData& data) {
  const auto v = verify_circuit(data);
  if (!v.ok()) throw ContractError("boundary_circuit requires a verified circuit");
  return RelativeCircuitData{data.boundary, SimplicialComplex{}, data.k - 1,
                             complex_intersection(data.singular, data.boundary)};
}

// ---------------------------------------------------------------------------
// Bordisms

SimplicialComplex BordismData::side_boundary() const {
  SimplexSet outside;
  for (const auto& s : boundary) {
    if (!circuit.contains(s)) outside.insert(s);
  }
  return SimplicialComplex::closure_of(outside);
}

Verdict verify_nullbordism(const BordismData& r, const RelativeCircuitData& q, BordismMode mode) {
  if (!(q.complex == r.circuit) || !(q.boundary == r.circuit_boundary) || q.k != r.k) {
    throw StructuralError("circuit is not the one designated inside the bordism");
  }
  if (!r.circuit_boundary.is_subcomplex_of(r.circuit)) {
    throw StructuralError("designated dQ is not a subcomplex of Q");
  }
  Verdict v;
  const auto outside = minus(r.circuit, r.boundary);
  v.add("q_in_boundary", outside.empty() ? Status::Pass : Status::Fail,
        std::vector<Simplex>(outside.begin(), outside.end()),
        outside.empty() ? "" : "Q is not contained in dR");

  v.append(verify_circuit(r.as_circuit()), "R.");
  v.append(verify_circuit(q), "Q.");

  const auto s_rq = complex_intersection(r.singular, r.circuit);
  v.add("singular_compatibility", s_rq == q.singular ? Status::Pass : Status::Fail,
        symmetric_difference(s_rq.simplices(), q.singular.simplices()),
        "S(R) n Q must equal S(Q)");
  const auto s_r_dq = complex_intersection(r.singular, r.circuit_boundary);
  const auto s_dq = complex_intersection(q.singular, q.boundary);
  v.add("boundary_singular_compatibility", s_r_dq == s_dq ? Status::Pass : Status::Fail,
        symmetric_difference(s_r_dq.simplices(), s_dq.simplices()), "S(R) n dQ must equal S(dQ)");

  const auto side = r.side_boundary();
  if (mode == BordismMode::Absolute) {
    const auto extra = minus(side, r.circuit);
    v.add("side_boundary_empty", extra.empty() ? Status::Pass : Status::Fail,
          std::vector<Simplex>(extra.begin(), extra.end()),
          extra.empty() ? "" : "dR has simplices outside Q");
  } else if (!side.empty()) {
    const RelativeCircuitData side_data{side, r.circuit_boundary, r.k,
                                        complex_intersection(r.singular, side)};
    try {
      v.append(verify_circuit(side_data), "side.");
    } catch (const StructuralError& e) {
      v.add("side.structure", Status::Fail, {}, e.what());
    }
  }
  return v;
}

Verdict verify_nullbordism(const BordismData& r, BordismMode mode) {
  return verify_nullbordism(r, r.circuit_data(), mode);
}

// ---------------------------------------------------------------------------
// Singular sets

const char* to_string(SigmaCase c) {
  switch (c) {
    case SigmaCase::A: return "A";
    case SigmaCase::B: return "B";
    case SigmaCase::C: return "C";
  }
  return "?";
}

namespace {

SigmaSet finish_sigma(SigmaCase c, SimplexSet members, int ambient, int bound) {
  SigmaSet out;
  out.kase = c;
  out.ambient_dimension = ambient;
  out.dimension_bound = bound;
  out.face_closed = is_face_closed(members);
  if (!out.face_closed) {
    throw std::logic_error("singular set is not face-closed; construction invariant violated");
  }
  out.sigma = SimplicialComplex(std::move(members));
  out.codim_ok = out.sigma.dimension() <= bound;
  return out;
}

}  // namespace

SigmaSet sigma_absolute(const RelativeCircuitData& p) {
  if (!p.boundary.empty()) throw StructuralError("case A needs an absolute circuit");
  return finish_sigma(SigmaCase::A, skeleton(p.complex, std::max(p.k - 2, -1)).simplices(), p.k,
                      p.k - 2);
}

SigmaSet sigma_relative(const RelativeCircuitData& q) {
  SimplexSet members;
  for (const auto& s : q.complex) {
    if (s.dimension() > q.k - 2) break;
    if (s.dimension() == q.k - 2 && q.boundary.contains(s)) continue;
    members.insert(s);
  }
  return finish_sigma(SigmaCase::B, std::move(members), q.k, q.k - 2);
}

SigmaSet sigma_bordism(const BordismData& r) {
  const int k = r.k;
  SimplexSet k_codim2;  // K(k-2)
  for (const auto& s : r.circuit_boundary.simplices_of_dimension(k - 2)) k_codim2.insert(s);
  SimplexSet members;
  for (const auto& s : r.complex) {
    if (s.dimension() > k - 1) break;
    if (s.dimension() == k - 1 && r.boundary.contains(s)) continue;
    bool in_star = false;
    if (!k_codim2.empty() && s.dimension() >= k - 2) {
      for (const auto& f : s.faces()) {
        if (f.dimension() == k - 2 && k_codim2.count(f)) { in_star = true; break; }
      }
    }
    if (!in_star) members.insert(s);
  }
  return finish_sigma(SigmaCase::C, std::move(members), k + 1, k - 1);
}

namespace {

void add_sigma_checks(Verdict& v, const SigmaSet& sigma) {
  v.add("sigma.face_closed", sigma.face_closed ? Status::Pass : Status::Fail);
  v.add("sigma.codimension", sigma.codim_ok ? Status::Pass : Status::Fail,
        above_dimension(sigma.sigma, sigma.dimension_bound),
        "dim " + std::to_string(sigma.sigma.dimension()) + " <= " +
            std::to_string(sigma.dimension_bound));
}

void add_region_checks(Verdict& v, const std::string& prefix, const SimplicialComplex& host,
                       const SimplicialComplex& sigma, int dim, const SimplexSet& expected_boundary) {
  const auto region = complement_in(host, complex_intersection(host, sigma));
  const auto report = region_is_pl_manifold(region, dim);
  switch (report.verdict) {
    case Tri::Yes: v.add(prefix + "manifold", Status::Pass); break;
    case Tri::No: v.add(prefix + "manifold", Status::Fail, report.witnesses); break;
    case Tri::Unknown: v.add(prefix + "manifold", Status::Unknown, report.witnesses); break;
  }
  const SimplexSet reported(report.witnesses.begin(), report.witnesses.end());
  std::vector<Simplex> diff;
  for (const auto& x : symmetric_difference(expected_boundary, report.boundary)) {
    if (!reported.count(x)) diff.push_back(x);
  }
  v.add(prefix + "boundary", diff.empty() ? Status::Pass : Status::Fail, diff);
}

void add_skeleton_check(Verdict& v, const SimplicialComplex& host, const SimplicialComplex& sigma,
                        int skeleton_dim) {
  std::vector<Simplex> low;
  for (const auto& s : host) {
    if (!sigma.contains(s) && s.dimension() <= skeleton_dim) low.push_back(s);
  }
  v.add("skeleton_complement", low.empty() ? Status::Pass : Status::Fail, low,
        "complement of Sigma must avoid the " + std::to_string(skeleton_dim) + "-skeleton");
}

}  // namespace

Verdict verify_prop20(const SigmaSet& sigma, const RelativeCircuitData& data) {
  Verdict v;
  add_sigma_checks(v, sigma);
  const auto& s = sigma.sigma;
  if (sigma.kase == SigmaCase::A) {
    // Here data.k plays the role of k-1.
    add_region_checks(v, "P.", data.complex, s, data.k, {});
    add_skeleton_check(v, data.complex, s, data.k - 2);
  } else if (sigma.kase == SigmaCase::B) {
    add_region_checks(v, "Q.", data.complex, s, data.k, minus(data.boundary, s));
    add_skeleton_check(v, data.complex, s, data.k - 3);
  } else {
    throw StructuralError("case C needs bordism data");
  }
  return v;
}

Verdict verify_prop20(const SigmaSet& sigma, const BordismData& data) {
  if (sigma.kase != SigmaCase::C) throw StructuralError("bordism data needs case C");
  Verdict v;
  add_sigma_checks(v, sigma);
  const auto& s = sigma.sigma;
  add_region_checks(v, "R.", data.complex, s, data.k + 1, minus(data.boundary, s));
  const auto not_embedded = minus(data.circuit, data.boundary);
  v.add("Q.properly_embedded", not_embedded.empty() ? Status::Pass : Status::Fail,
        std::vector<Simplex>(not_embedded.begin(), not_embedded.end()));
  add_region_checks(v, "Q.", data.circuit, s, data.k, minus(data.circuit_boundary, s));
  add_skeleton_check(v, data.complex, s, data.k - 3);
  return v;
}

// ---------------------------------------------------------------------------
// Gluing

namespace {

struct GlueState {
  RelativeCircuitData whole;  // disjoint union before identification
  SimplicialComplex e, f;
  std::map<Vertex, Vertex> f_to_e;
  std::vector<RelativeCircuitData> pieces;
  std::vector<std::map<Vertex, Vertex>> into_whole;  // piece vertex -> vertex of `whole`
};

std::map<Vertex, Vertex> identity_on(const SimplicialComplex& k) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : k.vertices()) m.emplace(v, v);
  return m;
}

void check_iso(const GlueSpec& spec) {
  const auto ve = spec.first_part.vertices();
  if (spec.iso.size() != ve.size()) throw MalformedInput("iso must be defined exactly on E");
  std::set<Vertex> images;
  for (Vertex v : ve) {
    auto it = spec.iso.find(v);
    if (it == spec.iso.end()) throw MalformedInput("iso undefined on vertex " + std::to_string(v));
    images.insert(it->second);
  }
  if (images.size() != ve.size()) throw MalformedInput("iso is not injective");
  if (!(relabel(spec.first_part, spec.iso) == spec.second_part)) {
    throw MalformedInput("iso is not a simplicial isomorphism E -> F");
  }
}

std::optional<std::pair<SimplicialComplex, std::map<Vertex, Vertex>>> try_quotient(
    const GlueState& st) {
  std::map<Vertex, Vertex> rep;
  for (Vertex v : st.whole.complex.vertices()) {
    auto it = st.f_to_e.find(v);
    rep.emplace(v, it == st.f_to_e.end() ? v : it->second);
  }
  SimplexSet images;
  for (const auto& s : st.whole.complex) {
    std::vector<Vertex> img;
    for (Vertex v : s) img.push_back(rep.at(v));
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return std::nullopt;
    images.insert(Simplex(std::move(img)));
  }
  if (images.size() != st.whole.complex.size() - st.f.size()) return std::nullopt;
  if (!is_face_closed(images)) {
    throw std::logic_error("vertex quotient produced a non-face-closed set");
  }
  return std::make_pair(SimplicialComplex(std::move(images)), std::move(rep));
}

GlueState refine(const GlueState& st) {
  const auto sd = barycentric_subdivision(st.whole.complex);
  GlueState out;
  out.whole = subdivide(st.whole, sd);
  out.e = sd.subdivide(st.e);
  out.f = sd.subdivide(st.f);
  for (const auto& sigma : st.f) {
    std::vector<Vertex> partner;
    for (Vertex v : sigma) partner.push_back(st.f_to_e.at(v));
    out.f_to_e.emplace(sd.barycenter.at(sigma), sd.barycenter.at(Simplex(std::move(partner))));
  }
  for (std::size_t i = 0; i < st.pieces.size(); ++i) {
    const auto& p = st.pieces[i];
    const auto& m = st.into_whole[i];
    RelativeCircuitData piece{sd.subdivide(relabel(p.complex, m)), sd.subdivide(relabel(p.boundary, m)), p.k,
                              sd.subdivide(relabel(p.singular, m))};
    out.into_whole.push_back(identity_on(piece.complex));
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

GlueResult run_glue(GlueState st, bool reversed) {
  GlueResult out;
  out.second_reversed = reversed;
  constexpr int kMaxRefinements = 3;
  std::optional<std::pair<SimplicialComplex, std::map<Vertex, Vertex>>> q;
  while (!(q = try_quotient(st))) {
    if (out.subdivisions == kMaxRefinements) {
      throw StructuralError("gluing does not yield a simplicial complex after refinement");
    }
    st = refine(st);
    ++out.subdivisions;
  }
  const auto& [complex, rep] = *q;

  SimplexSet outside;
  for (const auto& s : st.whole.boundary) {
    if (!st.e.contains(s) && !st.f.contains(s)) outside.insert(s);
  }
  auto image_of = [&](const SimplicialComplex& k) {
    std::map<Vertex, Vertex> m;
    for (Vertex v : k.vertices()) m.emplace(v, rep.at(v));
    return relabel(k, m);
  };
  out.circuit.complex = complex;
  out.circuit.boundary = image_of(SimplicialComplex::closure_of(outside));
  out.circuit.singular = image_of(st.whole.singular);
  out.circuit.k = st.whole.k;

  out.first_input = st.pieces.at(0);
  for (const auto& [v, w] : st.into_whole.at(0)) out.from_first.emplace(v, rep.at(w));
  if (st.pieces.size() > 1) {
    out.second_input = st.pieces.at(1);
    for (const auto& [v, w] : st.into_whole.at(1)) out.from_second.emplace(v, rep.at(w));
  }
  try {
    out.verdict = verify_circuit(out.circuit);
  } catch (const StructuralError& e) {
    out.verdict.add("structure", Status::Fail, {}, e.what());
  }
  return out;
}

}  // namespace

GlueResult glue(const RelativeCircuitData& a, const RelativeCircuitData& b, const GlueSpec& spec) {
  if (a.k != b.k) throw StructuralError("glued circuits must have equal dimension");
  if (!spec.first_part.is_subcomplex_of(a.boundary)) throw StructuralError("E is not in dA");
  if (!spec.second_part.is_subcomplex_of(b.boundary)) throw StructuralError("F is not in dB");
  check_iso(spec);

  const auto u = disjoint_union(a.complex, b.complex);
  GlueState st;
  st.whole.complex = u.complex;
  st.whole.boundary = complex_union(a.boundary, relabel(b.boundary, u.from_second));
  st.whole.singular = complex_union(a.singular, relabel(b.singular, u.from_second));
  st.whole.k = a.k;
  st.e = spec.first_part;
  st.f = relabel(spec.second_part, u.from_second);
  for (const auto& [ev, fv] : spec.iso) st.f_to_e.emplace(u.from_second.at(fv), ev);
  st.pieces.push_back(a);
  st.into_whole.push_back(u.from_first);
  st.pieces.push_back(b);
  st.into_whole.push_back(u.from_second);
  return run_glue(std::move(st), spec.reverse_second);
}

GlueResult glue_self(const RelativeCircuitData& a, const GlueSpec& spec) {
  if (!spec.first_part.is_subcomplex_of(a.boundary)) throw StructuralError("E is not in dA");
  if (!spec.second_part.is_subcomplex_of(a.boundary)) throw StructuralError("F is not in dA");
  check_iso(spec);
  for (Vertex v : spec.first_part.vertices()) {
    if (spec.second_part.contains_vertex(v)) {
      throw StructuralError("self-gluing needs vertex-disjoint E and F");
    }
  }
  GlueState st;
  st.whole = a;
  st.e = spec.first_part;
  st.f = spec.second_part;
  for (const auto& [ev, fv] : spec.iso) st.f_to_e.emplace(fv, ev);
  st.pieces.push_back(a);
  st.into_whole.push_back(identity_on(a.complex));
  return run_glue(std::move(st), spec.reverse_second);
}

std::pair<SimplicialComplex, SimplicialComplex> cut(const GlueResult& glued) {
  auto first = relabel(glued.first_input.complex, glued.from_first);
  SimplicialComplex second;
  if (!glued.from_second.empty()) second = relabel(glued.second_input.complex, glued.from_second);
  return {first, second};
}

// ---------------------------------------------------------------------------
// Cylinders and subdivision

RelativeCircuitData subdivide(const RelativeCircuitData& q, const BarycentricSubdivision& sd) {
  return RelativeCircuitData{sd.complex, sd.subdivide(q.boundary), q.k, sd.subdivide(q.singular)};
}

SimplicialMap last_vertex_map(const BarycentricSubdivision& sd, const SimplicialComplex& k) {
  std::map<Vertex, Vertex> m;
  for (std::size_t i = 0; i < sd.carrier.size(); ++i) {
    m.emplace(static_cast<Vertex>(i), sd.carrier[i].vertices().back());
  }
  return SimplicialMap(sd.complex, k, std::move(m));
}

BordismData cylinder(const RelativeCircuitData& q) {
  const auto interval = build_complex({{0, 1}});
  const auto p = product_complex(q.complex, interval);
  BordismData r;
  r.k = q.k;
  r.complex = p.complex;
  SimplexSet m, l, kk, s;
  for (const auto& sigma : p.complex) {
    const auto base = p.first_projection.image(sigma);
    const bool at_end = p.second_projection.image(sigma).size() == 1;
    if (at_end || q.boundary.contains(base)) m.insert(sigma);
    if (at_end) l.insert(sigma);
    if (at_end && q.boundary.contains(base)) kk.insert(sigma);
    if (q.singular.contains(base)) s.insert(sigma);
  }
  r.boundary = SimplicialComplex(std::move(m));
  r.circuit = SimplicialComplex(std::move(l));
  r.circuit_boundary = SimplicialComplex(std::move(kk));
  r.singular = SimplicialComplex(std::move(s));
  for (int t : {0, 1}) {
    BordismEnd end{q, {}};
    for (Vertex v : q.complex.vertices()) end.embedding.emplace(v, p.id.at({v, t}));
    r.ends.push_back(std::move(end));
  }
  return r;
}

BordismData subdivision_cylinder(const RelativeCircuitData& q) {
  const auto sd = barycentric_subdivision(q.complex);
  const auto& verts = q.complex.vertices();
  const Vertex offset = verts.empty() ? 0 : verts.back() + 1;
  auto top = [&](const Simplex& sigma) { return offset + sd.barycenter.at(sigma); };

  SimplexSet all, m, s;
  for (const auto& tau : q.complex) {
    all.insert(tau);
    m.insert(tau);  // bottom end
    if (q.singular.contains(tau)) s.insert(tau);
  }
  for (const auto& c : sd.complex) {
    const auto chain = sd.chain_of(c);
    std::vector<Vertex> tops;
    for (const auto& sigma : chain) tops.push_back(top(sigma));
    const Simplex& first = chain.front();
    const Simplex& last = chain.back();
    std::vector<std::optional<Simplex>> bottoms{std::nullopt};
    for (const auto& f : first.faces()) bottoms.emplace_back(f);
    for (const auto& b : bottoms) {
      std::vector<Vertex> vs = tops;
      if (b) vs.insert(vs.end(), b->begin(), b->end());
      Simplex cell(std::move(vs));
      if (q.boundary.contains(last)) m.insert(cell);
      if (q.singular.contains(last)) s.insert(cell);
      if (!b) m.insert(cell);  // top end
      all.insert(std::move(cell));
    }
  }
  BordismData r;
  r.k = q.k;
  r.complex = SimplicialComplex(std::move(all));
  r.boundary = SimplicialComplex(std::move(m));
  r.singular = SimplicialComplex(std::move(s));

  std::map<Vertex, Vertex> top_ids;
  for (std::size_t i = 0; i < sd.carrier.size(); ++i) {
    top_ids.emplace(static_cast<Vertex>(i), offset + static_cast<Vertex>(i));
  }
  const auto top_end = subdivide(q, sd);
  r.circuit = complex_union(q.complex, relabel(top_end.complex, top_ids));
  r.circuit_boundary = complex_union(q.boundary, relabel(top_end.boundary, top_ids));

  BordismEnd bottom{q, {}};
  for (Vertex v : verts) bottom.embedding.emplace(v, v);
  r.ends.push_back(std::move(bottom));
  r.ends.push_back(BordismEnd{top_end, top_ids});
  return r;
}

}  // namespace circuitsmith
