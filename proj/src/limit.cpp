#include "circuitsmith/limit.hpp"

#include <algorithm>

namespace circuitsmith {

PuncturedComplex::PuncturedComplex(SimplicialComplex w, SimplicialComplex s)
    : w_(std::move(w)), s_(std::move(s)) {
  if (!s_.is_subcomplex_of(w_)) throw MalformedInput("punctures are not a subcomplex");
  for (const auto& m : w_.maximal_simplices()) {
    if (s_.contains(m)) {
      throw MalformedInput("maximal simplex " + m.to_string() + " lies at infinity");
    }
  }
}

CompactifiedMap::CompactifiedMap(PuncturedComplex domain, PuncturedComplex target,
                                 std::map<Vertex, Vertex> vertex_map)
    : domain_(std::move(domain)),
      target_(std::move(target)),
      g_(domain_.compactification(), target_.compactification(), std::move(vertex_map)) {
  for (const auto& s : domain_.compactification()) {
    if (domain_.punctures().contains(s)) continue;
    if (target_.punctures().contains(g_.image(s))) {
      throw MalformedInput("finite simplex " + s.to_string() + " is sent to infinity");
    }
  }
}

namespace {

int dimension_of(const SimplexSet& s) { return s.empty() ? -1 : s.rbegin()->dimension(); }

bool subset(const SimplexSet& a, const SimplexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplexSet united(const SimplexSet& a, const SimplexSet& b) {
  SimplexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

std::string describe(const SimplexSet& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x.to_string();
  return out + "}";
}

LawCheck inclusion(std::string law, const SimplexSet& a, const SimplexSet& b) {
  const bool ok = subset(a, b);
  return {std::move(law), ok, ok ? "" : describe(a) + " not in " + describe(b)};
}

LawCheck equality(std::string law, const SimplexSet& a, const SimplexSet& b) {
  const bool ok = a == b;
  return {std::move(law), ok, ok ? "" : describe(a) + " != " + describe(b)};
}

LawCheck at_most(std::string law, int lhs, int rhs) {
  const bool ok = lhs <= rhs;
  return {std::move(law), ok, std::to_string(lhs) + " <= " + std::to_string(rhs)};
}

LawCheck equal_int(std::string law, int lhs, int rhs) {
  const bool ok = lhs == rhs;
  return {std::move(law), ok, std::to_string(lhs) + " == " + std::to_string(rhs)};
}

std::map<Vertex, Vertex> restricted_map(const SimplicialMap& g, const SimplicialComplex& sub) {
  std::map<Vertex, Vertex> out;
  for (Vertex v : sub.vertices()) out.emplace(v, g(v));
  return out;
}

// Closure of the finite simplices among `gens`, punctured where it meets S.
CompactifiedMap restrict_to(const CompactifiedMap& f, const SimplexSet& gens) {
  const auto w = SimplicialComplex::closure_of(gens);
  const auto s = complex_intersection(w, f.domain().punctures());
  return CompactifiedMap(PuncturedComplex(w, s), f.target(), restricted_map(f.extension(), w));
}

}  // namespace

LimitSetResult limit_set(const CompactifiedMap& f) {
  SimplexSet carrier;
  for (const auto& s : f.domain().punctures()) {
    auto img = f.extension().image(s);
    if (!f.target().punctures().contains(img)) carrier.insert(std::move(img));
  }
  LimitSetResult out;
  out.limit_dimension = dimension_of(carrier);
  out.carrier = OpenSimplexSet(f.target().compactification(), std::move(carrier));
  return out;
}

bool is_proper(const CompactifiedMap& f) { return limit_set(f).carrier.empty(); }

bool all_hold(const std::vector<LawCheck>& laws) {
  return std::all_of(laws.begin(), laws.end(), [](const LawCheck& l) { return l.holds; });
}

std::vector<LawCheck> basic_laws(const CompactifiedMap& f) {
  const auto l = limit_set(f);
  const auto& s = f.domain().punctures();
  const auto& sy = f.target().punctures();
  std::vector<LawCheck> laws;

  // Proper iff every point at infinity goes to infinity.
  const bool to_infinity = subset(s.simplices(), f.extension().preimage(sy.simplices()));
  laws.push_back({"3b", to_infinity == is_proper(f),
                  to_infinity ? "g(S) in S_Y" : "g(S) meets Y"});

  // Largest compact subcomplex C of Y missing L(f): its preimage misses S.
  SimplexSet c;
  for (const auto& t : f.target().compactification()) {
    const auto faces = t.faces();
    if (std::none_of(faces.begin(), faces.end(), [&](const Simplex& x) {
          return sy.contains(x) || l.carrier.contains(x);
        })) {
      c.insert(t);
    }
  }
  SimplexSet bad;
  for (const auto& x : f.extension().preimage(c)) {
    if (s.contains(x)) bad.insert(x);
  }
  laws.push_back({"3a", bad.empty(), bad.empty() ? "" : "preimage reaches " + describe(bad)});
  laws.push_back(at_most("6f", l.limit_dimension, s.dimension()));
  return laws;
}

bool is_surjective(const CompactifiedMap& f) {
  SimplexSet images;
  for (const auto& x : f.domain().interior().members()) images.insert(f.extension().image(x));
  for (const auto& t : f.target().interior().members()) {
    if (!images.count(t)) return false;
  }
  return true;
}

ComposeResult compose(const CompactifiedMap& f, const CompactifiedMap& h) {
  if (!(f.target() == h.domain())) throw StructuralError("middle spaces differ");
  const auto& w = f.domain().compactification();
  auto s = f.domain().punctures().simplices();
  for (const auto& x : f.extension().preimage(h.domain().punctures().simplices())) s.insert(x);

  ComposeResult out{
      CompactifiedMap(PuncturedComplex(w, SimplicialComplex(std::move(s))), h.target(),
                      circuitsmith::compose(f.extension(), h.extension()).vertex_map()),
      {}};

  const auto lf = limit_set(f);
  const auto lh = limit_set(h);
  const auto lhf = limit_set(out.map);
  const auto image = h.extension().image(lf.carrier.members());
  auto& laws = out.laws;
  laws.push_back(inclusion("3f.lower", image, lhf.carrier.members()));
  laws.push_back(inclusion("3f.upper", lhf.carrier.members(), united(image, lh.carrier.members())));
  if (lh.carrier.empty()) laws.push_back(equality("3f.proper", lhf.carrier.members(), image));
  if (is_surjective(f)) {
    laws.push_back(inclusion("3g.surjective", lh.carrier.members(), lhf.carrier.members()));
    if (lf.carrier.empty()) {
      laws.push_back(equality("3g.surjective_proper", lh.carrier.members(), lhf.carrier.members()));
    }
  }
  laws.push_back(at_most("6e.lower", lf.limit_dimension, lhf.limit_dimension));
  laws.push_back(at_most("6e.upper", lhf.limit_dimension,
                         std::max(lf.limit_dimension, lh.limit_dimension)));
  laws.push_back(at_most("6e.image_lower", dimension_of(image), lhf.limit_dimension));
  return out;
}

ProductResult product(const CompactifiedMap& f, const CompactifiedMap& f2) {
  ProductResult out;
  out.domain_cells = cell_product(f.domain().compactification(), f2.domain().compactification());
  out.target_cells = cell_product(f.target().compactification(), f2.target().compactification());
  const auto& dc = out.domain_cells;
  const auto& tc = out.target_cells;

  auto at_infinity = [](const std::pair<Simplex, Simplex>& cell, const PuncturedComplex& a,
                        const PuncturedComplex& b) {
    return a.punctures().contains(cell.first) || b.punctures().contains(cell.second);
  };
  SimplexSet s;
  for (const auto& x : dc.complex) {
    if (at_infinity(dc.top_cell(x), f.domain(), f2.domain())) s.insert(x);
  }
  SimplexSet sy;
  for (const auto& x : tc.complex) {
    if (at_infinity(tc.top_cell(x), f.target(), f2.target())) sy.insert(x);
  }
  std::map<Vertex, Vertex> m;
  for (std::size_t v = 0; v < dc.cells.size(); ++v) {
    const auto& [a, b] = dc.cells[v];
    m.emplace(static_cast<Vertex>(v),
              tc.id.at({f.extension().image(a), f2.extension().image(b)}));
  }
  out.map = CompactifiedMap(PuncturedComplex(dc.complex, SimplicialComplex(std::move(s))),
                            PuncturedComplex(tc.complex, SimplicialComplex(std::move(sy))),
                            std::move(m));

  // Right-hand side as open cells, with closures of images taken in W_Y.
  const auto l1 = limit_set(f).carrier.members();
  const auto l2 = limit_set(f2).carrier.members();
  auto finite_image = [](const CompactifiedMap& g) {
    SimplexSet out;
    for (const auto& t : g.extension().image(g.domain().compactification().simplices())) {
      if (!g.target().punctures().contains(t)) out.insert(t);
    }
    return out;
  };
  const auto c1 = finite_image(f);
  const auto c2 = finite_image(f2);
  std::set<std::pair<Simplex, Simplex>> cells;
  for (const auto& a : l1) {
    for (const auto& b : c2) cells.emplace(a, b);
  }
  for (const auto& a : c1) {
    for (const auto& b : l2) cells.emplace(a, b);
  }
  SimplexSet rhs;
  for (const auto& x : tc.complex) {
    if (cells.count(tc.top_cell(x))) rhs.insert(x);
  }
  const auto lp = limit_set(out.map);
  out.laws.push_back(equality("3e", lp.carrier.members(), rhs));
  if (l2.empty()) {
    out.laws.push_back(at_most("6c", lp.limit_dimension,
                               limit_set(f).limit_dimension + f2.domain().dimension()));
  }
  return out;
}

RestrictResult restrict_closed(const CompactifiedMap& f, const SimplicialComplex& w1) {
  if (!w1.is_subcomplex_of(f.domain().compactification())) {
    throw MalformedInput("restriction is not a subcomplex of the compactification");
  }
  SimplexSet gens;
  for (const auto& x : w1) {
    if (!f.domain().punctures().contains(x)) gens.insert(x);
  }
  RestrictResult out{restrict_to(f, gens), {}};
  const auto l1 = limit_set(out.map);
  const auto l = limit_set(f);
  out.laws.push_back(inclusion("3c", l1.carrier.members(), l.carrier.members()));
  out.laws.push_back(at_most("6a", l1.limit_dimension, l.limit_dimension));
  return out;
}

std::vector<LawCheck> union_laws(const CompactifiedMap& f, const SimplicialComplex& w1,
                                 const SimplicialComplex& w2) {
  if (!(complex_union(w1, w2) == f.domain().compactification())) {
    throw StructuralError("pieces do not cover the compactification");
  }
  const auto r1 = limit_set(restrict_closed(f, w1).map);
  const auto r2 = limit_set(restrict_closed(f, w2).map);
  const auto l = limit_set(f);
  return {equality("3d", l.carrier.members(), united(r1.carrier.members(), r2.carrier.members())),
          equal_int("6b", l.limit_dimension, std::max(r1.limit_dimension, r2.limit_dimension))};
}

PreimageResult preimage_restrict(const CompactifiedMap& f, const SimplicialComplex& a) {
  if (!a.is_subcomplex_of(f.target().compactification())) {
    throw MalformedInput("A is not a subcomplex of the target compactification");
  }
  SimplexSet gens;
  for (const auto& x : f.domain().interior().members()) {
    if (a.contains(f.extension().image(x))) gens.insert(x);
  }
  PreimageResult out{restrict_to(f, gens), {}, {}};
  out.limit = limit_set(out.map);
  SimplexSet bound;
  for (const auto& t : limit_set(f).carrier.members()) {
    if (a.contains(t)) bound.insert(t);
  }
  out.laws.push_back(inclusion("3i", out.limit.carrier.members(), bound));
  return out;
}

InfinityComparison equal_at_infinity(const CompactifiedMap& f, const CompactifiedMap& h) {
  if (!(f.domain() == h.domain()) || !(f.target() == h.target())) {
    throw StructuralError("maps must share domain and target");
  }
  InfinityComparison out;
  out.equal = true;
  for (Vertex v : f.domain().punctures().vertices()) {
    if (f.extension()(v) != h.extension()(v)) {
      out.equal = false;
      break;
    }
  }
  if (out.equal) {
    out.laws.push_back(
        equality("infinity", limit_set(f).carrier.members(), limit_set(h).carrier.members()));
  }
  return out;
}

ProjectionResult precompose_projection(const CompactifiedMap& f, const SimplicialComplex& k) {
  ProjectionResult out;
  const auto cp = cell_product(f.domain().compactification(), k);
  out.target_subdivision = barycentric_subdivision(f.target().compactification());
  const auto& sd = out.target_subdivision;

  SimplexSet s;
  for (const auto& x : cp.complex) {
    if (f.domain().punctures().contains(cp.top_cell(x).first)) s.insert(x);
  }
  std::map<Vertex, Vertex> m;
  for (std::size_t v = 0; v < cp.cells.size(); ++v) {
    m.emplace(static_cast<Vertex>(v), sd.barycenter.at(f.extension().image(cp.cells[v].first)));
  }
  out.map = CompactifiedMap(PuncturedComplex(cp.complex, SimplicialComplex(std::move(s))),
                            PuncturedComplex(sd.complex, sd.subdivide(f.target().punctures())),
                            std::move(m));
  const auto l = limit_set(f);
  const auto lp = limit_set(out.map);
  out.laws.push_back(equality("3g.projection", lp.carrier.members(),
                              sd.subdivide_open(l.carrier.members())));
  out.laws.push_back(equal_int("6d", lp.limit_dimension, l.limit_dimension));
  return out;
}

}  // namespace circuitsmith
