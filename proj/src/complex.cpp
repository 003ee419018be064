#include "circuitsmith/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

#include "circuitsmith/verdict.hpp"

namespace circuitsmith {

// ---------------------------------------------------------------------------
// Simplex

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw MalformedInput("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw MalformedInput("repeated vertex in simplex");
  }
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    std::vector<Vertex> f;
    f.reserve(vertices_.size() - 1);
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (j != i) f.push_back(vertices_[j]);
    }
    out.push_back(Simplex(Sorted{}, std::move(f)));
  }
  return out;
}

std::vector<Simplex> Simplex::faces() const {
  const std::size_t n = vertices_.size();
  std::vector<Simplex> out;
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Vertex> f;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) f.push_back(vertices_[j]);
    }
    out.push_back(Simplex(Sorted{}, std::move(f)));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << ']';
  return os.str();
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
  if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
  return a.vertices_ <=> b.vertices_;
}

Simplex unite(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Simplex(Simplex::Sorted{}, std::move(out));
}

std::optional<Simplex> difference(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (out.empty()) return std::nullopt;
  return Simplex(Simplex::Sorted{}, std::move(out));
}

// ---------------------------------------------------------------------------
// SimplicialComplex

bool is_face_closed(const SimplexSet& simplices) {
  for (const auto& s : simplices) {
    for (const auto& f : s.facets()) {
      if (!simplices.count(f)) return false;
    }
  }
  return true;
}

SimplicialComplex::SimplicialComplex(SimplexSet simplices) : simplices_(std::move(simplices)) {
  for (const auto& s : simplices_) {
    for (const auto& f : s.facets()) {
      if (!simplices_.count(f)) {
        throw MalformedInput("simplex set is not face-closed: " + s.to_string() +
                             " lacks face " + f.to_string());
      }
    }
  }
}

SimplicialComplex SimplicialComplex::closure_of(const SimplexSet& generators) {
  SimplicialComplex k;
  for (const auto& g : generators) {
    if (k.simplices_.count(g)) continue;
    for (auto& f : g.faces()) k.simplices_.insert(std::move(f));
  }
  return k;
}

SimplicialComplex SimplicialComplex::closure_of(const std::vector<Simplex>& generators) {
  return closure_of(SimplexSet(generators.begin(), generators.end()));
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : simplices_.rbegin()->dimension();
}

std::vector<Simplex> SimplicialComplex::simplices_of_dimension(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (s.dimension() == d) out.push_back(s);
    else if (s.dimension() > d) break;
  }
  return out;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::vector<Vertex> out;
  for (const auto& s : simplices_) {
    if (s.dimension() != 0) break;
    out.push_back(s[0]);
  }
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  // A simplex is maximal iff no simplex one dimension up has it as a facet.
  SimplexSet non_maximal;
  for (const auto& s : simplices_) {
    for (auto& f : s.facets()) non_maximal.insert(std::move(f));
  }
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (!non_maximal.count(s)) out.push_back(s);
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : simplices_) ++f[static_cast<std::size_t>(s.dimension())];
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (const auto& s : simplices_) chi += (s.dimension() % 2 == 0) ? 1 : -1;
  return chi;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
  return std::includes(other.simplices_.begin(), other.simplices_.end(), simplices_.begin(),
                       simplices_.end());
}

std::vector<Simplex> SimplicialComplex::cofaces(const Simplex& s) const {
  std::vector<Simplex> out;
  for (auto it = simplices_.lower_bound(s); it != simplices_.end(); ++it) {
    if (s.is_face_of(*it)) out.push_back(*it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// OpenSimplexSet

OpenSimplexSet::OpenSimplexSet(std::shared_ptr<const SimplicialComplex> host, SimplexSet members)
    : host_(std::move(host)), members_(std::move(members)) {
  for (const auto& s : members_) {
    if (!host_->contains(s)) {
      throw MalformedInput("open simplex set member " + s.to_string() + " not in host");
    }
  }
  closed_ = is_face_closed(members_);
}

int OpenSimplexSet::dimension() const {
  return members_.empty() ? -1 : members_.rbegin()->dimension();
}

bool OpenSimplexSet::is_open() const {
  SimplexSet rest;
  for (const auto& s : *host_) {
    if (!members_.count(s)) rest.insert(s);
  }
  return is_face_closed(rest);
}

SimplicialComplex OpenSimplexSet::closure() const { return SimplicialComplex::closure_of(members_); }

SimplicialComplex OpenSimplexSet::as_complex() const {
  if (!closed_) throw ContractError("open simplex set is not face-closed");
  return SimplicialComplex(members_);
}

OpenSimplexSet OpenSimplexSet::complement() const {
  SimplexSet rest;
  for (const auto& s : *host_) {
    if (!members_.count(s)) rest.insert(s);
  }
  return OpenSimplexSet(host_, std::move(rest));
}

bool operator==(const OpenSimplexSet& a, const OpenSimplexSet& b) {
  return a.members_ == b.members_ && (a.host_ == b.host_ || *a.host_ == *b.host_);
}

OpenSimplexSet complement_in(const SimplicialComplex& host, const SimplicialComplex& removed) {
  SimplexSet rest;
  for (const auto& s : host) {
    if (!removed.contains(s)) rest.insert(s);
  }
  return OpenSimplexSet(host, std::move(rest));
}

// ---------------------------------------------------------------------------
// SimplicialMap

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::map<Vertex, Vertex> vertex_map)
    : source_(std::make_shared<const SimplicialComplex>(std::move(source))),
      target_(std::make_shared<const SimplicialComplex>(std::move(target))) {
  for (Vertex v : source_->vertices()) {
    auto it = vertex_map.find(v);
    if (it == vertex_map.end()) {
      throw MalformedInput("vertex " + std::to_string(v) + " has no image");
    }
    if (!target_->contains_vertex(it->second)) {
      throw MalformedInput("image " + std::to_string(it->second) + " of vertex " +
                           std::to_string(v) + " is not a target vertex");
    }
    map_.emplace(v, it->second);
  }
  for (const auto& s : source_->maximal_simplices()) {
    if (!target_->contains(image(s))) {
      throw MalformedInput("image of " + s.to_string() + " is not a simplex of the target");
    }
  }
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : k.vertices()) m.emplace(v, v);
  return SimplicialMap(k, k, std::move(m));
}

SimplicialMap SimplicialMap::inclusion(const SimplicialComplex& sub, const SimplicialComplex& k) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : sub.vertices()) m.emplace(v, v);
  return SimplicialMap(sub, k, std::move(m));
}

Vertex SimplicialMap::operator()(Vertex v) const {
  auto it = map_.find(v);
  if (it == map_.end()) throw NotFound("vertex " + std::to_string(v) + " not in map source");
  return it->second;
}

Simplex SimplicialMap::image(const Simplex& s) const {
  std::vector<Vertex> img;
  img.reserve(s.size());
  for (Vertex v : s) img.push_back((*this)(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Simplex(std::move(img));
}

SimplexSet SimplicialMap::image(const SimplexSet& set) const {
  SimplexSet out;
  for (const auto& s : set) out.insert(image(s));
  return out;
}

SimplexSet SimplicialMap::preimage(const SimplexSet& set) const {
  SimplexSet out;
  for (const auto& s : *source_) {
    if (set.count(image(s))) out.insert(s);
  }
  return out;
}

bool SimplicialMap::injective_on_vertices() const {
  std::set<Vertex> seen;
  for (const auto& [v, w] : map_) {
    if (!seen.insert(w).second) return false;
  }
  return true;
}

SimplicialMap SimplicialMap::restricted_to(const SimplicialComplex& sub) const {
  if (!sub.is_subcomplex_of(*source_)) {
    throw StructuralError("restriction domain is not a subcomplex of the source");
  }
  std::map<Vertex, Vertex> m;
  for (Vertex v : sub.vertices()) m.emplace(v, map_.at(v));
  return SimplicialMap(sub, *target_, std::move(m));
}

SimplicialMap SimplicialMap::with_target(const SimplicialComplex& target) const {
  return SimplicialMap(*source_, target, map_);
}

bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
  return a.map_ == b.map_ && *a.source_ == *b.source_ && *a.target_ == *b.target_;
}

SimplicialMap compose(const SimplicialMap& first, const SimplicialMap& second) {
  if (!(first.target() == second.source())) {
    throw StructuralError("cannot compose: middle complexes differ");
  }
  std::map<Vertex, Vertex> m;
  for (const auto& [v, w] : first.vertex_map()) m.emplace(v, second(w));
  return SimplicialMap(first.source(), second.target(), std::move(m));
}

// ---------------------------------------------------------------------------
// Constructions

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal) {
  SimplexSet gens;
  for (const auto& seq : maximal) gens.insert(Simplex(seq));
  return SimplicialComplex::closure_of(gens);
}

SimplicialComplex skeleton(const SimplicialComplex& k, int i) {
  if (i < -1) throw ContractError("skeleton index must be >= -1");
  SimplexSet out;
  for (const auto& s : k) {
    if (s.dimension() > i) break;
    out.insert(s);
  }
  return SimplicialComplex(std::move(out));
}

OpenSimplexSet star(const OpenSimplexSet& s, const SimplicialComplex& k) {
  SimplexSet out;
  for (const auto& sigma : k) {
    if (s.contains(sigma)) {
      out.insert(sigma);
      continue;
    }
    for (const auto& f : sigma.faces()) {
      if (s.contains(f)) {
        out.insert(sigma);
        break;
      }
    }
  }
  return OpenSimplexSet(k, std::move(out));
}

SimplicialComplex link(const Simplex& s, const SimplicialComplex& k) {
  if (!k.contains(s)) throw NotFound("simplex " + s.to_string() + " not in complex");
  SimplexSet out;
  for (const auto& c : k.cofaces(s)) {
    if (auto rest = difference(c, s)) out.insert(*rest);
  }
  return SimplicialComplex(std::move(out));
}

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplexSet out = a.simplices();
  out.insert(b.begin(), b.end());
  return SimplicialComplex(std::move(out));
}

SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return SimplicialComplex(std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::map<Vertex, Vertex>& relabel) {
  SimplexSet out;
  for (const auto& s : k) {
    std::vector<Vertex> vs;
    for (Vertex v : s) vs.push_back(relabel.at(v));
    out.insert(Simplex(std::move(vs)));
  }
  return SimplicialComplex(std::move(out));
}

DisjointUnion disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  DisjointUnion u;
  Vertex next = 0;
  for (Vertex v : a.vertices()) {
    u.from_first.emplace(v, v);
    next = std::max(next, v + 1);
  }
  for (Vertex v : b.vertices()) u.from_second.emplace(v, next + v - (b.vertices().front()));
  u.complex = complex_union(a, relabel(b, u.from_second));
  return u;
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k) {
  std::map<Vertex, Vertex> parent;
  for (Vertex v : k.vertices()) parent[v] = v;
  std::function<Vertex(Vertex)> find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : k.simplices_of_dimension(1)) {
    Vertex a = find(e[0]), b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<Vertex, std::vector<Vertex>> groups;
  for (const auto& [v, p] : parent) groups[find(v)].push_back(v);
  std::vector<std::vector<Vertex>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

// ---------------------------------------------------------------------------
// Barycentric subdivision

std::vector<Simplex> BarycentricSubdivision::chain_of(const Simplex& s) const {
  std::vector<Simplex> chain;
  chain.reserve(s.size());
  for (Vertex v : s) chain.push_back(carrier.at(static_cast<std::size_t>(v)));
  std::sort(chain.begin(), chain.end());
  return chain;
}

Simplex BarycentricSubdivision::simplex_of(const std::vector<Simplex>& chain) const {
  std::vector<Vertex> vs;
  for (const auto& t : chain) vs.push_back(barycenter.at(t));
  return Simplex(std::move(vs));
}

const Simplex& BarycentricSubdivision::top_of(const Simplex& s) const {
  const Simplex* best = &carrier.at(static_cast<std::size_t>(s[0]));
  for (Vertex v : s) {
    const Simplex& c = carrier.at(static_cast<std::size_t>(v));
    if (c.size() > best->size()) best = &c;
  }
  return *best;
}

SimplicialComplex BarycentricSubdivision::subdivide(const SimplicialComplex& sub) const {
  SimplexSet out;
  for (const auto& s : complex) {
    bool inside = true;
    for (Vertex v : s) {
      if (!sub.contains(carrier[static_cast<std::size_t>(v)])) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(s);
  }
  return SimplicialComplex(std::move(out));
}

SimplexSet BarycentricSubdivision::subdivide_open(const SimplexSet& members) const {
  SimplexSet out;
  for (const auto& s : complex) {
    if (members.count(top_of(s))) out.insert(s);
  }
  return out;
}

BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k) {
  BarycentricSubdivision sd;
  sd.carrier.assign(k.begin(), k.end());
  for (std::size_t i = 0; i < sd.carrier.size(); ++i) {
    sd.barycenter.emplace(sd.carrier[i], static_cast<Vertex>(i));
  }
  // Maximal flags of a maximal simplex correspond to vertex orderings.
  SimplexSet tops;
  for (const auto& m : k.maximal_simplices()) {
    std::vector<Vertex> perm = m.vertices();
    do {
      std::vector<Vertex> flag;
      std::vector<Vertex> prefix;
      for (Vertex v : perm) {
        prefix.push_back(v);
        flag.push_back(sd.barycenter.at(Simplex(prefix)));
      }
      tops.insert(Simplex(std::move(flag)));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  sd.complex = SimplicialComplex::closure_of(tops);
  return sd;
}

// ---------------------------------------------------------------------------
// Products

ProductComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
  ProductComplex p;
  for (Vertex a : k.vertices()) {
    for (Vertex b : l.vertices()) {
      p.id.emplace(std::make_pair(a, b), static_cast<Vertex>(p.pairs.size()));
      p.pairs.emplace_back(a, b);
    }
  }
  SimplexSet tops;
  for (const auto& s : k.maximal_simplices()) {
    for (const auto& t : l.maximal_simplices()) {
      const std::size_t ps = s.size() - 1, qt = t.size() - 1;
      // Monotone lattice paths from (0,0) to (ps,qt): choose which of the
      // ps+qt steps advance the first factor.
      std::vector<int> steps(ps + qt, 0);
      std::fill(steps.begin() + static_cast<long>(qt), steps.end(), 1);
      do {
        std::size_t i = 0, j = 0;
        std::vector<Vertex> path{p.id.at({s[0], t[0]})};
        for (int step : steps) {
          if (step) ++i; else ++j;
          path.push_back(p.id.at({s[i], t[j]}));
        }
        tops.insert(Simplex(std::move(path)));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
  p.complex = SimplicialComplex::closure_of(tops);
  std::map<Vertex, Vertex> first, second;
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    first.emplace(static_cast<Vertex>(i), p.pairs[i].first);
    second.emplace(static_cast<Vertex>(i), p.pairs[i].second);
  }
  p.first_projection = SimplicialMap(p.complex, k, std::move(first));
  p.second_projection = SimplicialMap(p.complex, l, std::move(second));
  return p;
}

const std::pair<Simplex, Simplex>& CellProduct::top_cell(const Simplex& s) const {
  const auto* best = &cells.at(static_cast<std::size_t>(s[0]));
  for (Vertex v : s) {
    const auto& c = cells.at(static_cast<std::size_t>(v));
    if (c.first.size() + c.second.size() > best->first.size() + best->second.size()) best = &c;
  }
  return *best;
}

namespace {

// Maximal flags of face(sigma) as vertex-insertion orders.
std::vector<std::vector<Simplex>> flags_of(const Simplex& s) {
  std::vector<std::vector<Simplex>> out;
  std::vector<Vertex> perm = s.vertices();
  do {
    std::vector<Simplex> flag;
    std::vector<Vertex> prefix;
    for (Vertex v : perm) {
      prefix.push_back(v);
      flag.push_back(Simplex(prefix));
    }
    out.push_back(std::move(flag));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

CellProduct cell_product(const SimplicialComplex& k, const SimplicialComplex& l) {
  CellProduct p;
  for (const auto& s : k) {
    for (const auto& t : l) {
      p.id.emplace(std::make_pair(s, t), static_cast<Vertex>(p.cells.size()));
      p.cells.emplace_back(s, t);
    }
  }
  SimplexSet tops;
  for (const auto& s : k.maximal_simplices()) {
    const auto flags_s = flags_of(s);
    for (const auto& t : l.maximal_simplices()) {
      const auto flags_t = flags_of(t);
      const std::size_t ps = s.size() - 1, qt = t.size() - 1;
      for (const auto& fs : flags_s) {
        for (const auto& ft : flags_t) {
          std::vector<int> steps(ps + qt, 0);
          std::fill(steps.begin() + static_cast<long>(qt), steps.end(), 1);
          do {
            std::size_t i = 0, j = 0;
            std::vector<Vertex> chain{p.id.at({fs[0], ft[0]})};
            for (int step : steps) {
              if (step) ++i; else ++j;
              chain.push_back(p.id.at({fs[i], ft[j]}));
            }
            tops.insert(Simplex(std::move(chain)));
          } while (std::next_permutation(steps.begin(), steps.end()));
        }
      }
    }
  }
  p.complex = SimplicialComplex::closure_of(tops);
  return p;
}

JoinDecomposition join_decompose(const std::vector<Simplex>& chain, int r) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!chain[i - 1].is_proper_face_of(chain[i])) {
      throw MalformedInput("not a flag of proper faces at position " + std::to_string(i));
    }
  }
  JoinDecomposition out;
  std::size_t split = 0;
  while (split < chain.size() && chain[split].dimension() <= r) ++split;
  out.lambda.assign(chain.begin(), chain.begin() + static_cast<long>(split));
  out.mu.assign(chain.begin() + static_cast<long>(split), chain.end());
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism search

std::optional<std::map<Vertex, Vertex>> find_isomorphism(const SimplicialComplex& a,
                                                         const SimplicialComplex& b) {
  if (a.f_vector() != b.f_vector()) return std::nullopt;
  const auto va = a.vertices(), vb = b.vertices();
  // Vertex signature: number of cofaces in each dimension.
  auto signature = [](const SimplicialComplex& k, Vertex v) {
    std::vector<std::size_t> sig(static_cast<std::size_t>(k.dimension() + 1), 0);
    for (const auto& c : k.cofaces(Simplex{v})) ++sig[static_cast<std::size_t>(c.dimension())];
    return sig;
  };
  std::map<Vertex, std::vector<std::size_t>> sa, sb;
  for (Vertex v : va) sa[v] = signature(a, v);
  for (Vertex v : vb) sb[v] = signature(b, v);

  std::map<Vertex, Vertex> fwd;
  std::set<Vertex> used;
  const auto maximal_a = a.maximal_simplices();

  // A partial map is consistent if every simplex of `a` whose vertices are
  // all mapped has an image simplex in `b`, and symmetrically by counting.
  auto consistent = [&](Vertex just_mapped) {
    for (const auto& c : a.cofaces(Simplex{just_mapped})) {
      std::vector<Vertex> img;
      bool complete = true;
      for (Vertex v : c) {
        auto it = fwd.find(v);
        if (it == fwd.end()) { complete = false; break; }
        img.push_back(it->second);
      }
      if (complete && !b.contains(Simplex(img))) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == va.size()) return true;
    const Vertex v = va[i];
    for (Vertex w : vb) {
      if (used.count(w) || sa[v] != sb[w]) continue;
      fwd[v] = w;
      used.insert(w);
      if (consistent(v) && extend(i + 1)) return true;
      fwd.erase(v);
      used.erase(w);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  // Equal f-vectors plus an injective simplex map make it a bijection.
  return fwd;
}

// ---------------------------------------------------------------------------
// Orientation propagation

OrientationPropagation propagate_orientation(const SimplicialComplex& k, int d,
                                             const SimplexSet& blocked) {
  OrientationPropagation out;
  const auto tops = k.simplices_of_dimension(d);
  // facet -> list of (top index, induced sign of facet under +1 orientation)
  std::map<Simplex, std::vector<std::pair<std::size_t, int>>> incidence;
  for (std::size_t t = 0; t < tops.size(); ++t) {
    const auto facets = tops[t].facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      incidence[facets[i]].emplace_back(t, facet_sign(i));
    }
  }
  std::vector<int> sign(tops.size(), 0);
  std::vector<std::size_t> parent(tops.size(), 0);
  std::vector<std::size_t> depth(tops.size(), 0);

  auto path_to_root = [&](std::size_t t) {
    std::vector<std::size_t> path{t};
    while (parent[t] != t) {
      t = parent[t];
      path.push_back(t);
    }
    return path;
  };

  for (std::size_t root = 0; root < tops.size(); ++root) {
    if (sign[root] != 0) continue;
    ++out.components;
    sign[root] = 1;
    parent[root] = root;
    std::queue<std::size_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      const std::size_t t = queue.front();
      queue.pop();
      const auto facets = tops[t].facets();
      for (std::size_t i = 0; i < facets.size(); ++i) {
        if (blocked.count(facets[i])) continue;
        const auto& inc = incidence[facets[i]];
        if (inc.size() != 2) continue;
        const auto& [u, u_sign] = (inc[0].first == t) ? inc[1] : inc[0];
        const int required = -sign[t] * facet_sign(i) * u_sign;
        if (sign[u] == 0) {
          sign[u] = required;
          parent[u] = t;
          depth[u] = depth[t] + 1;
          queue.push(u);
        } else if (sign[u] != required && out.consistent) {
          out.consistent = false;
          // Close the cycle through the lowest common ancestor.
          auto pt = path_to_root(t), pu = path_to_root(u);
          std::set<std::size_t> on_pu(pu.begin(), pu.end());
          std::vector<Simplex> cycle;
          std::size_t lca = t;
          for (std::size_t x : pt) {
            if (on_pu.count(x)) { lca = x; break; }
          }
          for (std::size_t x : pt) {
            cycle.push_back(tops[x]);
            if (x == lca) break;
          }
          std::vector<Simplex> back;
          for (std::size_t x : pu) {
            if (x == lca) break;
            back.push_back(tops[x]);
          }
          cycle.insert(cycle.end(), back.rbegin(), back.rend());
          out.conflict_cycle = std::move(cycle);
        }
      }
    }
  }
  for (std::size_t t = 0; t < tops.size(); ++t) out.signs.emplace(tops[t], sign[t]);
  return out;
}

// ---------------------------------------------------------------------------
// Verdict

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

void Verdict::add(std::string name, Status status, std::vector<Simplex> witnesses,
                  std::string detail) {
  checks_.push_back(Check{std::move(name), status, std::move(witnesses), std::move(detail)});
}

void Verdict::append(const Verdict& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

Status Verdict::status() const {
  Status s = Status::Pass;
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return Status::Fail;
    if (c.status == Status::Unknown) s = Status::Unknown;
  }
  return s;
}

const Check* Verdict::first_failure() const {
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return &c;
  }
  return nullptr;
}

const Check* Verdict::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace circuitsmith
