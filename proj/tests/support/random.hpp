#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "circuitsmith/complex.hpp"
#include "circuitsmith/limit.hpp"

namespace randomized {

using namespace circuitsmith;
using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// `count` random simplices of dimension <= max_dim on vertices 0..n-1.
inline std::vector<std::vector<int>> random_maximal(Rng& rng, int n, int max_dim, int count) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  for (int c = 0; c < count; ++c) {
    std::shuffle(all.begin(), all.end(), rng);
    const int d = uniform(rng, 0, std::min(max_dim, n - 1));
    std::vector<int> s(all.begin(), all.begin() + d + 1);
    std::sort(s.begin(), s.end());
    out.push_back(s);
  }
  return out;
}

/// Random complex with at most `limit` simplices.
inline std::vector<std::vector<int>> random_complex(Rng& rng, std::size_t limit, int max_dim = 3,
                                                    int max_count = 14, int max_vertices = 12) {
  while (true) {
    const int n = uniform(rng, 4, max_vertices);
    auto gens = random_maximal(rng, n, max_dim, uniform(rng, 2, max_count));
    if (build_complex(gens).size() <= limit) return gens;
  }
}

inline Simplex image_of(const std::map<Vertex, Vertex>& g, const Simplex& s) {
  std::vector<Vertex> img;
  for (Vertex v : s) img.push_back(g.at(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return Simplex(std::move(img));
}

inline SimplicialComplex random_subcomplex(Rng& rng, const SimplicialComplex& k, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Simplex> gens;
  for (const auto& s : k) {
    if (keep(rng)) gens.push_back(s);
  }
  return SimplicialComplex::closure_of(gens);
}

/// Face closure of randomly chosen non-maximal simplices of `w`, all of
/// whose faces satisfy `allowed`.
template <class Pred>
SimplicialComplex random_punctures(Rng& rng, const SimplicialComplex& w, double p, Pred allowed) {
  const auto maximal = w.maximal_simplices();
  const SimplexSet top(maximal.begin(), maximal.end());
  std::bernoulli_distribution pick(p);
  std::vector<Simplex> gens;
  for (const auto& s : w) {
    if (top.count(s) || !pick(rng)) continue;
    const auto faces = s.faces();
    if (std::all_of(faces.begin(), faces.end(), allowed)) gens.push_back(s);
  }
  return SimplicialComplex::closure_of(gens);
}

inline PuncturedComplex random_space(Rng& rng, int max_dim, int count) {
  const int n = uniform(rng, 4, 8);
  const auto w = build_complex(random_maximal(rng, n, max_dim, count));
  return PuncturedComplex(w, random_punctures(rng, w, 0.3, [](const Simplex&) { return true; }));
}

/// Random map into `target` whose punctures contain the preimage of the
/// target's punctures and possibly more.
inline CompactifiedMap random_map_into(Rng& rng, const PuncturedComplex& target, int max_dim, int count) {
  const auto& wy = target.compactification();
  const auto tv = wy.vertices();
  const int n = uniform(rng, 4, 9);
  std::map<Vertex, Vertex> g;
  for (int v = 0; v < n; ++v) g[v] = tv[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(tv.size()) - 1))];

  std::vector<Simplex> gens;
  for (const auto& s : random_maximal(rng, n, max_dim, count)) {
    if (wy.contains(image_of(g, Simplex(s)))) gens.push_back(Simplex(s));
  }
  for (int v = 0; v < n; ++v) gens.push_back(Simplex{v});
  auto w = SimplicialComplex::closure_of(gens);

  const auto& sy = target.punctures();
  auto mapped_to_infinity = [&](const Simplex& s) { return sy.contains(image_of(g, s)); };

  SimplicialComplex s;
  while (true) {
    std::vector<Simplex> forced;
    for (const auto& x : w) {
      if (mapped_to_infinity(x)) forced.push_back(x);
    }
    s = complex_union(SimplicialComplex::closure_of(forced),
                      random_punctures(rng, w, 0.15, [](const Simplex&) { return true; }));
    // Density: drop maximal simplices lying at infinity and retry.
    std::vector<Simplex> keep;
    bool dropped = false;
    for (const auto& m : w.maximal_simplices()) {
      if (s.contains(m)) dropped = true;
      else keep.push_back(m);
    }
    if (!dropped) break;
    w = SimplicialComplex::closure_of(keep);
    std::erase_if(g, [&](const auto& kv) { return !w.contains_vertex(kv.first); });
  }
  if (w.empty()) return random_map_into(rng, target, max_dim, count);
  s = complex_intersection(s, w);
  return CompactifiedMap(PuncturedComplex(w, s), target, g);
}

/// Random map out of `domain` into a fresh space, with punctures chosen
/// among simplices not hit by finite points.
inline CompactifiedMap random_map_from(Rng& rng, const PuncturedComplex& domain, int max_dim, int count) {
  const auto& w = domain.compactification();
  const int m = uniform(rng, 3, 7);
  std::map<Vertex, Vertex> g;
  for (Vertex v : w.vertices()) g[v] = 100 + uniform(rng, 0, m - 1);

  std::vector<Simplex> gens;
  for (const auto& s : w) gens.push_back(image_of(g, s));
  for (auto s : random_maximal(rng, m, max_dim, count)) {
    for (auto& v : s) v += 100;
    gens.emplace_back(s);
  }
  const auto wz = SimplicialComplex::closure_of(gens);

  SimplexSet finite_images;
  for (const auto& s : domain.interior().members()) finite_images.insert(image_of(g, s));
  const auto sz = random_punctures(rng, wz, 0.4, [&](const Simplex& f) { return !finite_images.count(f); });
  return CompactifiedMap(domain, PuncturedComplex(wz, sz), g);
}

/// f together with the identity of its target on a disjoint copy: a
/// surjective map with the same limit set.
inline CompactifiedMap with_identity_sheet(const CompactifiedMap& f) {
  const auto& wy = f.target().compactification();
  const auto u = disjoint_union(f.domain().compactification(), wy);
  std::map<Vertex, Vertex> g;
  for (const auto& [v, x] : u.from_first) g[x] = f.extension()(v);
  for (const auto& [v, x] : u.from_second) g[x] = v;
  const auto s = complex_union(f.domain().punctures(), relabel(f.target().punctures(), u.from_second));
  return CompactifiedMap(PuncturedComplex(u.complex, s), f.target(), g);
}

inline CompactifiedMap identity_of(const PuncturedComplex& x) {
  std::map<Vertex, Vertex> g;
  for (Vertex v : x.compactification().vertices()) g[v] = v;
  return CompactifiedMap(x, x, g);
}

}  // namespace randomized
