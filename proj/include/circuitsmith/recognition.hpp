#pragma once

#include <map>
#include <optional>
#include <vector>

#include "circuitsmith/complex.hpp"
#include "circuitsmith/verdict.hpp"

namespace circuitsmith {

/// Local type of the points of an open simplex.
enum class PointClass { InteriorManifold, BoundaryManifold, NonManifold, Unknown };

const char* to_string(PointClass c);

/// What a link looks like, as far as it can be decided.
enum class LinkShape { Sphere, Ball, Neither, Unknown };

/// Decides whether `lk` is a PL d-sphere or d-ball. Exact for d <= 2; for
/// d >= 3 returns Neither when a necessary condition fails and Unknown
/// otherwise.
LinkShape classify_link(const SimplicialComplex& lk, int d);

/// Manifold type of the points in the open simplex `s` of `k`, where `k` is
/// treated as k_dim-dimensional. Throws NotFound if `s` is not in `k`.
PointClass classify_point(const Simplex& s, const SimplicialComplex& k, int k_dim);

struct ManifoldReport {
  std::map<Simplex, PointClass> classification;
  SimplicialComplex non_manifold_subcomplex;
  /// False iff some simplex was classified Unknown.
  bool exact = true;
};

ManifoldReport non_manifold_set(const SimplicialComplex& k);

struct PseudomanifoldReport {
  Verdict verdict;  // checks: "pure", "thin", "strongly_connected"
  int components = 0;
  bool ok(bool require_strong_connectivity = false) const;
};

/// Purity, at most two k-simplices on every (k-1)-simplex, and strong
/// connectivity through (k-1)-faces. Strong connectivity is reported as a
/// check but only counts towards ok() when requested.
PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& k, int k_dim);

enum class Tri { Yes, No, Unknown };
const char* to_string(Tri t);

struct RegionReport {
  Tri verdict = Tri::Yes;
  /// Simplices classified NonManifold (for No) or Unknown.
  std::vector<Simplex> witnesses;
  /// Open simplices of the region that are manifold boundary points.
  SimplexSet boundary;
  SimplexSet interior;
};

/// Classifies every open simplex of `u` inside the closure of its star in
/// the host, with manifold dimension `k_dim`.
RegionReport region_is_pl_manifold(const OpenSimplexSet& u, int k_dim);

}  // namespace circuitsmith
