#pragma once

#include <numeric>
#include <vector>

#include "circuitsmith/circuits.hpp"
#include "circuitsmith/complex.hpp"
#include "circuitsmith/limit.hpp"

namespace fixtures {

using namespace circuitsmith;

inline std::vector<Vertex> iota(int n, int from = 0) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), from);
  return v;
}

/// The n-simplex on 0..n.
inline SimplicialComplex ball(int n) { return build_complex({iota(n + 1)}); }

/// Boundary of the (k+1)-simplex: a k-sphere on 0..k+1.
inline SimplicialComplex sphere(int k) { return skeleton(ball(k + 1), k); }

inline RelativeCircuitData closed(SimplicialComplex k, int dim, SimplicialComplex s = {}) {
  return {std::move(k), {}, dim, std::move(s)};
}

/// (Delta^k, dDelta^k).
inline RelativeCircuitData disk(int k = 2) { return {ball(k), sphere(k - 1), k, {}}; }

/// Two tetrahedron boundaries sharing vertex 0.
inline SimplicialComplex wedge() {
  return complex_union(sphere(2), relabel(sphere(2), {{0, 0}, {1, 4}, {2, 5}, {3, 6}}));
}

inline RelativeCircuitData wedge_circuit() { return closed(wedge(), 2, build_complex({{0}})); }

/// Two triangles meeting only at vertex 0, with all edges as boundary.
inline RelativeCircuitData two_triangles() {
  const auto l = build_complex({{0, 1, 2}, {0, 3, 4}});
  return {l, skeleton(l, 1), 2, build_complex({{0}})};
}

/// Six-vertex projective plane.
inline SimplicialComplex rp2() {
  return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                        {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/// Hexagon 0..5.
inline SimplicialComplex hexagon() {
  return build_complex({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

/// Hexagon wound twice around dDelta^2.
inline SimplicialMap double_wrap() {
  std::map<Vertex, Vertex> m;
  for (Vertex v = 0; v < 6; ++v) m[v] = v % 3;
  return SimplicialMap(hexagon(), sphere(1), m);
}

/// (0,1) as the path 0-1-2-3-4 with both ends punctured.
inline PuncturedComplex open_interval() {
  return PuncturedComplex(build_complex({{0, 1}, {1, 2}, {2, 3}, {3, 4}}), build_complex({{0}, {4}}));
}

/// Square circle 10-11-12-13.
inline SimplicialComplex square_circle() {
  return build_complex({{10, 11}, {11, 12}, {12, 13}, {10, 13}});
}

inline CompactifiedMap interval_identity() {
  return CompactifiedMap(open_interval(), open_interval(), {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}});
}

/// Once around the square circle, both ends at 10.
inline CompactifiedMap circle_wrap() {
  return CompactifiedMap(open_interval(), PuncturedComplex(square_circle(), {}),
                         {{0, 10}, {1, 11}, {2, 12}, {3, 13}, {4, 10}});
}

}  // namespace fixtures
