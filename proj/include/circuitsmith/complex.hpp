#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "circuitsmith/errors.hpp"

namespace circuitsmith {

using Vertex = int;

/// A nonempty simplex given by its strictly increasing vertex list.
///
/// Simplices order by dimension first and lexicographically within a
/// dimension; every container in the library relies on this canonical order
/// for reproducible output.
class Simplex {
 public:
  /// Sorts the vertices. Throws MalformedInput on an empty list or a
  /// repeated vertex.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices)
      : Simplex(std::vector<Vertex>(vertices)) {}

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  bool is_proper_face_of(const Simplex& other) const {
    return size() < other.size() && is_face_of(other);
  }
  bool disjoint_from(const Simplex& other) const;

  /// Codimension-one faces; entry i omits vertex i (empty for a vertex).
  std::vector<Simplex> facets() const;
  /// Every nonempty face, the simplex itself included.
  std::vector<Simplex> faces() const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

 private:
  struct Sorted {};
  Simplex(Sorted, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  friend Simplex unite(const Simplex&, const Simplex&);
  friend std::optional<Simplex> difference(const Simplex&, const Simplex&);

  std::vector<Vertex> vertices_;
};

/// Vertex union of two simplices.
Simplex unite(const Simplex& a, const Simplex& b);
/// Vertices of `a` not in `b`; nullopt when nothing remains.
std::optional<Simplex> difference(const Simplex& a, const Simplex& b);

using SimplexSet = std::set<Simplex>;

/// Finite face-closed set of simplices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws MalformedInput unless `simplices` is face-closed.
  explicit SimplicialComplex(SimplexSet simplices);

  /// Face closure of an arbitrary set of simplices.
  static SimplicialComplex closure_of(const SimplexSet& generators);
  static SimplicialComplex closure_of(const std::vector<Simplex>& generators);

  bool contains(const Simplex& s) const { return simplices_.count(s) != 0; }
  bool contains_vertex(Vertex v) const { return contains(Simplex{v}); }
  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }
  /// Largest simplex dimension, -1 for the empty complex.
  int dimension() const;

  const SimplexSet& simplices() const& { return simplices_; }
  SimplexSet simplices() && { return std::move(simplices_); }
  auto begin() const { return simplices_.begin(); }
  auto end() const { return simplices_.end(); }

  std::vector<Simplex> simplices_of_dimension(int d) const;
  std::vector<Vertex> vertices() const;
  std::vector<Simplex> maximal_simplices() const;
  /// Number of simplices in each dimension 0..dim.
  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  /// Simplices of this complex that contain `s` (including `s`).
  std::vector<Simplex> cofaces(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplexSet simplices_;
};

bool is_face_closed(const SimplexSet& simplices);

/// A subset of a complex's simplices read as a union of open simplices.
class OpenSimplexSet {
 public:
  OpenSimplexSet() : host_(std::make_shared<const SimplicialComplex>()) {}
  /// Throws MalformedInput if some member is not in `host`.
  OpenSimplexSet(std::shared_ptr<const SimplicialComplex> host, SimplexSet members);
  OpenSimplexSet(const SimplicialComplex& host, SimplexSet members)
      : OpenSimplexSet(std::make_shared<const SimplicialComplex>(host),
                       std::move(members)) {}

  const SimplicialComplex& host() const { return *host_; }
  const std::shared_ptr<const SimplicialComplex>& shared_host() const { return host_; }
  const SimplexSet& members() const& { return members_; }
  SimplexSet members() && { return std::move(members_); }
  bool contains(const Simplex& s) const { return members_.count(s) != 0; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  int dimension() const;
  /// True iff the members are face-closed (then they form a subcomplex).
  bool is_closed() const { return closed_; }
  /// Members whose complement in the host is face-closed.
  bool is_open() const;

  SimplicialComplex closure() const;
  /// The members as a subcomplex; throws ContractError unless closed.
  SimplicialComplex as_complex() const;
  OpenSimplexSet complement() const;

  OpenSimplexSet with_members(SimplexSet members) const {
    return OpenSimplexSet(host_, std::move(members));
  }

  /// Member-wise equality; hosts must be equal complexes.
  friend bool operator==(const OpenSimplexSet& a, const OpenSimplexSet& b);

 private:
  std::shared_ptr<const SimplicialComplex> host_;
  SimplexSet members_;
  bool closed_ = true;
};

/// Simplices of `host` not in `removed`, as an open set when `removed` is a
/// subcomplex.
OpenSimplexSet complement_in(const SimplicialComplex& host, const SimplicialComplex& removed);

/// A vertex map between complexes that carries simplices to simplices.
class SimplicialMap {
 public:
  SimplicialMap() = default;
  /// Throws MalformedInput if a source vertex is unmapped, lands outside the
  /// target, or some simplex image is not a simplex of the target.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                std::map<Vertex, Vertex> vertex_map);

  static SimplicialMap identity(const SimplicialComplex& k);
  /// Inclusion of a subcomplex.
  static SimplicialMap inclusion(const SimplicialComplex& sub, const SimplicialComplex& k);

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const std::map<Vertex, Vertex>& vertex_map() const { return map_; }
  Vertex operator()(Vertex v) const;

  /// Image vertex set of `s` (duplicates merged).
  Simplex image(const Simplex& s) const;
  bool is_degenerate_on(const Simplex& s) const { return image(s).size() != s.size(); }
  SimplexSet image(const SimplexSet& set) const;
  /// Simplices of the source whose image lies in `set`.
  SimplexSet preimage(const SimplexSet& set) const;
  bool injective_on_vertices() const;

  /// Restriction to a subcomplex of the source.
  SimplicialMap restricted_to(const SimplicialComplex& sub) const;
  /// Same vertex map with a different (containing) target.
  SimplicialMap with_target(const SimplicialComplex& target) const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b);

 private:
  std::shared_ptr<const SimplicialComplex> source_ = std::make_shared<const SimplicialComplex>();
  std::shared_ptr<const SimplicialComplex> target_ = std::make_shared<const SimplicialComplex>();
  std::map<Vertex, Vertex> map_;
};

/// `second` after `first`.
SimplicialMap compose(const SimplicialMap& first, const SimplicialMap& second);

// ---------------------------------------------------------------------------
// Constructions

/// Face closure of the given vertex sequences. Throws MalformedInput on an
/// empty sequence or a repeated vertex.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& maximal);

SimplicialComplex skeleton(const SimplicialComplex& k, int i);

/// All simplices of `k` having some face in `s`.
OpenSimplexSet star(const OpenSimplexSet& s, const SimplicialComplex& k);

/// {t in k : t and s disjoint, t u s in k}. Throws NotFound if s is not in k.
SimplicialComplex link(const Simplex& s, const SimplicialComplex& k);

SimplicialComplex complex_union(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex complex_intersection(const SimplicialComplex& a, const SimplicialComplex& b);

/// Copy of `k` with every vertex v replaced by relabel(v).
SimplicialComplex relabel(const SimplicialComplex& k, const std::map<Vertex, Vertex>& relabel);

/// a + b with b's vertices shifted past a's largest vertex.
struct DisjointUnion {
  SimplicialComplex complex;
  std::map<Vertex, Vertex> from_first;
  std::map<Vertex, Vertex> from_second;
};
DisjointUnion disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Connected components as vertex sets, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k);

struct BarycentricSubdivision {
  SimplicialComplex complex;
  /// New vertex id -> the original simplex it is the barycenter of.
  std::vector<Simplex> carrier;
  std::map<Simplex, Vertex> barycenter;

  /// The flag tau_1 < ... < tau_s of original simplices spanned by `s`.
  std::vector<Simplex> chain_of(const Simplex& s) const;
  Simplex simplex_of(const std::vector<Simplex>& chain) const;
  /// Largest simplex of the chain; the open simplex `s` lies inside it.
  const Simplex& top_of(const Simplex& s) const;
  /// Subdivided copy of a subcomplex of the original.
  SimplicialComplex subdivide(const SimplicialComplex& sub) const;
  /// Open simplices of the subdivision lying in the open set `members`.
  SimplexSet subdivide_open(const SimplexSet& members) const;
};

/// Vertices of K' are the barycenters of K's simplices, indexed by the
/// canonical simplex order.
BarycentricSubdivision barycentric_subdivision(const SimplicialComplex& k);

/// Staircase triangulation of |K| x |L| using the vertex order of each factor.
struct ProductComplex {
  SimplicialComplex complex;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // product vertex id -> (k, l)
  std::map<std::pair<Vertex, Vertex>, Vertex> id;
  SimplicialMap first_projection;
  SimplicialMap second_projection;
};
ProductComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l);

/// Order complex of face(K) x face(L): triangulates |K| x |L| so that every
/// pair of simplicial maps induces a simplicial product map.
struct CellProduct {
  SimplicialComplex complex;
  std::vector<std::pair<Simplex, Simplex>> cells;  // vertex id -> (sigma, tau)
  std::map<std::pair<Simplex, Simplex>, Vertex> id;

  /// Largest cell of the chain spanned by `s`; the open simplex `s` lies in
  /// the open cell sigma x tau.
  const std::pair<Simplex, Simplex>& top_cell(const Simplex& s) const;
};
CellProduct cell_product(const SimplicialComplex& k, const SimplicialComplex& l);

/// Splits a flag tau_1 < ... < tau_s at the last entry of dimension <= r.
struct JoinDecomposition {
  std::vector<Simplex> lambda;
  std::vector<Simplex> mu;
};
/// Throws MalformedInput unless `chain` is strictly increasing under the
/// proper-face relation.
JoinDecomposition join_decompose(const std::vector<Simplex>& chain, int r);

/// Vertex bijection realizing a simplicial isomorphism a -> b, if one exists.
/// Backtracking search; intended for desk-scale complexes.
std::optional<std::map<Vertex, Vertex>> find_isomorphism(const SimplicialComplex& a,
                                                         const SimplicialComplex& b);

/// Result of propagating orientations of d-simplices across shared
/// (d-1)-faces.
struct OrientationPropagation {
  std::map<Simplex, int> signs;
  bool consistent = true;
  /// On conflict: a closed path of d-simplices along which the propagated
  /// sign flips an odd number of times.
  std::vector<Simplex> conflict_cycle;
  int components = 0;
};
/// Orients the d-simplices of `k` component by component: the smallest
/// d-simplex of each component gets +1, and neighbours across a (d-1)-face
/// shared by exactly two d-simplices (and not in `blocked`) must induce
/// opposite orientations on it.
OrientationPropagation propagate_orientation(const SimplicialComplex& k, int d,
                                             const SimplexSet& blocked = {});

/// (-1)^i, the sign of the i-th facet in the simplicial boundary.
inline int facet_sign(std::size_t i) { return (i % 2 == 0) ? 1 : -1; }

}  // namespace circuitsmith
