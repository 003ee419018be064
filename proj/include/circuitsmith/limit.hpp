#pragma once

#include <string>
#include <vector>

#include "circuitsmith/complex.hpp"

namespace circuitsmith {

/// The open space X = |W| \ |S| with S a subcomplex and X dense in |W|.
class PuncturedComplex {
 public:
  PuncturedComplex() = default;
  /// Throws MalformedInput unless S is a subcomplex of W and no maximal
  /// simplex of W lies in S.
  PuncturedComplex(SimplicialComplex w, SimplicialComplex s);

  const SimplicialComplex& compactification() const { return w_; }
  const SimplicialComplex& punctures() const { return s_; }
  /// The open simplices that make up X.
  OpenSimplexSet interior() const { return complement_in(w_, s_); }
  bool is_compact() const { return s_.empty(); }
  /// dim X = dim W by density.
  int dimension() const { return w_.dimension(); }

  friend bool operator==(const PuncturedComplex&, const PuncturedComplex&) = default;

 private:
  SimplicialComplex w_;
  SimplicialComplex s_;
};

/// f : X -> Y presented by a simplicial extension g : W -> W_Y.
class CompactifiedMap {
 public:
  CompactifiedMap() = default;
  /// Throws MalformedInput unless g is a map W -> W_Y carrying every open
  /// simplex of X into Y.
  CompactifiedMap(PuncturedComplex domain, PuncturedComplex target, std::map<Vertex, Vertex> vertex_map);

  const PuncturedComplex& domain() const { return domain_; }
  const PuncturedComplex& target() const { return target_; }
  const SimplicialMap& extension() const { return g_; }

 private:
  PuncturedComplex domain_;
  PuncturedComplex target_;
  SimplicialMap g_;
};

struct LimitSetResult {
  OpenSimplexSet carrier;   // open simplices of W_Y
  int limit_dimension = -1;
};

/// L(f) = g(W \ X): the images g(sigma), sigma in S, that are not in S_Y.
LimitSetResult limit_set(const CompactifiedMap& f);
bool is_proper(const CompactifiedMap& f);

/// One law instance and whether it held.
struct LawCheck {
  std::string law;
  bool holds = true;
  std::string detail;
};

bool all_hold(const std::vector<LawCheck>& laws);

/// Properness against preimages (b), the compactness statement (a) on the
/// largest compact subcomplex avoiding L(f), and ld(f) <= dim S.
std::vector<LawCheck> basic_laws(const CompactifiedMap& f);

/// Open simplices of X mapped onto all of Y (as open simplices of W_Y).
bool is_surjective(const CompactifiedMap& f);

struct ComposeResult {
  CompactifiedMap map;
  std::vector<LawCheck> laws;
};

/// h after f. Throws StructuralError unless f.target() == h.domain().
/// Checks the sandwich g(L f) <= L(gf) <= g(L f) u L(g), equality for
/// proper h, the surjective cases, and both dimension bounds.
ComposeResult compose(const CompactifiedMap& f, const CompactifiedMap& h);

struct ProductResult {
  CompactifiedMap map;
  CellProduct domain_cells;
  CellProduct target_cells;
  std::vector<LawCheck> laws;
};

/// f x f' on the cell products of the compactifications.
ProductResult product(const CompactifiedMap& f, const CompactifiedMap& f2);

struct RestrictResult {
  CompactifiedMap map;
  std::vector<LawCheck> laws;
};

/// f restricted to the closed set X1 = |W1| n X. Throws MalformedInput if
/// W1 is not a subcomplex of W.
RestrictResult restrict_closed(const CompactifiedMap& f, const SimplicialComplex& w1);

/// L(f) = L(f|X1) u L(f|X2) and the matching dimension identity, for
/// subcomplexes covering W.
std::vector<LawCheck> union_laws(const CompactifiedMap& f, const SimplicialComplex& w1,
                                 const SimplicialComplex& w2);

struct PreimageResult {
  CompactifiedMap map;
  LimitSetResult limit;
  std::vector<LawCheck> laws;
};

/// f restricted to f^-1(A) for the closed set A = |a| n Y.
PreimageResult preimage_restrict(const CompactifiedMap& f, const SimplicialComplex& a);

struct InfinityComparison {
  bool equal = false;
  std::vector<LawCheck> laws;
};

/// Extensions agree on every vertex of S. When they do, L(f) = L(h) is
/// checked. Throws StructuralError on different domains or targets.
InfinityComparison equal_at_infinity(const CompactifiedMap& f, const CompactifiedMap& h);

struct ProjectionResult {
  CompactifiedMap map;
  BarycentricSubdivision target_subdivision;
  std::vector<LawCheck> laws;
};

/// f o pr : X x |k| -> Y for a compact k, realized cellwise on the cell
/// product with values in the subdivided target.
ProjectionResult precompose_projection(const CompactifiedMap& f, const SimplicialComplex& k);

}  // namespace circuitsmith
