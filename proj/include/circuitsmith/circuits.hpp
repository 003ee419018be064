#pragma once

#include <map>
#include <utility>
#include <vector>

#include "circuitsmith/complex.hpp"
#include "circuitsmith/recognition.hpp"
#include "circuitsmith/verdict.hpp"

namespace circuitsmith {

/// A triangulated relative k-circuit (Q, dQ) with a candidate singular set.
struct RelativeCircuitData {
  SimplicialComplex complex;   // L, triangulates Q
  SimplicialComplex boundary;  // K, triangulates dQ
  int k = 0;
  SimplicialComplex singular;  // candidate S(Q)

  bool closed() const { return boundary.empty(); }
};

/// Closure of the simplices that obstruct (L, K) from being a k-manifold
/// with boundary K: non-manifold simplices of L, boundary points of L
/// outside K, interior points of L inside K, and non-manifold simplices of
/// K itself.
SimplicialComplex default_singular_set(const SimplicialComplex& complex,
                                       const SimplicialComplex& boundary, int k);

/// Same data with `singular` replaced by default_singular_set.
RelativeCircuitData with_default_singular_set(RelativeCircuitData data);

/// Checks, in order: "closure" (purity, Q = closure(Q \ S)), "manifold" and
/// "boundary" (Q \ S is a PL k-manifold with boundary dQ \ S), then the
/// boundary recursion under "boundary_circuit.". Throws StructuralError
/// when the top-level dimensions or subcomplex relations are wrong.
Verdict verify_circuit(const RelativeCircuitData& data);

/// (K, {}, k-1, S n K). Throws ContractError if `data` does not verify.
RelativeCircuitData boundary_circuit(const RelativeCircuitData& data);

/// One end of a bordism: a circuit and its vertex embedding into N.
struct BordismEnd {
  RelativeCircuitData circuit;
  std::map<Vertex, Vertex> embedding;
};

/// A relative (k+1)-circuit R = |N| with dR = |M| containing Q = |L|,
/// dQ = |K|.
struct BordismData {
  SimplicialComplex complex;           // N
  SimplicialComplex boundary;          // M
  SimplicialComplex circuit;           // L
  SimplicialComplex circuit_boundary;  // K
  int k = 0;                           // dimension of Q
  SimplicialComplex singular;          // S(R)
  std::vector<BordismEnd> ends;

  RelativeCircuitData as_circuit() const { return {complex, boundary, k + 1, singular}; }
  RelativeCircuitData circuit_data() const {
    return {circuit, circuit_boundary, k, complex_intersection(singular, circuit)};
  }
  /// Closure of dR \ (Q \ dQ): the part of the boundary outside Q.
  SimplicialComplex side_boundary() const;
};

enum class BordismMode {
  /// dR = Q exactly (side boundary empty).
  Absolute,
  /// dR may contain a side boundary outside Q.
  Relative,
};

/// R is a relative (k+1)-circuit, Q inside dR, S(R) n Q = S(Q) and
/// S(R) n dQ = S(dQ). Throws StructuralError if `q` is not the circuit
/// designated inside `r`.
Verdict verify_nullbordism(const BordismData& r, const RelativeCircuitData& q,
                           BordismMode mode = BordismMode::Absolute);
Verdict verify_nullbordism(const BordismData& r, BordismMode mode = BordismMode::Absolute);

enum class SigmaCase { A, B, C };
const char* to_string(SigmaCase c);

struct SigmaSet {
  SigmaCase kase = SigmaCase::B;
  SimplicialComplex sigma;
  int ambient_dimension = 0;
  /// Largest dimension allowed for a codimension-two subpolyhedron.
  int dimension_bound = 0;
  bool face_closed = false;
  bool codim_ok = false;
};

/// Case A: `p` is an absolute circuit of dimension p.k; Sigma = (p.k-2)-skeleton.
SigmaSet sigma_absolute(const RelativeCircuitData& p);
/// Case B: Sigma = L^{k-2} minus the (k-2)-simplices of K.
SigmaSet sigma_relative(const RelativeCircuitData& q);
/// Case C: Sigma = N^{k-1} minus M(k-1) and minus St(K(k-2), N).
SigmaSet sigma_bordism(const BordismData& r);

/// The complements of Sigma are PL manifolds with the expected boundaries,
/// plus the skeleton-complement inclusions. Unknown is reported for links
/// of dimension >= 3.
Verdict verify_prop20(const SigmaSet& sigma, const RelativeCircuitData& data);
Verdict verify_prop20(const SigmaSet& sigma, const BordismData& data);

/// Identification of E in dA with F in dB.
struct GlueSpec {
  SimplicialComplex first_part;   // E
  SimplicialComplex second_part;  // F
  std::map<Vertex, Vertex> iso;   // vertices of E -> vertices of F
  bool reverse_second = false;
};

struct GlueResult {
  RelativeCircuitData circuit;
  /// Inputs as actually glued (after any barycentric refinement).
  RelativeCircuitData first_input;
  RelativeCircuitData second_input;
  std::map<Vertex, Vertex> from_first;
  std::map<Vertex, Vertex> from_second;
  int subdivisions = 0;
  bool second_reversed = false;
  Verdict verdict;
};

/// A +_{E=F} B. Inputs are barycentrically refined until the vertex
/// quotient is a simplicial complex. Throws MalformedInput if `spec.iso` is
/// not a simplicial isomorphism E -> F.
GlueResult glue(const RelativeCircuitData& a, const RelativeCircuitData& b, const GlueSpec& spec);

/// Identifies two vertex-disjoint parts E, F of dA with each other.
GlueResult glue_self(const RelativeCircuitData& a, const GlueSpec& spec);

/// Images of the two glued inputs inside the result.
std::pair<SimplicialComplex, SimplicialComplex> cut(const GlueResult& glued);

/// Q x [0,1] as a bordism from Q x 0 to Q x 1 (both ends form L).
BordismData cylinder(const RelativeCircuitData& q);

/// Q x [0,1] with Q at the bottom and its barycentric subdivision on top.
BordismData subdivision_cylinder(const RelativeCircuitData& q);

/// Subdivided copy of a circuit (complex, boundary and singular set).
RelativeCircuitData subdivide(const RelativeCircuitData& q, const BarycentricSubdivision& sd);

/// The map K' -> K sending the barycenter of sigma to the last vertex of
/// sigma; a simplicial approximation of the identity.
SimplicialMap last_vertex_map(const BarycentricSubdivision& sd, const SimplicialComplex& k);

}  // namespace circuitsmith
