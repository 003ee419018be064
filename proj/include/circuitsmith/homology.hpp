#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include "circuitsmith/circuits.hpp"
#include "circuitsmith/complex.hpp"
#include "circuitsmith/smith.hpp"

namespace circuitsmith {

using Integer = boost::multiprecision::mpz_int;
using IntegerMatrix = IntMatrix<Integer>;

/// Integer combination of canonically oriented simplices of one degree.
struct IntChain {
  int degree = 0;
  std::map<Simplex, Integer> coefficients;

  /// Adds c * s, dropping zero coefficients. Throws MalformedInput on a
  /// simplex of the wrong dimension.
  void add(const Simplex& s, const Integer& c);
  Integer coefficient(const Simplex& s) const;
  bool is_zero() const { return coefficients.empty(); }

  IntChain operator-() const;
  friend IntChain operator+(IntChain a, const IntChain& b);
  friend IntChain operator-(IntChain a, const IntChain& b) { return a + (-b); }
  friend bool operator==(const IntChain&, const IntChain&) = default;
};

IntChain boundary(const IntChain& z);

/// Chain with every simplex of `sub` removed (the image in relative chains).
IntChain modulo(const IntChain& z, const SimplicialComplex& sub);

/// Matrix of the boundary from relative n-chains of (k, sub) to relative
/// (n-1)-chains; rows and columns follow the canonical simplex order.
IntegerMatrix boundary_matrix(const SimplicialComplex& k, int n,
                              const SimplicialComplex& sub = {});

/// Canonical basis of relative n-chains of (k, sub).
std::vector<Simplex> chain_basis(const SimplicialComplex& k, int n,
                                 const SimplicialComplex& sub = {});

/// A class written in the chosen basis of H_n: torsion entries are reduced
/// modulo their orders.
struct HomologyCoordinates {
  std::vector<Integer> free;
  std::vector<Integer> torsion;
  bool is_zero() const;
  friend bool operator==(const HomologyCoordinates&, const HomologyCoordinates&) = default;
};

struct HomologyGroup {
  int degree = 0;
  int betti = 0;
  std::vector<Integer> torsion;
  std::vector<IntChain> free_generators;
  std::vector<IntChain> torsion_generators;

  std::vector<Simplex> basis;
  Eigen::Index boundary_rank = 0;    // rank of the n-th boundary
  IntegerMatrix cycle_coordinates;   // inverse of the right SNF factor of the boundary
  IntegerMatrix reduction;           // left SNF factor of the boundaries in cycle coordinates
  std::vector<Integer> factors;      // invariant factors of that matrix
};

struct HomologyResult {
  SimplicialComplex complex;
  SimplicialComplex subcomplex;
  std::vector<HomologyGroup> groups;  // degrees 0..dim

  const HomologyGroup& operator[](int n) const;
  std::vector<int> betti() const;

  bool is_cycle(const IntChain& z) const;
  /// Coordinates of the class of a relative cycle; simplices of the
  /// subcomplex are ignored. Throws ContractError if `z` is not a relative
  /// cycle and NotFound if it mentions simplices outside the complex.
  HomologyCoordinates coordinates(const IntChain& z) const;
};

/// H_*(k, sub; Z). Throws MalformedInput unless sub is a subcomplex of k.
HomologyResult homology(const SimplicialComplex& k, const SimplicialComplex& sub = {});

struct OrientationAssignment {
  std::map<Simplex, int> signs;
  bool orientable = true;
  std::vector<Simplex> witness_cycle;
  int components = 0;
};

/// Compatible orientations of the k-simplices, propagated across
/// (k-1)-faces outside the singular set.
OrientationAssignment orient_circuit(const RelativeCircuitData& q);

/// Signed sum of the k-simplices. Verifies that the boundary is zero for a
/// closed circuit and otherwise a +-1 chain on exactly the (k-1)-simplices
/// of dQ. Throws StageFailure("orientation") on a non-orientable input.
IntChain fundamental_class(const RelativeCircuitData& q, const OrientationAssignment& o);

/// Orientation of dQ read off the boundary of the fundamental class.
OrientationAssignment induced_boundary_orientation(const RelativeCircuitData& q,
                                                   const OrientationAssignment& o);

/// True iff `a` and `b` differ by a single sign on each orientation component.
bool same_up_to_component_signs(const SimplicialComplex& k, int d, const OrientationAssignment& a,
                                const OrientationAssignment& b);

/// Simplicial pushforward; degenerate images contribute zero.
IntChain pushforward(const SimplicialMap& a, const IntChain& z);

/// a_*[z] in H_k(X, A). Throws ContractError if `a` does not carry dQ into
/// A or lands outside X.
HomologyCoordinates evaluate(const RelativeCircuitData& q, const SimplicialMap& a, const IntChain& z,
                             const HomologyResult& target);

}  // namespace circuitsmith
