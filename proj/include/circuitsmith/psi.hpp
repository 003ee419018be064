#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "circuitsmith/circuits.hpp"
#include "circuitsmith/homology.hpp"
#include "circuitsmith/limit.hpp"

namespace circuitsmith {

/// The pair (X, A) a circuit is mapped into.
struct TargetPair {
  SimplicialComplex space;
  SimplicialComplex relative;
};

/// Union of the dual cells D(tau), dim tau = r, inside K'.
struct DualComplex {
  BarycentricSubdivision subdivision;
  SimplicialComplex complex;
  int r = 0;
  int dimension_bound = 0;  // dim K - r - 1
  bool within_bound = false;
  /// Every simplex of K' splits as lambda * mu with lambda in (K^r)' and mu
  /// in the dual complex, and the split is unique.
  bool join_total = false;
  bool join_unique = false;
};

/// r = -1 gives all of K'. Throws MalformedInput unless -1 <= r <= dim K.
DualComplex dual_complex(const SimplicialComplex& k, int r);

/// Groups of diffeomorphisms of S^{n-1} modulo those extending over D^n.
struct GammaTable {
  std::map<int, std::string> groups;

  /// Entries known to this library: trivial through n = 6, Z/28 at n = 7.
  static GammaTable known();
  /// False for entries that are missing or nontrivial.
  bool trivial(int n) const;
};

struct ObstructionReport {
  SigmaCase kase = SigmaCase::B;
  int cw_dimension_bound = 0;
  /// CW bound of the smaller space of the pair, -1 in the absolute case.
  int subspace_bound = -1;
  int dual_complex_dim = -1;
  std::vector<int> required_gamma;
  bool all_vanish = false;
};

/// CW dimension of the complement of Sigma (and of the pair in cases B and
/// C), with `k` the dimension of the relative circuit and `ambient` the
/// complex of dimension k-1, k or k+1 for cases A, B, C.
ObstructionReport cw_dimension_bound(SigmaCase c, const SimplicialComplex& ambient, int k,
                                     const GammaTable& table = GammaTable::known());

/// Limit dimension bound of a pseudocycle: max(-1, d).
inline int floor_bound(int d) { return d < -1 ? -1 : d; }

struct LimitBound {
  OpenSimplexSet carrier;
  int limit_dimension = -1;
  int bound = -1;
  bool holds() const { return limit_dimension <= bound; }
};

struct PseudocycleCertificate {
  RelativeCircuitData circuit;
  SimplicialMap map;
  TargetPair target;
  int k = 0;
  Verdict circuit_verdict;
  SigmaSet sigma;
  Verdict prop20_verdict;
  OrientationAssignment orientation;
  IntChain fundamental_class;
  HomologyCoordinates coordinates;
  LimitBound main;      // L(b|Q\Sigma) = b(Sigma), ld <= max(-1, k-2)
  LimitBound boundary;  // restriction to dQ, ld <= max(-1, k-3)
  ObstructionReport obstruction;

  Status status() const;
};

/// Runs the pipeline. Throws StageFailure with the failing stage's
/// witnesses; later stages never run after a failure.
PseudocycleCertificate psi(const RelativeCircuitData& q, const SimplicialMap& a,
                           const TargetPair& target);

struct BordismCertificate {
  BordismData bordism;
  BordismMode mode = BordismMode::Relative;
  SimplicialMap map;
  TargetPair target;
  Verdict nullbordism_verdict;
  SigmaSet sigma;
  Verdict prop20_verdict;
  LimitBound main;  // L(d|R\Sigma) = d(Sigma), ld <= max(-1, k-1)
  LimitBound side;  // side boundary, ld <= max(-1, k-2)
  ObstructionReport obstruction;

  Status status() const;
};

BordismCertificate verify_bordism_certificate(const BordismData& r, const SimplicialMap& d,
                                              const TargetPair& target,
                                              BordismMode mode = BordismMode::Relative);

/// The two certificates sit at the ends of the bordism and give the same
/// class once both ends are oriented from the bordism.
Verdict bordism_invariance_check(const PseudocycleCertificate& first,
                                 const PseudocycleCertificate& second,
                                 const BordismCertificate& bordism);

/// Deterministic JSON (sorted keys) with every witness embedded.
nlohmann::json certificate_json(const PseudocycleCertificate& c);
nlohmann::json certificate_json(const BordismCertificate& c);
nlohmann::json obstruction_json(const ObstructionReport& r);

struct CertificateCheck {
  Status status = Status::Pass;
  std::vector<std::string> mismatches;
};

/// Rebuilds the inputs from the certificate, reruns the pipeline and
/// compares every field; also re-derives the verdicts from the recorded
/// carriers and Gamma indices.
CertificateCheck verify_certificate(const nlohmann::json& cert);

}  // namespace circuitsmith
