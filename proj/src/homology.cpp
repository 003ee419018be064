#include "circuitsmith/homology.hpp"

#include <algorithm>
#include <numeric>

namespace circuitsmith {

void IntChain::add(const Simplex& s, const Integer& c) {
  if (s.dimension() != degree) {
    throw MalformedInput("simplex " + s.to_string() + " does not have degree " +
                         std::to_string(degree));
  }
  if (c == 0) return;
  auto [it, inserted] = coefficients.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coefficients.erase(it);
  }
}

Integer IntChain::coefficient(const Simplex& s) const {
  auto it = coefficients.find(s);
  return it == coefficients.end() ? Integer(0) : it->second;
}

IntChain IntChain::operator-() const {
  IntChain out{degree, {}};
  for (const auto& [s, c] : coefficients) out.coefficients.emplace(s, -c);
  return out;
}

IntChain operator+(IntChain a, const IntChain& b) {
  if (a.is_zero()) a.degree = b.degree;
  for (const auto& [s, c] : b.coefficients) a.add(s, c);
  return a;
}

IntChain boundary(const IntChain& z) {
  IntChain out{z.degree - 1, {}};
  if (z.degree == 0) return out;
  for (const auto& [s, c] : z.coefficients) {
    const auto facets = s.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) out.add(facets[i], facet_sign(i) * c);
  }
  return out;
}

IntChain modulo(const IntChain& z, const SimplicialComplex& sub) {
  IntChain out{z.degree, {}};
  for (const auto& [s, c] : z.coefficients) {
    if (!sub.contains(s)) out.coefficients.emplace(s, c);
  }
  return out;
}

std::vector<Simplex> chain_basis(const SimplicialComplex& k, int n, const SimplicialComplex& sub) {
  std::vector<Simplex> out;
  if (n < 0) return out;
  for (const auto& s : k.simplices_of_dimension(n)) {
    if (!sub.contains(s)) out.push_back(s);
  }
  return out;
}

namespace {

std::map<Simplex, Eigen::Index> index_of(const std::vector<Simplex>& basis) {
  std::map<Simplex, Eigen::Index> out;
  for (std::size_t i = 0; i < basis.size(); ++i) out.emplace(basis[i], static_cast<Eigen::Index>(i));
  return out;
}

IntegerMatrix boundary_matrix(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
  IntegerMatrix d = IntegerMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                        static_cast<Eigen::Index>(cols.size()));
  const auto row = index_of(rows);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto facets = cols[j].facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
      auto it = row.find(facets[i]);
      if (it != row.end()) d(it->second, static_cast<Eigen::Index>(j)) = facet_sign(i);
    }
  }
  return d;
}

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

IntChain column_chain(int degree, const std::vector<Simplex>& basis, const IntegerMatrix& m,
                      Eigen::Index col) {
  IntChain out{degree, {}};
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.add(basis[static_cast<std::size_t>(i)], m(i, col));
  return out;
}

}  // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& k, int n, const SimplicialComplex& sub) {
  return boundary_matrix(chain_basis(k, n - 1, sub), chain_basis(k, n, sub));
}

bool HomologyCoordinates::is_zero() const {
  auto zero = [](const Integer& x) { return x == 0; };
  return std::all_of(free.begin(), free.end(), zero) &&
         std::all_of(torsion.begin(), torsion.end(), zero);
}

const HomologyGroup& HomologyResult::operator[](int n) const {
  if (n < 0 || n >= static_cast<int>(groups.size())) {
    throw NotFound("no homology group in degree " + std::to_string(n));
  }
  return groups[static_cast<std::size_t>(n)];
}

std::vector<int> HomologyResult::betti() const {
  std::vector<int> out;
  for (const auto& g : groups) out.push_back(g.betti);
  return out;
}

namespace {

// Coordinates of z in the chain basis, after the rotation into cycle
// coordinates; nullopt if z is not a relative cycle.
std::optional<IntegerMatrix> rotated(const HomologyResult& h, const IntChain& z) {
  const auto& g = h[z.degree];
  const auto idx = index_of(g.basis);
  IntegerMatrix c = IntegerMatrix::Zero(static_cast<Eigen::Index>(g.basis.size()), 1);
  for (const auto& [s, coef] : z.coefficients) {
    if (h.subcomplex.contains(s)) continue;
    auto it = idx.find(s);
    if (it == idx.end()) throw NotFound("simplex " + s.to_string() + " is not in the complex");
    c(it->second, 0) = coef;
  }
  IntegerMatrix w = g.cycle_coordinates * c;
  for (Eigen::Index i = 0; i < g.boundary_rank; ++i) {
    if (w(i, 0) != 0) return std::nullopt;
  }
  return w;
}

bool out_of_range(const HomologyResult& h, const IntChain& z) {
  if (z.degree >= 0 && z.degree < static_cast<int>(h.groups.size())) return false;
  for (const auto& [s, c] : z.coefficients) {
    if (!h.complex.contains(s)) throw NotFound("simplex " + s.to_string() + " is not in the complex");
  }
  return true;
}

}  // namespace

bool HomologyResult::is_cycle(const IntChain& z) const {
  if (out_of_range(*this, z)) return true;
  return rotated(*this, z).has_value();
}

HomologyCoordinates HomologyResult::coordinates(const IntChain& z) const {
  if (out_of_range(*this, z)) return {};
  const auto w = rotated(*this, z);
  if (!w) throw ContractError("chain is not a relative cycle");
  const auto& g = (*this)[z.degree];
  const Eigen::Index zdim = w->rows() - g.boundary_rank;
  IntegerMatrix y = g.reduction * w->bottomRows(zdim);
  HomologyCoordinates out;
  const Eigen::Index s = static_cast<Eigen::Index>(g.factors.size());
  for (Eigen::Index i = 0; i < s; ++i) {
    const auto& d = g.factors[static_cast<std::size_t>(i)];
    if (d > 1) out.torsion.push_back(floor_mod(y(i, 0), d));
  }
  for (Eigen::Index i = s; i < zdim; ++i) out.free.push_back(y(i, 0));
  return out;
}

HomologyResult homology(const SimplicialComplex& k, const SimplicialComplex& sub) {
  if (!sub.is_subcomplex_of(k)) throw MalformedInput("relative complex is not a subcomplex");
  HomologyResult out;
  out.complex = k;
  out.subcomplex = sub;
  const int top = k.dimension();

  std::vector<std::vector<Simplex>> basis;
  for (int n = 0; n <= top + 1; ++n) basis.push_back(chain_basis(k, n, sub));
  auto lower = [&](int n) { return n == 0 ? std::vector<Simplex>{} : basis[n - 1]; };

  for (int n = 0; n <= top; ++n) {
    HomologyGroup g;
    g.degree = n;
    g.basis = basis[n];
    const auto dn = smith_decompose(boundary_matrix(lower(n), basis[n]));
    g.boundary_rank = dn.rank;
    g.cycle_coordinates = dn.right_inverse;
    const Eigen::Index zdim = static_cast<Eigen::Index>(basis[n].size()) - dn.rank;

    const IntegerMatrix b = dn.right_inverse.bottomRows(zdim) * boundary_matrix(basis[n], basis[n + 1]);
    const auto sb = smith_decompose(b);
    g.reduction = sb.left;
    g.factors = sb.invariant_factors;
    const Eigen::Index s = sb.rank;
    g.betti = static_cast<int>(zdim - s);

    const IntegerMatrix gens = dn.right.rightCols(zdim) * sb.left_inverse;
    for (Eigen::Index i = 0; i < s; ++i) {
      const auto& d = sb.invariant_factors[static_cast<std::size_t>(i)];
      if (d > 1) {
        g.torsion.push_back(d);
        g.torsion_generators.push_back(column_chain(n, basis[n], gens, i));
      }
    }
    for (Eigen::Index i = s; i < zdim; ++i) {
      g.free_generators.push_back(column_chain(n, basis[n], gens, i));
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orientation and fundamental classes

OrientationAssignment orient_circuit(const RelativeCircuitData& q) {
  SimplexSet blocked;
  for (const auto& s : q.singular.simplices_of_dimension(q.k - 1)) blocked.insert(s);
  const auto p = propagate_orientation(q.complex, q.k, blocked);
  OrientationAssignment o;
  o.signs = p.signs;
  o.orientable = p.consistent;
  o.witness_cycle = p.conflict_cycle;
  o.components = p.components;
  return o;
}

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<Simplex>& simplices) {
  std::vector<std::vector<int>> out;
  for (const auto& s : simplices) out.push_back(s.vertices());
  return out;
}

}  // namespace

IntChain fundamental_class(const RelativeCircuitData& q, const OrientationAssignment& o) {
  if (!o.orientable) {
    throw StageFailure("orientation", "circuit is not orientable", as_lists(o.witness_cycle));
  }
  IntChain z{q.k, {}};
  for (const auto& s : q.complex.simplices_of_dimension(q.k)) {
    auto it = o.signs.find(s);
    if (it == o.signs.end()) throw ContractError("orientation misses " + s.to_string());
    z.add(s, it->second);
  }
  const auto dz = boundary(z);
  std::vector<Simplex> bad;
  for (const auto& [s, c] : dz.coefficients) {
    if (!q.boundary.contains(s) || (c != 1 && c != -1)) bad.push_back(s);
  }
  for (const auto& s : q.boundary.simplices_of_dimension(q.k - 1)) {
    if (!dz.coefficients.count(s)) bad.push_back(s);
  }
  if (!bad.empty()) {
    throw StageFailure("fundamental_class", "boundary of the fundamental chain is not dQ",
                       as_lists(bad));
  }
  return z;
}

OrientationAssignment induced_boundary_orientation(const RelativeCircuitData& q,
                                                   const OrientationAssignment& o) {
  const auto dz = boundary(fundamental_class(q, o));
  OrientationAssignment out;
  for (const auto& [s, c] : dz.coefficients) out.signs.emplace(s, c > 0 ? 1 : -1);
  out.components = propagate_orientation(q.boundary, q.k - 1).components;
  return out;
}

bool same_up_to_component_signs(const SimplicialComplex& k, int d, const OrientationAssignment& a,
                                const OrientationAssignment& b) {
  const auto tops = k.simplices_of_dimension(d);
  std::vector<std::size_t> parent(tops.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<Simplex, std::vector<std::size_t>> by_facet;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (const auto& f : tops[i].facets()) by_facet[f].push_back(i);
  }
  for (const auto& [f, ts] : by_facet) {
    if (ts.size() == 2) parent[find(ts[0])] = find(ts[1]);
  }
  std::map<std::size_t, int> ratio;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    auto ia = a.signs.find(tops[i]);
    auto ib = b.signs.find(tops[i]);
    if (ia == a.signs.end() || ib == b.signs.end()) return false;
    const int r = ia->second * ib->second;
    auto [it, inserted] = ratio.emplace(find(i), r);
    if (!inserted && it->second != r) return false;
  }
  return true;
}

IntChain pushforward(const SimplicialMap& a, const IntChain& z) {
  IntChain out{z.degree, {}};
  for (const auto& [s, c] : z.coefficients) {
    std::vector<Vertex> img;
    for (Vertex v : s) img.push_back(a(v));
    int inversions = 0;
    bool degenerate = false;
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t j = i + 1; j < img.size(); ++j) {
        if (img[i] == img[j]) degenerate = true;
        if (img[i] > img[j]) ++inversions;
      }
    }
    if (degenerate) continue;
    out.add(Simplex(std::move(img)), inversions % 2 == 0 ? c : Integer(-c));
  }
  return out;
}

HomologyCoordinates evaluate(const RelativeCircuitData& q, const SimplicialMap& a, const IntChain& z,
                             const HomologyResult& target) {
  for (const auto& s : q.complex) {
    const auto img = a.image(s);
    if (!target.complex.contains(img)) {
      throw ContractError("map sends " + s.to_string() + " outside the target");
    }
    if (q.boundary.contains(s) && !target.subcomplex.contains(img)) {
      throw ContractError("map does not carry dQ into A: " + s.to_string());
    }
  }
  return target.coordinates(pushforward(a, z));
}

}  // namespace circuitsmith
