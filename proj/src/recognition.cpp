#include "circuitsmith/recognition.hpp"

#include <map>
#include <queue>

namespace circuitsmith {

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::InteriorManifold: return "InteriorManifold";
    case PointClass::BoundaryManifold: return "BoundaryManifold";
    case PointClass::NonManifold: return "NonManifold";
    case PointClass::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

namespace {

bool is_pure(const SimplicialComplex& k, int d) {
  for (const auto& m : k.maximal_simplices()) {
    if (m.dimension() != d) return false;
  }
  return true;
}

// Number of d-simplices on each (d-1)-simplex.
std::map<Simplex, int> facet_degrees(const SimplicialComplex& k, int d) {
  std::map<Simplex, int> deg;
  for (const auto& s : k.simplices_of_dimension(d - 1)) deg[s] = 0;
  for (const auto& t : k.simplices_of_dimension(d)) {
    for (const auto& f : t.facets()) ++deg[f];
  }
  return deg;
}

}  // namespace

LinkShape classify_link(const SimplicialComplex& lk, int d) {
  if (d < 0) return lk.empty() ? LinkShape::Sphere : LinkShape::Neither;
  if (lk.dimension() != d || !is_pure(lk, d)) return LinkShape::Neither;

  if (d == 0) {
    switch (lk.size()) {
      case 2: return LinkShape::Sphere;
      case 1: return LinkShape::Ball;
      default: return LinkShape::Neither;
    }
  }

  if (connected_components(lk).size() != 1) return LinkShape::Neither;
  const auto deg = facet_degrees(lk, d);
  std::vector<Simplex> boundary_faces;
  for (const auto& [f, n] : deg) {
    if (n > 2) return LinkShape::Neither;
    if (n == 1) boundary_faces.push_back(f);
  }

  if (d == 1) {
    // Connected graph with vertex degrees <= 2: a circle or an arc.
    if (boundary_faces.empty()) return LinkShape::Sphere;
    if (boundary_faces.size() == 2) return LinkShape::Ball;
    return LinkShape::Neither;
  }

  // Every vertex of a manifold link must itself have a sphere or ball link.
  for (Vertex v : lk.vertices()) {
    if (classify_link(link(Simplex{v}, lk), d - 1) == LinkShape::Neither) {
      return LinkShape::Neither;
    }
  }

  const long chi = lk.euler_characteristic();
  if (d == 2) {
    if (boundary_faces.empty()) {
      const bool orientable = propagate_orientation(lk, 2).consistent;
      return (orientable && chi == 2) ? LinkShape::Sphere : LinkShape::Neither;
    }
    // Compact connected surface with one boundary circle and chi = 1 is a disk.
    const auto bd = SimplicialComplex::closure_of(boundary_faces);
    if (chi != 1 || connected_components(bd).size() != 1) return LinkShape::Neither;
    if (classify_link(bd, 1) != LinkShape::Sphere) return LinkShape::Neither;
    return LinkShape::Ball;
  }

  // d >= 3: only necessary conditions are available.
  const long sphere_chi = (d % 2 == 0) ? 2 : 0;
  if (boundary_faces.empty() && chi != sphere_chi) return LinkShape::Neither;
  if (!boundary_faces.empty() && chi != 1) return LinkShape::Neither;
  return LinkShape::Unknown;
}

PointClass classify_point(const Simplex& s, const SimplicialComplex& k, int k_dim) {
  const auto lk = link(s, k);
  switch (classify_link(lk, k_dim - s.dimension() - 1)) {
    case LinkShape::Sphere: return PointClass::InteriorManifold;
    case LinkShape::Ball: return PointClass::BoundaryManifold;
    case LinkShape::Neither: return PointClass::NonManifold;
    case LinkShape::Unknown: return PointClass::Unknown;
  }
  return PointClass::Unknown;
}

ManifoldReport non_manifold_set(const SimplicialComplex& k) {
  ManifoldReport report;
  const int d = k.dimension();
  SimplexSet bad;
  for (const auto& s : k) {
    const PointClass c = classify_point(s, k, d);
    report.classification.emplace(s, c);
    if (c == PointClass::NonManifold) bad.insert(s);
    if (c == PointClass::Unknown) report.exact = false;
  }
  // Already face-closed when the classification is orbit-invariant.
  report.non_manifold_subcomplex = SimplicialComplex::closure_of(bad);
  return report;
}

bool PseudomanifoldReport::ok(bool require_strong_connectivity) const {
  for (const auto& c : verdict.checks()) {
    if (c.name == "strongly_connected" && !require_strong_connectivity) continue;
    if (c.status != Status::Pass) return false;
  }
  return true;
}

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& k, int k_dim) {
  PseudomanifoldReport report;

  std::vector<Simplex> impure;
  for (const auto& m : k.maximal_simplices()) {
    if (m.dimension() != k_dim) impure.push_back(m);
  }
  report.verdict.add("pure", impure.empty() ? Status::Pass : Status::Fail, impure);

  std::vector<Simplex> thick;
  for (const auto& [f, n] : facet_degrees(k, k_dim)) {
    if (n > 2) thick.push_back(f);
  }
  report.verdict.add("thin", thick.empty() ? Status::Pass : Status::Fail, thick);

  // Dual graph components of k-simplices through (k-1)-faces.
  const auto tops = k.simplices_of_dimension(k_dim);
  std::map<Simplex, std::vector<std::size_t>> by_facet;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (const auto& f : tops[i].facets()) by_facet[f].push_back(i);
  }
  std::vector<int> comp(tops.size(), -1);
  std::vector<Simplex> reps;
  for (std::size_t root = 0; root < tops.size(); ++root) {
    if (comp[root] >= 0) continue;
    const int c = report.components++;
    reps.push_back(tops[root]);
    std::queue<std::size_t> q;
    q.push(root);
    comp[root] = c;
    while (!q.empty()) {
      const auto t = q.front();
      q.pop();
      for (const auto& f : tops[t].facets()) {
        for (std::size_t u : by_facet[f]) {
          if (comp[u] < 0) {
            comp[u] = c;
            q.push(u);
          }
        }
      }
    }
  }
  std::vector<Simplex> strays(reps.size() > 1 ? reps.begin() + 1 : reps.end(), reps.end());
  report.verdict.add("strongly_connected", report.components <= 1 ? Status::Pass : Status::Fail,
                     strays, std::to_string(report.components) + " component(s)");
  return report;
}

RegionReport region_is_pl_manifold(const OpenSimplexSet& u, int k_dim) {
  RegionReport report;
  if (u.empty()) return report;
  const auto local = star(u, u.host()).closure();
  bool unknown = false;
  std::vector<Simplex> bad, undecided;
  for (const auto& s : u.members()) {
    switch (classify_point(s, local, k_dim)) {
      case PointClass::InteriorManifold: report.interior.insert(s); break;
      case PointClass::BoundaryManifold: report.boundary.insert(s); break;
      case PointClass::NonManifold: bad.push_back(s); break;
      case PointClass::Unknown:
        unknown = true;
        undecided.push_back(s);
        break;
    }
  }
  if (!bad.empty()) {
    report.verdict = Tri::No;
    report.witnesses = std::move(bad);
  } else if (unknown) {
    report.verdict = Tri::Unknown;
    report.witnesses = std::move(undecided);
  }
  return report;
}

}  // namespace circuitsmith
