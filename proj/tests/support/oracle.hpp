#pragma once

// Dense reference homology: its own face enumeration, its own boundary
// matrices and a textbook Smith reduction with no pivot selection.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oracle {

using Z = boost::multiprecision::mpz_int;
using Face = std::vector<int>;
using Matrix = std::vector<std::vector<Z>>;

struct Group {
  int betti = 0;
  std::vector<Z> torsion;
  bool operator==(const Group&) const = default;
};

inline std::set<Face> faces_of(const std::vector<Face>& maximal) {
  std::set<Face> out;
  for (Face m : maximal) {
    std::sort(m.begin(), m.end());
    const unsigned n = static_cast<unsigned>(m.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Face f;
      for (unsigned i = 0; i < n; ++i) {
        if (mask & (1u << i)) f.push_back(m[i]);
      }
      out.insert(f);
    }
  }
  return out;
}

/// Diagonal entries (absolute values) of a Smith form of m.
inline std::vector<Z> diagonal(Matrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<Z> out;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i) {
      for (std::size_t j = t; j < cols && !found; ++j) {
        if (m[i][j] != 0) {
          std::swap(m[i], m[t]);
          for (auto& row : m) std::swap(row[j], row[t]);
          found = true;
        }
      }
    }
    if (!found) break;
    while (true) {
      bool changed = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (m[i][t] != 0) {
          const Z q = m[i][t] / m[t][t];
          for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
          if (m[i][t] != 0) std::swap(m[i], m[t]);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (m[t][j] != 0) {
          const Z q = m[t][j] / m[t][t];
          for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
          if (m[t][j] != 0) {
            for (auto& row : m) std::swap(row[j], row[t]);
          }
          changed = true;
        }
      }
      if (changed) continue;
      for (std::size_t i = t + 1; i < rows && !changed; ++i) {
        for (std::size_t j = t + 1; j < cols && !changed; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c) m[t][c] += m[i][c];
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

/// H_n(K, A) for n = 0..dim K.
inline std::vector<Group> homology(const std::vector<Face>& maximal, const std::vector<Face>& sub = {}) {
  const auto all = faces_of(maximal);
  const auto rel = faces_of(sub);
  std::map<int, std::vector<Face>> by_dim;
  for (const auto& f : all) {
    if (!rel.count(f)) by_dim[static_cast<int>(f.size()) - 1].push_back(f);
  }
  int top = -1;
  for (const auto& f : all) top = std::max(top, static_cast<int>(f.size()) - 1);

  auto boundary = [&](int n) {
    const auto& cols = by_dim[n];
    const auto& rows = by_dim[n - 1];
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < rows.size(); ++i) index[rows[i]] = i;
    Matrix m(rows.size(), std::vector<Z>(cols.size(), 0));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t i = 0; i < cols[c].size(); ++i) {
        Face f = cols[c];
        f.erase(f.begin() + static_cast<long>(i));
        auto it = index.find(f);
        if (it != index.end()) m[it->second][c] = (i % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  };

  std::vector<std::vector<Z>> diag(static_cast<std::size_t>(top + 2));
  for (int n = 1; n <= top; ++n) diag[static_cast<std::size_t>(n)] = diagonal(boundary(n));

  std::vector<Group> out;
  for (int n = 0; n <= top; ++n) {
    Group g;
    const auto rank_n = static_cast<int>(diag[static_cast<std::size_t>(n)].size());
    const auto& next = diag[static_cast<std::size_t>(n + 1)];
    g.betti = static_cast<int>(by_dim[n].size()) - rank_n - static_cast<int>(next.size());
    for (const auto& d : next) {
      if (d > 1) g.torsion.push_back(d);
    }
    std::sort(g.torsion.begin(), g.torsion.end());
    out.push_back(g);
  }
  return out;
}

}  // namespace oracle
