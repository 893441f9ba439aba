#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "lawrence/chain.hpp"
#include "lawrence/graphs.hpp"
#include "lawrence/lattice.hpp"

namespace testsupport {

using namespace lawrence;

inline Lattice sum_zero_lattice(std::size_t n) {
  IntMatrix a(1, n);
  for (std::size_t i = 0; i < n; ++i) a(0, i) = 1;
  return from_kernel(a);
}

inline Monomial var_x(std::size_t n, std::size_t i, int e = 1) {
  std::vector<int> x(n, 0), y(n, 0);
  x[i] = e;
  return Monomial(x, y);
}

inline Monomial var_y(std::size_t n, std::size_t i, int e = 1) {
  std::vector<int> x(n, 0), y(n, 0);
  y[i] = e;
  return Monomial(x, y);
}

using DenseEntries = std::vector<std::vector<PolyEntry>>;

inline DenseEntries dense_boundary(const BoundaryMatrix& b) {
  DenseEntries out(b.rows, std::vector<PolyEntry>(b.cols));
  for (std::size_t c = 0; c < b.cols; ++c)
    for (const auto& [r, e] : b.col[c]) out[r][c] = e;
  return out;
}

// Equality up to row permutation, column permutation, and per-column sign.
inline bool matrices_match(const DenseEntries& a, const DenseEntries& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t rows = a.size(), cols = a[0].size();
  if (b[0].size() != cols) return false;
  std::vector<std::size_t> perm(cols);
  for (std::size_t i = 0; i < cols; ++i) perm[i] = i;
  do {
    for (std::size_t mask = 0; mask < (std::size_t(1) << cols); ++mask) {
      DenseEntries t(rows, std::vector<PolyEntry>(cols));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          PolyEntry e = a[r][perm[c]];
          if (mask & (std::size_t(1) << c)) e = -e;
          t[r][c] = std::move(e);
        }
      DenseEntries bb = b;
      std::sort(t.begin(), t.end());
      std::sort(bb.begin(), bb.end());
      if (t == bb) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Chain-level comparison of (d1, d2) pairs for rank-(1, k, r) complexes:
// permute and re-sign the degree-1 and degree-2 bases simultaneously (a
// degree-1 sign flips a d1 column and the matching d2 row together), plus a
// global sign on d1 from the degree-0 generator.
inline bool chain_pair_matches(const DenseEntries& d1a, const DenseEntries& d2a,
                               const DenseEntries& d1b, const DenseEntries& d2b) {
  const std::size_t k = d1a[0].size(), r = d2a[0].size();
  if (d1b[0].size() != k || d2b[0].size() != r) return false;
  if (d2a.size() != k || d2b.size() != k) return false;
  std::vector<std::size_t> p1(k), p2(r);
  for (std::size_t i = 0; i < k; ++i) p1[i] = i;
  do {
    for (std::size_t smask = 0; smask < (std::size_t(1) << k); ++smask) {
      auto s = [&](std::size_t i) {
        return (smask & (std::size_t(1) << i)) ? -1 : 1;
      };
      bool d1_ok = false;
      for (int g : {1, -1}) {
        d1_ok = true;
        for (std::size_t e = 0; e < k && d1_ok; ++e) {
          PolyEntry t = d1a[0][p1[e]];
          if (g * s(e) < 0) t = -t;
          d1_ok = t == d1b[0][e];
        }
        if (d1_ok) break;
      }
      if (!d1_ok) continue;
      for (std::size_t i = 0; i < r; ++i) p2[i] = i;
      do {
        for (std::size_t tmask = 0; tmask < (std::size_t(1) << r); ++tmask) {
          auto ts = [&](std::size_t c) {
            return (tmask & (std::size_t(1) << c)) ? -1 : 1;
          };
          bool ok = true;
          for (std::size_t row = 0; row < k && ok; ++row)
            for (std::size_t c = 0; c < r && ok; ++c) {
              PolyEntry t = d2a[p1[row]][p2[c]];
              if (s(row) * ts(c) < 0) t = -t;
              ok = t == d2b[row][c];
            }
          if (ok) return true;
        }
      } while (std::next_permutation(p2.begin(), p2.end()));
    }
  } while (std::next_permutation(p1.begin(), p1.end()));
  return false;
}

// Connected digraph with a spanning tree plus random extra edges.
inline Digraph random_connected_digraph(std::mt19937_64& rng,
                                        std::size_t max_edges) {
  std::uniform_int_distribution<std::size_t> nv(3, 5);
  Digraph g;
  g.d = nv(rng);
  std::vector<std::pair<std::size_t, std::size_t>> pool;
  for (std::size_t i = 1; i <= g.d; ++i)
    for (std::size_t j = i + 1; j <= g.d; ++j) pool.emplace_back(i, j);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<std::size_t> comp(g.d + 1);
  for (std::size_t v = 1; v <= g.d; ++v) comp[v] = v;
  auto find = [&](std::size_t v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  std::vector<std::pair<std::size_t, std::size_t>> extras;
  for (auto [i, j] : pool) {
    if (find(i) != find(j)) {
      comp[find(i)] = find(j);
      g.edges.emplace_back(i, j);
    } else {
      extras.emplace_back(i, j);
    }
  }
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto [i, j] : extras) {
    if (g.edges.size() >= max_edges) break;
    if (coin(rng)) g.edges.emplace_back(i, j);
  }
  for (auto& [i, j] : g.edges)
    if (coin(rng)) std::swap(i, j);
  return g;
}

// Random unimodular lattice: a graphic or cographic lattice pushed through
// a coordinate permutation, coordinate sign flips, and a small unimodular
// change of basis. All three preserve unimodularity.
inline Lattice random_unimodular_lattice(std::mt19937_64& rng,
                                         std::size_t max_edges = 8) {
  for (;;) {
    Digraph g = random_connected_digraph(rng, max_edges);
    std::uniform_int_distribution<int> coin(0, 1);
    Lattice base;
    if (g.edges.size() > g.d - 1 && coin(rng))
      base = cographic_lattice(g);
    else
      base = graphic_lattice(g);
    if (base.n > max_edges) continue;

    IntMatrix b = base.basis;
    std::vector<std::size_t> rows(b.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    std::shuffle(rows.begin(), rows.end(), rng);
    IntMatrix p = b.select_rows(rows);
    for (std::size_t i = 0; i < p.rows(); ++i)
      if (coin(rng))
        for (std::size_t j = 0; j < p.cols(); ++j) p(i, j) = -p(i, j);
    std::uniform_int_distribution<std::size_t> col(0, p.cols() - 1);
    for (int ops = 0; ops < 3; ++ops) {
      std::size_t c1 = col(rng), c2 = col(rng);
      if (c1 == c2) continue;
      int s = coin(rng) ? 1 : -1;
      for (std::size_t i = 0; i < p.rows(); ++i)
        p(i, c1) += s * p(i, c2);
    }
    return from_image(p);
  }
}

}  // namespace testsupport
