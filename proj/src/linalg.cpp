#include "lawrence/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace lawrence {

namespace {

// g = gcd(a, b) together with p, q such that p*a + q*b = g.
void extended_gcd(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
  if (b == 0) {
    g = abs(a);
    p = a >= 0 ? 1 : -1;
    q = 0;
    return;
  }
  Int p0 = 1, q0 = 0, p1 = 0, q1 = 1, r0 = a, r1 = b;
  while (r1 != 0) {
    Int quot = r0 / r1;
    Int r2 = r0 - quot * r1;
    Int p2 = p0 - quot * p1;
    Int q2 = q0 - quot * q1;
    r0 = r1; r1 = r2;
    p0 = p1; p1 = p2;
    q0 = q1; q1 = q2;
  }
  if (r0 < 0) { r0 = -r0; p0 = -p0; q0 = -q0; }
  g = r0; p = p0; q = q0;
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

// row_i -= q * row_r
void add_multiple(IntMatrix& m, std::size_t i, std::size_t r, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= q * m(r, j);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t j = 0; j < h.cols() && r < h.rows(); ++j) {
    std::size_t pivot = r;
    while (pivot < h.rows() && h(pivot, j) == 0) ++pivot;
    if (pivot == h.rows()) continue;
    if (pivot != r) {
      h.swap_rows(pivot, r);
      u.swap_rows(pivot, r);
    }
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, j) == 0) continue;
      Int g, p, q;
      extended_gcd(h(r, j), h(i, j), g, p, q);
      Int a = h(r, j) / g, b = h(i, j) / g;
      // (row_r, row_i) <- (p*row_r + q*row_i, -b*row_r + a*row_i),
      // determinant p*a + q*b = 1.
      for (std::size_t k = 0; k < h.cols(); ++k) {
        Int hr = h(r, k), hi = h(i, k);
        h(r, k) = p * hr + q * hi;
        h(i, k) = a * hi - b * hr;
      }
      for (std::size_t k = 0; k < u.cols(); ++k) {
        Int ur = u(r, k), ui = u(i, k);
        u(r, k) = p * ur + q * ui;
        u(i, k) = a * ui - b * ur;
      }
    }
    if (h(r, j) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h(i, j), h(r, j));
      add_multiple(h, i, r, q);
      add_multiple(u, i, r, q);
    }
    ++r;
  }
  return {h, u};
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // Zero rows of HNF(m^T) pick out the rows of the transform spanning
  // { v : m * v = 0 }; that kernel is saturated automatically.
  HermiteResult hr = hermite_normal_form(m.transposed());
  std::vector<std::size_t> zero_rows;
  for (std::size_t i = 0; i < hr.h.rows(); ++i) {
    bool all_zero = true;
    for (std::size_t j = 0; j < hr.h.cols(); ++j)
      if (hr.h(i, j) != 0) { all_zero = false; break; }
    if (all_zero) zero_rows.push_back(i);
  }
  IntMatrix raw = hr.u.select_rows(zero_rows);
  if (raw.rows() == 0) return IntMatrix(0, m.cols());
  return hermite_normal_form(raw).h;
}

std::vector<Int> smith_invariants(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t t = 0;
  std::vector<Int> inv;
  const std::size_t lim = std::min(a.rows(), a.cols());
  while (t < lim) {
    // Locate a minimal nonzero entry in the trailing block.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j) {
        if (a(i, j) == 0) continue;
        if (!found || abs(a(i, j)) < abs(a(pi, pj))) {
          pi = i; pj = j; found = true;
        }
      }
    if (!found) break;
    a.swap_rows(t, pi);
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, t), a(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        add_multiple(a, i, t, q);
        if (a(i, t) != 0) {  // remainder smaller than pivot; promote it
          a.swap_rows(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) {
          for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, t), a(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide every remaining entry.
      for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
        for (std::size_t j = t + 1; j < a.cols() && clean; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = 0; k < a.cols(); ++k) a(t, k) += a(i, k);
            clean = false;
          }
    }
    if (a(t, t) < 0) negate_row(a, t);
    inv.push_back(a(t, t));
    ++t;
  }
  return inv;
}

Int determinant(const IntMatrix& m) {
  assert(m.rows() == m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

MinorScan max_minor_scan(const IntMatrix& m, const std::set<Int>& allowed) {
  const IntMatrix& work = m.rows() >= m.cols() ? m : m.transposed();
  IntMatrix scan = m.rows() >= m.cols() ? m : m.transposed();
  const std::size_t rows = work.rows(), k = work.cols();
  MinorScan result;
  if (k == 0) return result;
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    Int d = determinant(scan.select_rows(subset));
    if (!allowed.count(d)) {
      result.ok = false;
      result.witness_rows = subset;
      result.witness_value = d;
      return result;
    }
    // next lexicographic k-subset of {0..rows-1}
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == rows - k + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return result;
}

std::size_t rational_rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < a.cols() && rank < a.rows(); ++j) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, j) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) a.swap_rows(pivot, rank);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      Rat f = a(i, j) / a(rank, j);
      for (std::size_t l = j; l < a.cols(); ++l) a(i, l) -= f * a(rank, l);
    }
    ++rank;
  }
  return rank;
}

std::size_t rational_rank(const IntMatrix& m) { return rational_rank(to_rational(m)); }

std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& rhs) {
  assert(a.rows() == rhs.size());
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = rhs[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < a.cols() && rank < aug.rows(); ++j) {
    std::size_t pivot = rank;
    while (pivot < aug.rows() && aug(pivot, j) == 0) ++pivot;
    if (pivot == aug.rows()) continue;
    if (pivot != rank) aug.swap_rows(pivot, rank);
    for (std::size_t i = 0; i < aug.rows(); ++i) {
      if (i == rank || aug(i, j) == 0) continue;
      Rat f = aug(i, j) / aug(rank, j);
      for (std::size_t l = j; l <= a.cols(); ++l) aug(i, l) -= f * aug(rank, l);
    }
    pivot_col.push_back(j);
    ++rank;
  }
  for (std::size_t i = rank; i < aug.rows(); ++i)
    if (aug(i, a.cols()) != 0) return std::nullopt;
  RatVec x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < rank; ++i)
    x[pivot_col[i]] = aug(i, a.cols()) / aug(i, pivot_col[i]);
  return x;
}

std::optional<IntVec> integral_preimage(const IntMatrix& b, const IntVec& target) {
  RatVec rhs(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) rhs[i] = Rat(target[i]);
  auto sol = solve_linear(to_rational(b), rhs);
  if (!sol) return std::nullopt;
  IntVec z(sol->size());
  for (std::size_t i = 0; i < sol->size(); ++i) {
    if (denominator((*sol)[i]) != 1) return std::nullopt;
    z[i] = numerator((*sol)[i]);
  }
  return z;
}

}  // namespace lawrence
