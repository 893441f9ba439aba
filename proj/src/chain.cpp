#include "lawrence/chain.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "lawrence/numeric.hpp"

namespace lawrence {

void BoundaryMatrix::add_term(std::size_t column, std::size_t row, int coef,
                              const Monomial& mono) {
  assert(column < cols && row < rows);
  auto& entries = col[column];
  auto it = std::lower_bound(
      entries.begin(), entries.end(), row,
      [](const auto& e, std::size_t r) { return e.first < r; });
  if (it == entries.end() || it->first != row)
    it = entries.insert(it, {row, PolyEntry()});
  it->second.add(coef, mono);
  if (it->second.is_zero()) entries.erase(it);
}

const PolyEntry* BoundaryMatrix::entry(std::size_t row,
                                       std::size_t column) const {
  for (const auto& [r, e] : col[column])
    if (r == row) return &e;
  return nullptr;
}

std::vector<std::size_t> LabeledComplex::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& level : labels) r.push_back(level.size());
  return r;
}

bool check_d_squared(const std::vector<BoundaryMatrix>& boundary) {
  for (std::size_t d = 0; d + 1 < boundary.size(); ++d) {
    const BoundaryMatrix& lo = boundary[d];
    const BoundaryMatrix& hi = boundary[d + 1];
    assert(lo.cols == hi.rows);
    for (std::size_t c = 0; c < hi.cols; ++c) {
      std::map<std::size_t, PolyEntry> acc;
      for (const auto& [mid, e1] : hi.col[c])
        for (const auto& [row, e0] : lo.col[mid]) acc[row] += e0 * e1;
      for (const auto& [row, e] : acc)
        if (!e.is_zero()) return false;
    }
  }
  return true;
}

bool check_d_squared(const LabeledComplex& c) {
  return check_d_squared(c.boundary);
}

bool entries_unit_free(const std::vector<BoundaryMatrix>& boundary) {
  for (const BoundaryMatrix& b : boundary)
    for (const auto& column : b.col)
      for (const auto& [row, e] : column)
        if (e.has_unit_term()) return false;
  return true;
}

SparseIntMatrix specialize_at_one(const BoundaryMatrix& b) {
  SparseIntMatrix out;
  out.rows = b.rows;
  out.cols = b.cols;
  out.col.resize(b.cols);
  for (std::size_t c = 0; c < b.cols; ++c)
    for (const auto& [row, e] : b.col[c]) {
      long long v = e.value_at_one();
      if (v != 0) out.col[c].push_back({row, v});
    }
  return out;
}

namespace {

constexpr long long kPrime = 2147483647;  // 2^31 - 1

long long mod_inverse(long long a) {
  long long t = 0, nt = 1, r = kPrime, nr = a % kPrime;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return (t % kPrime + kPrime) % kPrime;
}

// Column reduction over a field: rank = number of columns with distinct
// pivot rows after reduction.
template <typename Field>
std::size_t column_reduce_rank(
    std::vector<std::vector<std::pair<std::size_t, Field>>> cols,
    auto negate_ratio, auto axpy) {
  std::map<std::size_t, std::size_t> owner;  // pivot row -> column index
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto& v = cols[c];
    while (!v.empty()) {
      std::size_t low = v.back().first;
      auto it = owner.find(low);
      if (it == owner.end()) {
        owner.emplace(low, c);
        ++rank;
        break;
      }
      const auto& w = cols[it->second];
      Field f = negate_ratio(v.back().second, w.back().second);
      axpy(v, w, f);  // v += f * w, removing the pivot
    }
  }
  return rank;
}

template <typename Field, typename Add>
void sparse_axpy(std::vector<std::pair<std::size_t, Field>>& v,
                 const std::vector<std::pair<std::size_t, Field>>& w,
                 const Field& f, Add add, const Field& zero) {
  std::vector<std::pair<std::size_t, Field>> out;
  out.reserve(v.size() + w.size());
  std::size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      out.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      Field val = add(zero, w[j].second, f);
      if (!(val == zero)) out.push_back({w[j].first, val});
      ++j;
    } else {
      Field val = add(v[i].second, w[j].second, f);
      if (!(val == zero)) out.push_back({v[i].first, val});
      ++i;
      ++j;
    }
  }
  v = std::move(out);
}

}  // namespace

std::size_t rank_mod_p(const SparseIntMatrix& m) {
  std::vector<std::vector<std::pair<std::size_t, long long>>> cols(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [row, val] : m.col[c]) {
      long long v = ((val % kPrime) + kPrime) % kPrime;
      if (v != 0) cols[c].push_back({row, v});
    }
  auto negate_ratio = [](long long a, long long b) {
    return (kPrime - (__int128(a) * mod_inverse(b)) % kPrime) % kPrime;
  };
  auto add = [](long long a, long long b, long long f) {
    return (long long)((a + __int128(b) * f) % kPrime);
  };
  auto axpy = [&](auto& v, const auto& w, long long f) {
    sparse_axpy<long long>(v, w, f, add, 0LL);
  };
  return column_reduce_rank<long long>(std::move(cols), negate_ratio, axpy);
}

std::size_t rank_exact(const SparseIntMatrix& m) {
  std::vector<std::vector<std::pair<std::size_t, Rat>>> cols(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [row, val] : m.col[c])
      cols[c].push_back({row, Rat(val)});
  auto negate_ratio = [](const Rat& a, const Rat& b) { return -a / b; };
  auto add = [](const Rat& a, const Rat& b, const Rat& f) { return a + b * f; };
  auto axpy = [&](auto& v, const auto& w, const Rat& f) {
    sparse_axpy<Rat>(v, w, f, add, Rat(0));
  };
  return column_reduce_rank<Rat>(std::move(cols), negate_ratio, axpy);
}

std::vector<std::size_t> homology_ranks_at_one(
    const std::vector<BoundaryMatrix>& boundary,
    const std::vector<std::size_t>& sizes, bool exact) {
  std::vector<std::size_t> rk(sizes.size() + 1, 0);
  for (std::size_t d = 0; d < boundary.size(); ++d) {
    SparseIntMatrix s = specialize_at_one(boundary[d]);
    rk[d + 1] = exact ? rank_exact(s) : rank_mod_p(s);
  }
  std::vector<std::size_t> h(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    assert(sizes[i] >= rk[i] + rk[i + 1]);
    h[i] = sizes[i] - rk[i] - rk[i + 1];
  }
  return h;
}

}  // namespace lawrence
