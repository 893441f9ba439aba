#pragma once

#include <vector>

#include "lawrence/monomial.hpp"

namespace lawrence {

// Sparse boundary matrix with polynomial entries, stored by column.
struct BoundaryMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, PolyEntry>>> col;

  BoundaryMatrix() = default;
  BoundaryMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), col(c) {}

  void add_term(std::size_t column, std::size_t row, int coef,
                const Monomial& mono);
  const PolyEntry* entry(std::size_t row, std::size_t column) const;

  friend bool operator==(const BoundaryMatrix&, const BoundaryMatrix&) = default;
};

// Chain of free modules with monomial-labeled generators; boundary[d] maps
// degree d+1 to degree d.
struct LabeledComplex {
  std::size_t n = 0;  // variable pairs x_i, y_i
  std::size_t m = 0;  // top homological degree
  std::vector<std::vector<Monomial>> labels;  // size m+1
  std::vector<BoundaryMatrix> boundary;       // size m

  std::vector<std::size_t> ranks() const;

  friend bool operator==(const LabeledComplex&, const LabeledComplex&) = default;
};

// True iff every composite of consecutive boundaries vanishes identically.
bool check_d_squared(const std::vector<BoundaryMatrix>& boundary);
bool check_d_squared(const LabeledComplex& c);

// No entry contains the constant monomial.
bool entries_unit_free(const std::vector<BoundaryMatrix>& boundary);

// Integer matrix obtained by sending every variable to 1.
struct SparseIntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::size_t, long long>>> col;
};
SparseIntMatrix specialize_at_one(const BoundaryMatrix& b);

std::size_t rank_mod_p(const SparseIntMatrix& m);
std::size_t rank_exact(const SparseIntMatrix& m);

// Homology ranks of the chain complex with the given module sizes. With
// exact = false a fixed-prime computation is used; callers that need a
// vanishing certificate can rely on mod-p ranks never underestimating
// homology, and re-check exactly on a mismatch.
std::vector<std::size_t> homology_ranks_at_one(
    const std::vector<BoundaryMatrix>& boundary,
    const std::vector<std::size_t>& sizes, bool exact);

}  // namespace lawrence
