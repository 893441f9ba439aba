#pragma once

#include <optional>
#include <set>
#include <vector>

#include "lawrence/matrix.hpp"

namespace lawrence {

struct HermiteResult {
  IntMatrix h;  // row-style Hermite normal form
  IntMatrix u;  // unimodular, h = u * m
};

// Row-style HNF: echelon shape, positive pivots, entries above each pivot
// reduced into [0, pivot). Pivot selection is the first nonzero row in
// column order, so the transform is reproducible.
HermiteResult hermite_normal_form(const IntMatrix& m);

// Rows form a Z-basis of { v : m * v = 0 }. The integer kernel is saturated
// by construction; rows are returned in HNF so the basis is canonical.
IntMatrix kernel_basis(const IntMatrix& m);

// Invariant factors d_1 | d_2 | ... | d_r of m, all positive, r = rank(m).
std::vector<Int> smith_invariants(const IntMatrix& m);

struct MinorScan {
  bool ok = true;
  std::vector<std::size_t> witness_rows;  // offending subset when !ok
  Int witness_value = 0;
};

// Scans all maximal minors (size = min(rows, cols); the wide case is handled
// by transposing, in which case witness indices refer to columns). Subsets
// are visited in lexicographic order and the scan stops at the first minor
// outside `allowed`.
MinorScan max_minor_scan(const IntMatrix& m, const std::set<Int>& allowed);

std::size_t rational_rank(const RatMatrix& m);
std::size_t rational_rank(const IntMatrix& m);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Int determinant(const IntMatrix& m);

// Any rational solution of a * x = rhs, or nullopt if inconsistent.
std::optional<RatVec> solve_linear(const RatMatrix& a, const RatVec& rhs);

// The unique z with b * z = target for a full-column-rank integer matrix b,
// if it exists and is integral.
std::optional<IntVec> integral_preimage(const IntMatrix& b,
                                        const IntVec& target);

}  // namespace lawrence
