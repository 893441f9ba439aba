#pragma once

#include <vector>

#include "lawrence/numeric.hpp"

namespace lawrence {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat value = 0;
  RatVec x;  // a maximizer when status == kOptimal
};

// Maximize objective . x subject to rows[i] . x <= rhs[i], x unrestricted in
// sign. Exact rational two-phase simplex with Bland's rule, so the solver
// terminates on every input and certificates are exact.
LpResult lp_maximize(const std::vector<RatVec>& rows, const RatVec& rhs,
                     const RatVec& objective);

}  // namespace lawrence
