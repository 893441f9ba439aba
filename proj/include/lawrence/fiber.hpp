#pragma once

#include "lawrence/arrangement.hpp"
#include "lawrence/chain.hpp"

namespace lawrence {

struct FiberPoint {
  IntVec point;      // u with -b <= B u <= a
  Monomial monomial; // x^(a - Bu) y^(b + Bu)
};

// The fiber of x^a y^b: one lattice point per monomial in the class.
std::vector<FiberPoint> fiber_points(const Lattice& l, const IntVec& a,
                                     const IntVec& b);

// Cellular resolution of the fiber monomial ideal: the arrangement faces
// inside the box polytope, labeled by lcms of their vertex monomials.
// chain.labels[d] / chain.boundary follow cell dimension d.
struct FiberComplex {
  IntVec a, b;
  std::vector<FiberPoint> points;
  std::vector<std::vector<AffineFace>> faces;  // per dimension, sorted
  LabeledComplex chain;

  std::vector<std::size_t> f_vector() const { return chain.ranks(); }
};

FiberComplex fiber_resolution(const Lattice& l, const IntVec& a,
                              const IntVec& b,
                              const EnumerationOptions& opts = {});

// Reduced rational homology ranks vanish (single connected contractible
// piece). Fast fixed-prime ranks certify vanishing; on any nonzero rank the
// computation is repeated exactly.
bool fiber_is_contractible(const FiberComplex& fc);

// Fiber monomial label of a face for ambient degree (a, b).
Monomial fiber_label(const AffineFace& f, const IntVec& a, const IntVec& b);

}  // namespace lawrence
