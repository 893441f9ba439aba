#pragma once

#include "lawrence/arrangement.hpp"
#include "lawrence/chain.hpp"

namespace lawrence {

// Integer weights on (x_1..x_n, y_1..y_n). The induced functional on the
// lattice picture is omega = B^T (wx - wy); the weight must be nonzero on
// every circuit (genericity), which is checked at construction.
struct WeightOrder {
  IntVec wx, wy;
  IntVec omega;
};

WeightOrder make_weight_order(const Lattice& l, const IntVec& w2n);

// Initial terms of the circuit binomials: each circuit oriented to positive
// weight contributes x^{c+} y^{c-}. All squarefree.
std::vector<Monomial> initial_terms(const Lattice& l, const WeightOrder& w);

// Cone of the central arrangement all of whose extreme rays have positive
// weight; since every cone here is pointed, positivity on rays certifies
// positivity on the whole cone.
struct PositiveCone {
  SignVector sv;
  int dim = 0;
  std::vector<IntVec> rays;  // primitive generators, conformal orientation
};

std::vector<PositiveCone> positive_cones(const Lattice& l,
                                         const WeightOrder& w,
                                         const EnumerationOptions& opts = {});

// Minimal free resolution of S/in(J_L): degree-i modules indexed by the
// i-dimensional positive cones (the sliced cell complex), boundaries from
// the covector facet relation with slice-adapted orientations.
LabeledComplex initial_resolution(const Lattice& l, const WeightOrder& w,
                                  const EnumerationOptions& opts = {});

}  // namespace lawrence
