#pragma once

#include "lawrence/arrangement.hpp"
#include "lawrence/chain.hpp"

namespace lawrence {

struct ResolutionOptions {
  EnumerationOptions enumeration;
};

// Minimal free resolution of S/J_L as the labeled quotient complex: degree 0
// is the single vertex cell, degree-i rank is the number of i-dimensional
// quotient cells, boundaries carry monomial coefficients and orientation
// signs from the cell geometry.
LabeledComplex build_resolution(const Lattice& l,
                                const ResolutionOptions& opts = {});

// f-vector of the quotient complex = Betti numbers of S/J_L.
std::vector<std::size_t> betti_numbers(const Lattice& l,
                                       const ResolutionOptions& opts = {});

// Rational homology ranks of the complex after every variable is sent to 1;
// for the quotient complex of a rank-m lattice these are binomial(m, i).
std::vector<std::size_t> torus_homology_ranks(const LabeledComplex& c);

// No boundary entry contains the constant monomial.
bool complex_is_minimal(const LabeledComplex& c);

// Every entry is homogeneous for the Z^{2n}/Lambda(L) grading: exponent
// differences between terms are of the form (u, -u) with u in L.
bool complex_is_homogeneous(const LabeledComplex& c, const Lattice& l);

struct ExactnessSample {
  IntVec degree_a, degree_b;
  bool contractible = false;
  bool d_squared_zero = false;
  bool minimal = false;  // no unit entries, distinct labels
  std::vector<std::size_t> reduced_homology;  // empty when contractible
};

struct ExactnessReport {
  std::vector<ExactnessSample> samples;
  bool all_contractible() const {
    for (const auto& s : samples)
      if (!s.contractible) return false;
    return true;
  }
  bool all_verified() const {
    for (const auto& s : samples)
      if (!s.contractible || !s.d_squared_zero || !s.minimal) return false;
    return true;
  }
};

// Checks that the subcomplex of arrangement faces inside {-b <= Bu <= a}
// has vanishing reduced rational homology for each sampled degree.
ExactnessReport graded_exactness_sample(
    const Lattice& l, const std::vector<std::pair<IntVec, IntVec>>& degrees);

// Random degrees with entries in [0, max_entry].
std::vector<std::pair<IntVec, IntVec>> sample_degrees(std::size_t n,
                                                      std::size_t count,
                                                      int max_entry,
                                                      unsigned long seed);

}  // namespace lawrence
