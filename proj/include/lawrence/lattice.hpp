#pragma once

#include <optional>
#include <vector>

#include "lawrence/linalg.hpp"
#include "lawrence/monomial.hpp"

namespace lawrence {

// A rank-m sublattice L of Z^n, presented as the column space of an n x m
// integer matrix B of full column rank. Row i of B is the normal vector of
// the i-th coordinate hyperplane in the R^m picture. When the lattice is
// saturated, A holds a matrix with ker(A) = L.
struct Lattice {
  std::size_t n = 0, m = 0;
  IntMatrix basis;                  // n x m, columns span L
  std::optional<IntMatrix> cokernel_map;  // A with A * basis = 0, ker A = L

  IntVec basis_row(std::size_t i) const { return basis.row(i); }
  IntVec apply(const IntVec& u) const { return basis * u; }
};

struct LatticeVector {
  IntVec coords;    // element of L in Z^n
  IntVec preimage;  // u with basis * u = coords
};

struct Circuit {
  LatticeVector vec;
  std::vector<std::size_t> support;
};

// Pair of monomials x^a y^b, x^b y^a with a - b in L.
struct Binomial {
  Monomial plus, minus;
  PolyEntry as_entry() const {
    PolyEntry e(1, plus);
    e.add(-1, minus);
    return e;
  }
  std::string str() const { return plus.str() + " - " + minus.str(); }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

// Lattice given as a column span. Rejects rank-deficient input; does not
// saturate unless asked, so a caller's non-saturated lattice stays as given.
Lattice from_image(const IntMatrix& b, bool saturate = false);

// Lattice given as the saturated kernel of A. Throws on a trivial kernel.
Lattice from_kernel(const IntMatrix& a);

bool is_saturated(const Lattice& l);

struct UnimodularityReport {
  bool unimodular = false;
  std::vector<std::size_t> witness_rows;
  Int witness_minor = 0;
};

// Tests whether every maximal minor of the basis lies in {0, 1, -1}.
UnimodularityReport unimodularity_report(const Lattice& l);
bool is_unimodular(const Lattice& l);
void require_unimodular(const Lattice& l);  // throws NotUnimodularError

// True iff Z^coords / (projection of L) is torsion free.
bool projection_torsion_check(const Lattice& l,
                              const std::vector<std::size_t>& coords);

struct ClassGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1
  friend bool operator==(const ClassGroup&, const ClassGroup&) = default;
};

// Structure of Z^n / L.
ClassGroup class_group(const Lattice& l);

// All circuits of a unimodular lattice, one per sign pair, first nonzero
// coordinate positive, sorted by coordinate vector.
std::vector<Circuit> circuits(const Lattice& l);

// One generator x^{c+} y^{c-} - x^{c-} y^{c+} per circuit.
std::vector<Binomial> lawrence_generators(const Lattice& l);

// Convenience: membership test with preimage.
std::optional<IntVec> member_preimage(const Lattice& l, const IntVec& v);

// Canonical form of the lattice (HNF basis of the column span), used to
// compare lattices for equality.
IntMatrix canonical_basis(const Lattice& l);

}  // namespace lawrence
