#pragma once

#include <map>
#include <vector>

#include "lawrence/lattice.hpp"
#include "lawrence/lp.hpp"

namespace lawrence {

// Sign vector in {+1, 0, -1}^n. The canonical order ranks values 0 < + < -
// coordinatewise-lexicographically; minimal representatives and all sorted
// outputs use it.
using SignVector = std::vector<int>;

inline int sv_order_rank(int s) { return s == 0 ? 0 : (s > 0 ? 1 : 2); }
bool sv_canonical_less(const SignVector& a, const SignVector& b);
SignVector sv_negate(const SignVector& s);
bool sv_conformal_below(const SignVector& below, const SignVector& above);

// A face of the central arrangement: realizable sign vector with an exact
// rational witness x, sign(B x) = sv.
struct Covector {
  SignVector sv;
  int dim = 0;
  RatVec witness;
};

struct FaceDiagram {
  std::size_t n = 0, m = 0;
  std::vector<Covector> faces;          // sorted by (dim, canonical order)
  std::vector<std::size_t> dim_offset;  // faces of dim k: [dim_offset[k], dim_offset[k+1])
  std::map<SignVector, std::size_t> index;
  std::vector<std::vector<std::size_t>> facets_of;  // codim-1 faces per face

  std::vector<std::size_t> counts_by_dim() const;
};

struct EnumerationOptions {
  std::size_t max_faces = 1'000'000;
  bool brute_force = false;  // 3^n scan with LP feasibility; test oracle
};

FaceDiagram enumerate_covectors(const Lattice& l,
                                const EnumerationOptions& opts = {});

// Quotient cell: translation orbit of covectors, identified by its minimal
// member. Labels a = rep+, b = rep- are 0/1 vectors with disjoint support.
struct QuotientCell {
  SignVector rep;
  int dim = 0;
  std::vector<int> label_x, label_y;
  std::size_t orbit_size = 0;
};

struct QuotientComplex {
  std::size_t n = 0, m = 0;
  std::vector<QuotientCell> cells;  // sorted by (dim, rep)
  std::vector<std::size_t> dim_offset;
  std::map<SignVector, std::size_t> cell_of_covector;
  std::vector<std::vector<IntVec>> cell_vertices;  // lattice points, sorted

  std::vector<std::size_t> f_vector() const;
};

QuotientComplex quotient_cells(const Lattice& l, const FaceDiagram& faces);
QuotientComplex quotient_cells(const Lattice& l);

struct CellGeometry {
  std::vector<IntVec> vertices;  // lattice points u with -b <= B u <= a
  IntMatrix tangent_basis;       // rows span the cell's linear span
};

CellGeometry cell_geometry(const Lattice& l, const QuotientCell& cell);

// All lattice points u with lower <= B u <= upper; exact LP bounding box
// per coordinate, then integer scan.
std::vector<IntVec> lattice_points_in_box(const Lattice& l,
                                          const IntVec& lower,
                                          const IntVec& upper);

// A closed bounded face of the infinite arrangement, determined by its
// lattice vertices. Per coordinate, B x is either constant (beta_exact) or
// sweeps the open unit interval (beta_lo, beta_lo + 1).
struct AffineFace {
  std::vector<IntVec> vertices;  // sorted, nonempty
  IntVec beta_lo;
  std::vector<char> beta_exact;
  int dim = 0;
};

AffineFace make_affine_face(const Lattice& l, std::vector<IntVec> vertices);

// Laurent label (ceil, -floor) of the face.
struct LaurentLabel {
  IntVec x, y;
};
LaurentLabel laurent_label(const AffineFace& f);

struct FacetData {
  AffineFace face;
  Monomial quotient;              // parent label / facet label
  std::size_t tight_coord = 0;    // first coordinate whose bound is tight
  bool tight_upper = false;
};

// Codimension-one faces of the closed polytope of `parent`.
std::vector<FacetData> geometric_facets(const Lattice& l,
                                        const AffineFace& parent);

// Basis of { x : b_i . x = 0 for all exact i }; deterministic, shared by
// every complex so orientations glue consistently.
IntMatrix tangent_basis_for(const Lattice& l, const std::vector<char>& exact);

// Orientation sign of a facet in the boundary of its parent: the sign of
// the determinant expressing (outward direction, facet basis) in the
// parent's tangent basis.
int incidence_sign(const Lattice& l, const IntMatrix& parent_tangent,
                   const IntMatrix& facet_tangent, const FacetData& facet);

// Relative covector of `face` translated by vertex w (w must be a vertex).
SignVector covector_at_vertex(const Lattice& l, const AffineFace& face,
                              const IntVec& w);

// One entry per geometric facet of the closed cell polytope. The facet is
// normalized to its quotient cell by the recorded translation (a lattice
// vertex of the facet); the monomial quotient and orientation are computed
// in the affine picture before translation.
struct CellFacetRef {
  std::size_t facet_cell = 0;  // index into QuotientComplex::cells
  IntVec translation;
  Monomial quotient;
  int orientation = 0;
};

std::vector<CellFacetRef> cell_facets(const Lattice& l,
                                      const QuotientComplex& qc,
                                      std::size_t cell_index);

}  // namespace lawrence
