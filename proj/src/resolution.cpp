#include "lawrence/resolution.hpp"

#include <cassert>
#include <set>
#include <random>

#include "lawrence/fiber.hpp"

namespace lawrence {

LabeledComplex build_resolution(const Lattice& l, const ResolutionOptions& opts) {
  FaceDiagram fd = enumerate_covectors(l, opts.enumeration);
  QuotientComplex qc = quotient_cells(l, fd);
  LabeledComplex c;
  c.n = l.n;
  c.m = l.m;
  c.labels.assign(l.m + 1, {});
  for (const QuotientCell& cell : qc.cells)
    c.labels[cell.dim].push_back(Monomial(cell.label_x, cell.label_y));
  assert(c.labels[0].size() == 1);

  c.boundary.clear();
  for (std::size_t d = 1; d <= l.m; ++d)
    c.boundary.emplace_back(c.labels[d - 1].size(), c.labels[d].size());
  for (std::size_t idx = 0; idx < qc.cells.size(); ++idx) {
    const QuotientCell& cell = qc.cells[idx];
    if (cell.dim == 0) continue;
    std::size_t col = idx - qc.dim_offset[cell.dim];
    for (const CellFacetRef& f : cell_facets(l, qc, idx)) {
      std::size_t row = f.facet_cell - qc.dim_offset[cell.dim - 1];
      c.boundary[cell.dim - 1].add_term(col, row, f.orientation, f.quotient);
    }
  }
  // Every stored entry is a signed sum of distinct monomials with unit
  // coefficients; anything else indicates a broken identification.
  for (const BoundaryMatrix& b : c.boundary)
    for (const auto& column : b.col)
      for (const auto& [row, e] : column)
        for (const Term& t : e.terms()) {
          assert(t.coef == 1 || t.coef == -1);
          (void)t;
        }
  return c;
}

std::vector<std::size_t> betti_numbers(const Lattice& l,
                                       const ResolutionOptions& opts) {
  FaceDiagram fd = enumerate_covectors(l, opts.enumeration);
  return quotient_cells(l, fd).f_vector();
}

std::vector<std::size_t> torus_homology_ranks(const LabeledComplex& c) {
  return homology_ranks_at_one(c.boundary, c.ranks(), /*exact=*/true);
}

bool complex_is_minimal(const LabeledComplex& c) {
  return entries_unit_free(c.boundary);
}

bool complex_is_homogeneous(const LabeledComplex& c, const Lattice& l) {
  for (const BoundaryMatrix& b : c.boundary)
    for (const auto& column : b.col)
      for (const auto& [row, e] : column) {
        const auto& terms = e.terms();
        for (std::size_t t = 1; t < terms.size(); ++t) {
          IntVec dx(l.n), dy(l.n);
          for (std::size_t i = 0; i < l.n; ++i) {
            dx[i] = terms[t].mono.x[i] - terms[0].mono.x[i];
            dy[i] = terms[t].mono.y[i] - terms[0].mono.y[i];
          }
          for (std::size_t i = 0; i < l.n; ++i)
            if (dy[i] != -dx[i]) return false;
          if (!member_preimage(l, dx)) return false;
        }
      }
  return true;
}

ExactnessReport graded_exactness_sample(
    const Lattice& l, const std::vector<std::pair<IntVec, IntVec>>& degrees) {
  ExactnessReport report;
  for (const auto& [a, b] : degrees) {
    FiberComplex fc = fiber_resolution(l, a, b);
    ExactnessSample s;
    s.degree_a = a;
    s.degree_b = b;
    s.contractible = fiber_is_contractible(fc);
    s.d_squared_zero = check_d_squared(fc.chain);
    s.minimal = entries_unit_free(fc.chain.boundary);
    std::set<Monomial> labels;
    std::size_t count = 0;
    for (const auto& level : fc.chain.labels)
      for (const Monomial& m : level) {
        labels.insert(m);
        ++count;
      }
    s.minimal = s.minimal && labels.size() == count;
    if (!s.contractible)
      s.reduced_homology =
          homology_ranks_at_one(fc.chain.boundary, fc.chain.ranks(), true);
    report.samples.push_back(std::move(s));
  }
  return report;
}

std::vector<std::pair<IntVec, IntVec>> sample_degrees(std::size_t n,
                                                      std::size_t count,
                                                      int max_entry,
                                                      unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(0, max_entry);
  std::vector<std::pair<IntVec, IntVec>> out;
  for (std::size_t k = 0; k < count; ++k) {
    IntVec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = entry(rng);
      b[i] = entry(rng);
    }
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace lawrence
