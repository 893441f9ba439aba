#include "lawrence/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "lawrence/errors.hpp"

namespace lawrence {

namespace {

// A with rows spanning the saturated orthogonal complement of the column
// span; ker(A) is then the saturation of the lattice.
IntMatrix orthogonal_complement(const IntMatrix& basis) {
  return kernel_basis(basis.transposed());
}

std::vector<std::size_t> support_of(const IntVec& v) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.push_back(i);
  return s;
}

bool subset_of(const std::vector<std::size_t>& a,
               const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Lattice from_image(const IntMatrix& b, bool saturate) {
  if (b.cols() == 0) throw std::invalid_argument("trivial lattice");
  if (rational_rank(b) != b.cols())
    throw std::invalid_argument("basis matrix must have full column rank");
  Lattice l;
  if (saturate) {
    IntMatrix a = orthogonal_complement(b);
    IntMatrix sat = kernel_basis(a);  // rows span the saturation
    l.basis = sat.transposed();
    l.cokernel_map = a;
  } else {
    l.basis = b;
    std::vector<Int> inv = smith_invariants(b);
    bool saturated = std::all_of(inv.begin(), inv.end(),
                                 [](const Int& d) { return d == 1; });
    if (saturated) l.cokernel_map = orthogonal_complement(b);
  }
  l.n = l.basis.rows();
  l.m = l.basis.cols();
  return l;
}

Lattice from_kernel(const IntMatrix& a) {
  IntMatrix k = kernel_basis(a);
  if (k.rows() == 0) throw std::invalid_argument("trivial lattice");
  Lattice l;
  l.basis = k.transposed();
  l.n = l.basis.rows();
  l.m = l.basis.cols();
  l.cokernel_map = a;
  return l;
}

bool is_saturated(const Lattice& l) {
  std::vector<Int> inv = smith_invariants(l.basis);
  return std::all_of(inv.begin(), inv.end(),
                     [](const Int& d) { return d == 1; });
}

UnimodularityReport unimodularity_report(const Lattice& l) {
  MinorScan scan = max_minor_scan(l.basis, {Int(0), Int(1), Int(-1)});
  UnimodularityReport rep;
  rep.unimodular = scan.ok;
  rep.witness_rows = scan.witness_rows;
  rep.witness_minor = scan.witness_value;
  return rep;
}

bool is_unimodular(const Lattice& l) { return unimodularity_report(l).unimodular; }

void require_unimodular(const Lattice& l) {
  UnimodularityReport rep = unimodularity_report(l);
  if (!rep.unimodular) {
    std::ostringstream os;
    os << "unimodular required: basis has a maximal minor " << rep.witness_minor
       << " on rows {";
    for (std::size_t i = 0; i < rep.witness_rows.size(); ++i)
      os << (i ? "," : "") << rep.witness_rows[i] + 1;
    os << "}";
    throw NotUnimodularError(os.str());
  }
}

bool projection_torsion_check(const Lattice& l,
                              const std::vector<std::size_t>& coords) {
  if (coords.empty()) return true;
  IntMatrix proj = l.basis.select_rows(coords);
  for (const Int& d : smith_invariants(proj))
    if (d > 1) return false;
  return true;
}

ClassGroup class_group(const Lattice& l) {
  std::vector<Int> inv = smith_invariants(l.basis);
  ClassGroup cg;
  cg.free_rank = l.n - inv.size();
  for (const Int& d : inv)
    if (d > 1) cg.torsion.push_back(d);
  return cg;
}

std::vector<Circuit> circuits(const Lattice& l) {
  require_unimodular(l);
  const std::size_t n = l.n, m = l.m;
  std::map<IntVec, IntVec> seen;  // coords -> preimage

  // Each (m-1)-subset of coordinate hyperplanes of rank m-1 meets in a line;
  // its primitive direction maps to a circuit.
  std::vector<std::size_t> subset(m - 1);
  auto process = [&](const std::vector<std::size_t>& rows) {
    IntMatrix sub = l.basis.select_rows(rows);
    IntMatrix ker = kernel_basis(sub);
    if (ker.rows() != 1) return;  // rows not independent
    IntVec u = ker.row(0);
    IntVec c = l.apply(u);
    // canonical sign: first nonzero coordinate positive
    for (const Int& ci : c) {
      if (ci == 0) continue;
      if (ci < 0) {
        for (Int& x : u) x = -x;
        for (Int& x : c) x = -x;
      }
      break;
    }
    seen.emplace(std::move(c), std::move(u));
  };
  if (m == 1) {
    process({});
  } else {
    for (std::size_t i = 0; i < m - 1; ++i) subset[i] = i;
    while (true) {
      process(subset);
      std::size_t i = m - 1;
      while (i > 0 && subset[i - 1] == n - (m - 1) + (i - 1)) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < m - 1; ++j) subset[j] = subset[j - 1] + 1;
    }
  }

  // Support-minimality filter; redundant for unimodular lattices but kept
  // as a self-check.
  std::vector<Circuit> out;
  for (const auto& [c, u] : seen) {
    std::vector<std::size_t> supp = support_of(c);
    bool minimal = true;
    for (const auto& [c2, u2] : seen) {
      if (c2 == c) continue;
      std::vector<std::size_t> supp2 = support_of(c2);
      if (supp2.size() < supp.size() && subset_of(supp2, supp)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(Circuit{LatticeVector{c, u}, supp});
  }
  return out;
}

std::vector<Binomial> lawrence_generators(const Lattice& l) {
  std::vector<Binomial> out;
  for (const Circuit& c : circuits(l)) {
    std::vector<int> cp(l.n, 0), cm(l.n, 0);
    for (std::size_t i = 0; i < l.n; ++i) {
      int s = sign_of(c.vec.coords[i]);
      if (s > 0) cp[i] = 1;
      if (s < 0) cm[i] = 1;
    }
    Binomial b;
    b.plus = Monomial(cp, cm);
    b.minus = Monomial(cm, cp);
    out.push_back(std::move(b));
  }
  return out;
}

std::optional<IntVec> member_preimage(const Lattice& l, const IntVec& v) {
  return integral_preimage(l.basis, v);
}

IntMatrix canonical_basis(const Lattice& l) {
  IntMatrix h = hermite_normal_form(l.basis.transposed()).h;
  std::vector<std::size_t> nonzero;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h(i, j) != 0) {
        nonzero.push_back(i);
        break;
      }
  return h.select_rows(nonzero);
}

}  // namespace lawrence
