#include "lawrence/fiber.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace lawrence {

namespace {

int to_int(const Int& v) { return static_cast<int>(v.convert_to<long>()); }

Monomial point_monomial(const Lattice& l, const IntVec& u, const IntVec& a,
                        const IntVec& b) {
  IntVec img = l.apply(u);
  std::vector<int> x(l.n), y(l.n);
  for (std::size_t i = 0; i < l.n; ++i) {
    x[i] = to_int(a[i] - img[i]);
    y[i] = to_int(b[i] + img[i]);
    assert(x[i] >= 0 && y[i] >= 0);
  }
  return Monomial(std::move(x), std::move(y));
}

}  // namespace

Monomial fiber_label(const AffineFace& f, const IntVec& a, const IntVec& b) {
  const std::size_t n = f.beta_lo.size();
  std::vector<int> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int ceil = f.beta_lo[i] + (f.beta_exact[i] ? 0 : 1);
    x[i] = to_int(a[i] - f.beta_lo[i]);  // a - floor
    y[i] = to_int(b[i] + ceil);
    assert(x[i] >= 0 && y[i] >= 0);
  }
  return Monomial(std::move(x), std::move(y));
}

std::vector<FiberPoint> fiber_points(const Lattice& l, const IntVec& a,
                                     const IntVec& b) {
  require_unimodular(l);
  IntVec lower(l.n), upper(l.n);
  for (std::size_t i = 0; i < l.n; ++i) {
    lower[i] = -b[i];
    upper[i] = a[i];
  }
  std::vector<FiberPoint> out;
  for (IntVec& u : lattice_points_in_box(l, lower, upper)) {
    FiberPoint p;
    p.monomial = point_monomial(l, u, a, b);
    p.point = std::move(u);
    out.push_back(std::move(p));
  }
  return out;
}

FiberComplex fiber_resolution(const Lattice& l, const IntVec& a,
                              const IntVec& b,
                              const EnumerationOptions& opts) {
  FiberComplex fc;
  fc.a = a;
  fc.b = b;
  fc.points = fiber_points(l, a, b);

  FaceDiagram fd = enumerate_covectors(l, opts);
  // Vertex sets of the cells at the origin, per covector.
  std::vector<std::vector<IntVec>> cell_verts(fd.faces.size());
  for (std::size_t i = 0; i < fd.faces.size(); ++i) {
    IntVec lo(l.n), hi(l.n);
    for (std::size_t k = 0; k < l.n; ++k) {
      lo[k] = fd.faces[i].sv[k] < 0 ? -1 : 0;
      hi[k] = fd.faces[i].sv[k] > 0 ? 1 : 0;
    }
    cell_verts[i] = lattice_points_in_box(l, lo, hi);
  }

  // Faces of the arrangement inside the box: each arises as a lattice point
  // plus a central face that fits coordinatewise; deduplicate by vertex set.
  std::map<std::vector<IntVec>, int> seen;  // vertices -> dim
  for (const FiberPoint& p : fc.points) {
    IntVec img = l.apply(p.point);
    for (std::size_t i = 0; i < fd.faces.size(); ++i) {
      const SignVector& s = fd.faces[i].sv;
      bool fits = true;
      for (std::size_t k = 0; k < l.n && fits; ++k) {
        if (s[k] > 0)
          fits = img[k] + 1 <= a[k];
        else if (s[k] < 0)
          fits = img[k] - 1 >= -b[k];
      }
      if (!fits) continue;
      std::vector<IntVec> verts;
      verts.reserve(cell_verts[i].size());
      for (const IntVec& u : cell_verts[i]) {
        IntVec w(l.m);
        for (std::size_t j = 0; j < l.m; ++j) w[j] = p.point[j] + u[j];
        verts.push_back(std::move(w));
      }
      std::sort(verts.begin(), verts.end());
      seen.emplace(std::move(verts), fd.faces[i].dim);
    }
  }

  int top = 0;
  for (const auto& [verts, dim] : seen) top = std::max(top, dim);
  fc.faces.assign(top + 1, {});
  for (const auto& [verts, dim] : seen)
    fc.faces[dim].push_back(make_affine_face(l, verts));

  fc.chain.n = l.n;
  fc.chain.m = top;
  fc.chain.labels.assign(top + 1, {});
  std::vector<std::map<std::vector<IntVec>, std::size_t>> index(top + 1);
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < fc.faces[d].size(); ++i) {
      index[d].emplace(fc.faces[d][i].vertices, i);
      fc.chain.labels[d].push_back(fiber_label(fc.faces[d][i], a, b));
    }
  }

  std::map<std::vector<char>, IntMatrix> tangents;
  auto tangent = [&](const std::vector<char>& exact) -> const IntMatrix& {
    auto it = tangents.find(exact);
    if (it == tangents.end())
      it = tangents.emplace(exact, tangent_basis_for(l, exact)).first;
    return it->second;
  };

  fc.chain.boundary.clear();
  for (int d = 1; d <= top; ++d) {
    BoundaryMatrix bm(fc.faces[d - 1].size(), fc.faces[d].size());
    for (std::size_t c = 0; c < fc.faces[d].size(); ++c) {
      const AffineFace& parent = fc.faces[d][c];
      const IntMatrix& pt = tangent(parent.beta_exact);
      for (const FacetData& fdata : geometric_facets(l, parent)) {
        auto it = index[d - 1].find(fdata.face.vertices);
        assert(it != index[d - 1].end());
        int eps = incidence_sign(l, pt, tangent(fdata.face.beta_exact), fdata);
        assert(eps != 0);
        // Fiber labels swap the roles of the two variable blocks relative
        // to the Laurent labels, so the quotient swaps too.
        Monomial q(fdata.quotient.y, fdata.quotient.x);
        bm.add_term(c, it->second, eps, q);
      }
    }
    fc.chain.boundary.push_back(std::move(bm));
  }
  return fc;
}

bool fiber_is_contractible(const FiberComplex& fc) {
  std::vector<std::size_t> sizes = fc.chain.ranks();
  for (bool exact : {false, true}) {
    std::vector<std::size_t> h =
        homology_ranks_at_one(fc.chain.boundary, sizes, exact);
    bool ok = h[0] == 1;
    for (std::size_t i = 1; i < h.size(); ++i) ok = ok && h[i] == 0;
    if (ok) return true;  // mod-p ranks never undercount homology
  }
  return false;
}

}  // namespace lawrence
