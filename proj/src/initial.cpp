#include "lawrence/initial.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "lawrence/errors.hpp"

namespace lawrence {

namespace {

Monomial cone_label(const SignVector& sv) {
  std::vector<int> x(sv.size(), 0), y(sv.size(), 0);
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (sv[i] > 0) x[i] = 1;
    if (sv[i] < 0) y[i] = 1;
  }
  return Monomial(std::move(x), std::move(y));
}

// Orientation data for the slice of a positive cone by the weight
// hyperplane: a rational basis of span(tangent) meet omega-perp, together
// with the sign relating (omega direction, basis) to the cone's own
// tangent basis.
struct SliceFrame {
  std::vector<RatVec> basis;
  int orient = 1;
};

SliceFrame slice_frame(const Lattice& l, const IntVec& omega,
                       const SignVector& sv) {
  std::vector<char> exact(l.n, 0);
  for (std::size_t i = 0; i < l.n; ++i) exact[i] = sv[i] == 0 ? 1 : 0;
  IntMatrix tangent = tangent_basis_for(l, exact);
  const std::size_t d = tangent.rows();
  std::size_t pivot = d;
  Int coeff = 0;
  for (std::size_t r = 0; r < d; ++r) {
    Int c = dot(omega, tangent.row(r));
    if (c != 0) {
      pivot = r;
      coeff = c;
      break;
    }
  }
  assert(pivot < d);
  SliceFrame frame;
  for (std::size_t r = 0; r < d; ++r) {
    if (r == pivot) continue;
    Int c = dot(omega, tangent.row(r));
    RatVec g(l.m);
    for (std::size_t j = 0; j < l.m; ++j)
      g[j] = Rat(tangent(r, j)) - Rat(c) * Rat(tangent(pivot, j)) / Rat(coeff);
    frame.basis.push_back(std::move(g));
  }
  // Expressing (omega direction, basis) in the tangent basis moves the
  // pivot column to the front and scales it by 1/coeff.
  frame.orient = (pivot % 2 == 0 ? 1 : -1) * sign_of(coeff);
  return frame;
}

int slice_incidence(const Lattice& l, const SliceFrame& parent,
                    const SliceFrame& facet, const SignVector& parent_sv,
                    const SignVector& facet_sv) {
  const std::size_t k = parent.basis.size();  // = dim(parent slice)
  assert(facet.basis.size() + 1 == k);
  // First coordinate whose hyperplane cuts out the facet.
  std::size_t cut = l.n;
  for (std::size_t i = 0; i < l.n; ++i)
    if (parent_sv[i] != 0 && facet_sv[i] == 0) {
      cut = i;
      break;
    }
  assert(cut < l.n);
  IntVec bi = l.basis_row(cut);
  auto pair_with = [&](const RatVec& v) {
    Rat s = 0;
    for (std::size_t j = 0; j < l.m; ++j) s += Rat(bi[j]) * v[j];
    return s;
  };
  RatMatrix mat(k, k);
  // Outward direction: away from the parent's side of the cut hyperplane.
  std::size_t piv = k;
  for (std::size_t r = 0; r < k; ++r)
    if (pair_with(parent.basis[r]) != 0) {
      piv = r;
      break;
    }
  assert(piv < k);
  mat(0, piv) = Rat(-parent_sv[cut]) / pair_with(parent.basis[piv]);
  // Facet basis expressed over the parent's slice basis.
  RatMatrix cols(l.m, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < l.m; ++j) cols(j, r) = parent.basis[r][j];
  for (std::size_t r = 0; r + 1 < k; ++r) {
    auto sol = solve_linear(cols, facet.basis[r]);
    assert(sol.has_value());
    for (std::size_t j = 0; j < k; ++j) mat(r + 1, j) = (*sol)[j];
  }
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && mat(p, c) == 0) ++p;
    if (p == k) return 0;
    if (p != c) {
      mat.swap_rows(p, c);
      sign = -sign;
    }
    if (mat(c, c) < 0) sign = -sign;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (mat(r, c) == 0) continue;
      Rat f = mat(r, c) / mat(c, c);
      for (std::size_t j = c; j < k; ++j) mat(r, j) -= f * mat(c, j);
    }
  }
  return sign * parent.orient * (facet.basis.empty() ? 1 : facet.orient);
}

}  // namespace

WeightOrder make_weight_order(const Lattice& l, const IntVec& w2n) {
  if (w2n.size() != 2 * l.n)
    throw std::invalid_argument("weight vector must have length 2n");
  WeightOrder w;
  w.wx.assign(w2n.begin(), w2n.begin() + l.n);
  w.wy.assign(w2n.begin() + l.n, w2n.end());
  w.omega.assign(l.m, Int(0));
  for (std::size_t j = 0; j < l.m; ++j)
    for (std::size_t i = 0; i < l.n; ++i)
      w.omega[j] += (w.wx[i] - w.wy[i]) * l.basis(i, j);
  for (const Circuit& c : circuits(l)) {
    if (dot(w.omega, c.vec.preimage) == 0) {
      std::ostringstream os;
      os << "weight is not generic: zero weight on circuit (";
      for (std::size_t i = 0; i < c.vec.coords.size(); ++i)
        os << (i ? "," : "") << c.vec.coords[i];
      os << ")";
      throw NonGenericWeightError(os.str());
    }
  }
  return w;
}

std::vector<Monomial> initial_terms(const Lattice& l, const WeightOrder& w) {
  std::vector<Monomial> out;
  for (const Circuit& c : circuits(l)) {
    int s = sign_of(dot(w.omega, c.vec.preimage));
    assert(s != 0);
    SignVector sv(l.n, 0);
    for (std::size_t i = 0; i < l.n; ++i)
      sv[i] = s * sign_of(c.vec.coords[i]);
    out.push_back(cone_label(sv));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PositiveCone> positive_cones(const Lattice& l,
                                         const WeightOrder& w,
                                         const EnumerationOptions& opts) {
  FaceDiagram fd = enumerate_covectors(l, opts);
  // Primitive generator of each ray, keyed by its sign vector.
  std::map<SignVector, IntVec> ray_gen;
  for (const Circuit& c : circuits(l)) {
    SignVector sv(l.n, 0);
    for (std::size_t i = 0; i < l.n; ++i) sv[i] = sign_of(c.vec.coords[i]);
    ray_gen.emplace(sv, c.vec.preimage);
    IntVec neg = c.vec.preimage;
    for (Int& v : neg) v = -v;
    ray_gen.emplace(sv_negate(sv), std::move(neg));
  }
  std::vector<PositiveCone> out;
  for (std::size_t i = fd.dim_offset[1]; i < fd.faces.size(); ++i) {
    const Covector& f = fd.faces[i];
    PositiveCone cone;
    cone.sv = f.sv;
    cone.dim = f.dim;
    bool positive = true;
    for (std::size_t r = fd.dim_offset[1]; r < fd.dim_offset[2]; ++r) {
      const SignVector& ray = fd.faces[r].sv;
      if (!sv_conformal_below(ray, f.sv)) continue;
      const IntVec& gen = ray_gen.at(ray);
      if (dot(w.omega, gen) <= 0) {
        positive = false;
        break;
      }
      cone.rays.push_back(gen);
    }
    if (positive) out.push_back(std::move(cone));
  }
  return out;
}

LabeledComplex initial_resolution(const Lattice& l, const WeightOrder& w,
                                  const EnumerationOptions& opts) {
  FaceDiagram fd = enumerate_covectors(l, opts);
  std::vector<PositiveCone> cones = positive_cones(l, w, opts);
  LabeledComplex c;
  c.n = l.n;
  c.m = l.m;
  c.labels.assign(l.m + 1, {});
  c.labels[0].push_back(Monomial::one(l.n));
  std::map<SignVector, std::size_t> index_in_dim;
  std::vector<std::vector<const PositiveCone*>> by_dim(l.m + 1);
  for (const PositiveCone& cone : cones) by_dim[cone.dim].push_back(&cone);
  for (std::size_t d = 1; d <= l.m; ++d) {
    std::sort(by_dim[d].begin(), by_dim[d].end(),
              [](const PositiveCone* a, const PositiveCone* b) {
                return sv_canonical_less(a->sv, b->sv);
              });
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) {
      index_in_dim.emplace(by_dim[d][i]->sv, i);
      c.labels[d].push_back(cone_label(by_dim[d][i]->sv));
    }
  }

  std::map<SignVector, SliceFrame> frames;
  auto frame = [&](const SignVector& sv) -> const SliceFrame& {
    auto it = frames.find(sv);
    if (it == frames.end())
      it = frames.emplace(sv, slice_frame(l, w.omega, sv)).first;
    return it->second;
  };

  c.boundary.clear();
  for (std::size_t d = 1; d <= l.m; ++d)
    c.boundary.emplace_back(c.labels[d - 1].size(), c.labels[d].size());
  // Degree 1: augmentation by the generator labels.
  for (std::size_t i = 0; i < by_dim[1].size(); ++i)
    c.boundary[0].add_term(i, 0, 1, cone_label(by_dim[1][i]->sv));
  for (std::size_t d = 2; d <= l.m; ++d) {
    for (std::size_t ci = 0; ci < by_dim[d].size(); ++ci) {
      const SignVector& sv = by_dim[d][ci]->sv;
      Monomial label = cone_label(sv);
      std::size_t face_idx = fd.index.at(sv);
      for (std::size_t sub : fd.facets_of[face_idx]) {
        const SignVector& tv = fd.faces[sub].sv;
        auto it = index_in_dim.find(tv);
        assert(it != index_in_dim.end());  // faces of positive cones are positive
        int eps = slice_incidence(l, frame(sv), frame(tv), sv, tv);
        assert(eps != 0);
        c.boundary[d - 1].add_term(ci, it->second, eps,
                                   label / cone_label(tv));
      }
    }
  }
  return c;
}

}  // namespace lawrence
