#include "lawrence/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

#include "lawrence/errors.hpp"

namespace lawrence {

bool sv_canonical_less(const SignVector& a, const SignVector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = sv_order_rank(a[i]), rb = sv_order_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

SignVector sv_negate(const SignVector& s) {
  SignVector t = s;
  for (int& v : t) v = -v;
  return t;
}

bool sv_conformal_below(const SignVector& below, const SignVector& above) {
  assert(below.size() == above.size());
  for (std::size_t i = 0; i < below.size(); ++i)
    if (below[i] != 0 && below[i] != above[i]) return false;
  return true;
}

std::vector<std::size_t> FaceDiagram::counts_by_dim() const {
  std::vector<std::size_t> c(m + 1, 0);
  for (const Covector& f : faces) c[f.dim]++;
  return c;
}

std::vector<std::size_t> QuotientComplex::f_vector() const {
  std::vector<std::size_t> c(m + 1, 0);
  for (const QuotientCell& q : cells) c[q.dim]++;
  return c;
}

namespace {

SignVector signs_of_image(const Lattice& l, const RatVec& x) {
  SignVector sv(l.n, 0);
  for (std::size_t i = 0; i < l.n; ++i) {
    Rat v = 0;
    for (std::size_t j = 0; j < l.m; ++j) v += Rat(l.basis(i, j)) * x[j];
    sv[i] = sign_of(v);
  }
  return sv;
}

int dim_of_sign_vector(const Lattice& l, const SignVector& sv) {
  std::vector<std::size_t> zero;
  for (std::size_t i = 0; i < l.n; ++i)
    if (sv[i] == 0) zero.push_back(i);
  return static_cast<int>(l.m - rational_rank(l.basis.select_rows(zero)));
}

void finalize_diagram(const Lattice& l, std::vector<Covector> faces,
                      FaceDiagram& out) {
  std::sort(faces.begin(), faces.end(), [](const Covector& a, const Covector& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return sv_canonical_less(a.sv, b.sv);
  });
  out.n = l.n;
  out.m = l.m;
  out.faces = std::move(faces);
  out.dim_offset.assign(l.m + 2, 0);
  for (std::size_t i = 0; i < out.faces.size(); ++i)
    out.index.emplace(out.faces[i].sv, i);
  for (const Covector& f : out.faces) out.dim_offset[f.dim + 1]++;
  for (std::size_t k = 1; k < out.dim_offset.size(); ++k)
    out.dim_offset[k] += out.dim_offset[k - 1];
  out.facets_of.assign(out.faces.size(), {});
  for (int d = 1; d <= static_cast<int>(l.m); ++d) {
    for (std::size_t i = out.dim_offset[d]; i < out.dim_offset[d + 1]; ++i)
      for (std::size_t j = out.dim_offset[d - 1]; j < out.dim_offset[d]; ++j)
        if (sv_conformal_below(out.faces[j].sv, out.faces[i].sv))
          out.facets_of[i].push_back(j);
  }
}

// Breadth-first search upward through the face lattice: from each covector,
// every cover arises from a corank-one flat of its zero set and a side.
void bfs_enumerate(const Lattice& l, const EnumerationOptions& opts,
                   std::vector<Covector>& out) {
  const std::size_t n = l.n, m = l.m;
  std::map<SignVector, RatVec> seen;
  std::deque<SignVector> queue;
  SignVector zero_sv(n, 0);
  seen.emplace(zero_sv, RatVec(m, Rat(0)));
  queue.push_back(zero_sv);

  while (!queue.empty()) {
    SignVector s = queue.front();
    queue.pop_front();
    RatVec x = seen.at(s);
    std::vector<std::size_t> zset;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i] == 0) zset.push_back(i);
    std::size_t r = rational_rank(l.basis.select_rows(zset));
    if (r == 0) continue;  // top-dimensional face

    // Corank-one flats: closures of (r-1)-subsets of the zero set.
    std::set<std::vector<std::size_t>> flats;
    std::vector<std::size_t> subset(r - 1);
    auto close_and_insert = [&](const std::vector<std::size_t>& rows) {
      IntMatrix sub = l.basis.select_rows(rows);
      if (rational_rank(sub) != r - 1) return;
      std::vector<std::size_t> closure;
      for (std::size_t j : zset) {
        IntMatrix ext(sub.rows() + 1, l.m);
        for (std::size_t a = 0; a < sub.rows(); ++a)
          for (std::size_t c = 0; c < l.m; ++c) ext(a, c) = sub(a, c);
        for (std::size_t c = 0; c < l.m; ++c) ext(sub.rows(), c) = l.basis(j, c);
        if (rational_rank(ext) == r - 1) closure.push_back(j);
      }
      flats.insert(closure);
    };
    if (r == 1) {
      close_and_insert({});
    } else {
      std::vector<std::size_t> pick(r - 1);
      for (std::size_t i = 0; i < r - 1; ++i) pick[i] = i;
      while (true) {
        std::vector<std::size_t> rows(r - 1);
        for (std::size_t i = 0; i < r - 1; ++i) rows[i] = zset[pick[i]];
        close_and_insert(rows);
        std::size_t i = r - 1;
        while (i > 0 && pick[i - 1] == zset.size() - (r - 1) + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < r - 1; ++j) pick[j] = pick[j - 1] + 1;
      }
    }

    for (const std::vector<std::size_t>& flat : flats) {
      IntMatrix tangent = kernel_basis(l.basis.select_rows(flat));
      // Direction transverse to the current face inside the flat's span.
      IntVec w;
      for (std::size_t row = 0; row < tangent.rows(); ++row) {
        IntVec cand = tangent.row(row);
        bool transverse = false;
        for (std::size_t j : zset)
          if (dot(l.basis_row(j), cand) != 0) { transverse = true; break; }
        if (transverse) { w = cand; break; }
      }
      assert(!w.empty());
      // Step size keeping every nonzero coordinate's sign.
      Rat eps = 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (s[i] == 0) continue;
        Int bw = dot(l.basis_row(i), w);
        if (bw == 0) continue;
        Rat bx = 0;
        for (std::size_t j = 0; j < m; ++j) bx += Rat(l.basis(i, j)) * x[j];
        Rat bound = abs(bx) / (2 * Rat(abs(bw)));
        if (bound < eps) eps = bound;
      }
      for (int sigma : {1, -1}) {
        SignVector t = s;
        for (std::size_t j : zset) {
          Int bw = dot(l.basis_row(j), w);
          int sgn = sigma * sign_of(bw);
          bool in_flat =
              std::binary_search(flat.begin(), flat.end(), j);
          assert(in_flat == (sgn == 0));
          t[j] = in_flat ? 0 : sgn;
        }
        if (seen.count(t)) continue;
        RatVec xt = x;
        for (std::size_t j = 0; j < m; ++j) xt[j] += Rat(sigma) * eps * Rat(w[j]);
        assert(signs_of_image(l, xt) == t);
        if (seen.size() >= opts.max_faces) {
          std::ostringstream os;
          os << "face cap exceeded: more than " << opts.max_faces
             << " covectors";
          throw CapExceededError(os.str());
        }
        seen.emplace(t, xt);
        queue.push_back(t);
      }
    }
  }

  for (auto& [sv, witness] : seen) {
    Covector c;
    c.sv = sv;
    c.dim = dim_of_sign_vector(l, sv);
    c.witness = witness;
    out.push_back(std::move(c));
  }
}

// 3^n scan with exact LP feasibility; the strict inequalities are handled
// by maximizing a common slack bounded by 1.
void brute_enumerate(const Lattice& l, const EnumerationOptions& opts,
                     std::vector<Covector>& out) {
  const std::size_t n = l.n, m = l.m;
  if (n > 12)
    throw CapExceededError("brute-force covector scan limited to n <= 12");
  SignVector sv(n, 0);
  std::size_t found = 0;
  auto feasible = [&](const SignVector& s) -> std::optional<RatVec> {
    std::vector<RatVec> rows;
    RatVec rhs;
    // variables (x_1..x_m, t)
    for (std::size_t i = 0; i < n; ++i) {
      RatVec row(m + 1, Rat(0));
      for (std::size_t j = 0; j < m; ++j) row[j] = Rat(l.basis(i, j));
      if (s[i] > 0) {
        for (Rat& v : row) v = -v;
        row[m] = 1;  // t - b_i.x <= 0
        rows.push_back(row);
        rhs.push_back(Rat(0));
      } else if (s[i] < 0) {
        row[m] = 1;  // b_i.x + t <= 0
        rows.push_back(row);
        rhs.push_back(Rat(0));
      } else {
        RatVec neg = row;
        for (Rat& v : neg) v = -v;
        rows.push_back(row);
        rhs.push_back(Rat(0));
        rows.push_back(neg);
        rhs.push_back(Rat(0));
      }
    }
    RatVec cap(m + 1, Rat(0));
    cap[m] = 1;
    rows.push_back(cap);
    rhs.push_back(Rat(1));  // t <= 1
    RatVec obj(m + 1, Rat(0));
    obj[m] = 1;
    LpResult res = lp_maximize(rows, rhs, obj);
    if (res.status != LpStatus::kOptimal || res.value <= 0) return std::nullopt;
    return RatVec(res.x.begin(), res.x.begin() + m);
  };
  while (true) {
    if (auto witness = feasible(sv)) {
      if (++found > opts.max_faces)
        throw CapExceededError("face cap exceeded in brute-force scan");
      Covector c;
      c.sv = sv;
      c.dim = dim_of_sign_vector(l, sv);
      c.witness = *witness;
      out.push_back(std::move(c));
    }
    std::size_t i = 0;
    while (i < n) {
      // cycle each coordinate through 0, +1, -1
      sv[i] = sv[i] == 0 ? 1 : (sv[i] == 1 ? -1 : 0);
      if (sv[i] != 0) break;
      ++i;
    }
    if (i == n) break;
  }
}

}  // namespace

FaceDiagram enumerate_covectors(const Lattice& l,
                                const EnumerationOptions& opts) {
  require_unimodular(l);
  std::vector<Covector> faces;
  if (opts.brute_force)
    brute_enumerate(l, opts, faces);
  else
    bfs_enumerate(l, opts, faces);
  FaceDiagram out;
  finalize_diagram(l, std::move(faces), out);
  return out;
}

std::vector<IntVec> lattice_points_in_box(const Lattice& l,
                                          const IntVec& lower,
                                          const IntVec& upper) {
  const std::size_t n = l.n, m = l.m;
  std::vector<RatVec> rows;
  RatVec rhs;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = Rat(l.basis(i, j));
    rows.push_back(row);
    rhs.push_back(Rat(upper[i]));
    for (Rat& v : row) v = -v;
    rows.push_back(row);
    rhs.push_back(Rat(-lower[i]));
  }
  IntVec lo(m), hi(m);
  for (std::size_t j = 0; j < m; ++j) {
    RatVec obj(m, Rat(0));
    obj[j] = 1;
    LpResult up = lp_maximize(rows, rhs, obj);
    if (up.status == LpStatus::kInfeasible) return {};
    if (up.status != LpStatus::kOptimal)
      throw std::logic_error("box polytope is unbounded");
    obj[j] = -1;
    LpResult down = lp_maximize(rows, rhs, obj);
    assert(down.status == LpStatus::kOptimal);
    hi[j] = floor_div(numerator(up.value), denominator(up.value));
    Rat mn = -down.value;            // exact minimum of x_j
    Rat neg = -mn;
    lo[j] = -floor_div(numerator(neg), denominator(neg));  // ceil(mn)
  }
  std::vector<IntVec> points;
  IntVec u = lo;
  while (true) {
    IntVec img = l.apply(u);
    bool inside = true;
    for (std::size_t i = 0; i < n && inside; ++i)
      inside = lower[i] <= img[i] && img[i] <= upper[i];
    if (inside) points.push_back(u);
    std::size_t j = 0;
    while (j < m) {
      if (u[j] < hi[j]) {
        ++u[j];
        break;
      }
      u[j] = lo[j];
      ++j;
    }
    if (j == m) break;
  }
  std::sort(points.begin(), points.end());
  return points;
}

QuotientComplex quotient_cells(const Lattice& l, const FaceDiagram& faces) {
  QuotientComplex out;
  out.n = l.n;
  out.m = l.m;
  std::set<SignVector> assigned;
  for (const Covector& f : faces.faces) {
    if (assigned.count(f.sv)) continue;
    // First unassigned covector in canonical order is the orbit minimum.
    IntVec lowv(l.n), upv(l.n);
    for (std::size_t i = 0; i < l.n; ++i) {
      lowv[i] = f.sv[i] < 0 ? -1 : 0;
      upv[i] = f.sv[i] > 0 ? 1 : 0;
    }
    std::vector<IntVec> verts = lattice_points_in_box(l, lowv, upv);
    std::set<SignVector> orbit;
    for (const IntVec& u : verts) {
      IntVec img = l.apply(u);
      SignVector t = f.sv;
      for (std::size_t i = 0; i < l.n; ++i)
        if (img[i] != 0) t[i] = -t[i];
      assert(faces.index.count(t));
      orbit.insert(std::move(t));
    }
    assert(orbit.size() == verts.size());
    QuotientCell cell;
    cell.rep = f.sv;
    cell.dim = f.dim;
    cell.label_x.assign(l.n, 0);
    cell.label_y.assign(l.n, 0);
    for (std::size_t i = 0; i < l.n; ++i) {
      cell.label_x[i] = f.sv[i] > 0 ? 1 : 0;
      cell.label_y[i] = f.sv[i] < 0 ? 1 : 0;
    }
    cell.orbit_size = verts.size();
    std::size_t cell_idx = out.cells.size();
    out.cells.push_back(std::move(cell));
    out.cell_vertices.push_back(std::move(verts));
    for (const SignVector& t : orbit) {
      out.cell_of_covector.emplace(t, cell_idx);
      assigned.insert(t);
    }
  }
  out.dim_offset.assign(l.m + 2, 0);
  for (const QuotientCell& c : out.cells) out.dim_offset[c.dim + 1]++;
  for (std::size_t k = 1; k < out.dim_offset.size(); ++k)
    out.dim_offset[k] += out.dim_offset[k - 1];
  // Orbit sizes account for every covector, dimension by dimension.
  std::vector<std::size_t> check(l.m + 1, 0);
  for (const QuotientCell& c : out.cells) check[c.dim] += c.orbit_size;
  assert(check == faces.counts_by_dim());
  return out;
}

QuotientComplex quotient_cells(const Lattice& l) {
  return quotient_cells(l, enumerate_covectors(l));
}

CellGeometry cell_geometry(const Lattice& l, const QuotientCell& cell) {
  CellGeometry g;
  IntVec lowv(l.n), upv(l.n);
  for (std::size_t i = 0; i < l.n; ++i) {
    lowv[i] = -Int(cell.label_y[i]);
    upv[i] = Int(cell.label_x[i]);
  }
  g.vertices = lattice_points_in_box(l, lowv, upv);
  std::vector<char> exact(l.n, 0);
  for (std::size_t i = 0; i < l.n; ++i) exact[i] = cell.rep[i] == 0 ? 1 : 0;
  g.tangent_basis = tangent_basis_for(l, exact);
  return g;
}

IntMatrix tangent_basis_for(const Lattice& l, const std::vector<char>& exact) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < l.n; ++i)
    if (exact[i]) rows.push_back(i);
  return kernel_basis(l.basis.select_rows(rows));
}

AffineFace make_affine_face(const Lattice& l, std::vector<IntVec> vertices) {
  assert(!vertices.empty());
  std::sort(vertices.begin(), vertices.end());
  AffineFace f;
  f.beta_lo.assign(l.n, Int(0));
  f.beta_exact.assign(l.n, 1);
  IntVec lo = l.apply(vertices[0]);
  IntVec hi = lo;
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    IntVec img = l.apply(vertices[k]);
    for (std::size_t i = 0; i < l.n; ++i) {
      if (img[i] < lo[i]) lo[i] = img[i];
      if (img[i] > hi[i]) hi[i] = img[i];
    }
  }
  for (std::size_t i = 0; i < l.n; ++i) {
    assert(hi[i] - lo[i] <= 1);
    f.beta_lo[i] = lo[i];
    f.beta_exact[i] = hi[i] == lo[i] ? 1 : 0;
  }
  if (vertices.size() == 1) {
    f.dim = 0;
  } else {
    IntMatrix diff(vertices.size() - 1, l.m);
    for (std::size_t k = 1; k < vertices.size(); ++k)
      for (std::size_t j = 0; j < l.m; ++j)
        diff(k - 1, j) = vertices[k][j] - vertices[0][j];
    f.dim = static_cast<int>(rational_rank(diff));
  }
  f.vertices = std::move(vertices);
  return f;
}

LaurentLabel laurent_label(const AffineFace& f) {
  LaurentLabel lab;
  const std::size_t n = f.beta_lo.size();
  lab.x.resize(n);
  lab.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    lab.x[i] = f.beta_lo[i] + (f.beta_exact[i] ? 0 : 1);  // ceil
    lab.y[i] = -f.beta_lo[i];                             // -floor
  }
  return lab;
}

std::vector<FacetData> geometric_facets(const Lattice& l,
                                        const AffineFace& parent) {
  assert(parent.dim >= 1);
  std::vector<FacetData> out;
  std::set<std::vector<IntVec>> seen;
  LaurentLabel parent_label = laurent_label(parent);
  for (std::size_t i = 0; i < l.n; ++i) {
    if (parent.beta_exact[i]) continue;
    for (int side = 0; side < 2; ++side) {
      Int bound = parent.beta_lo[i] + side;
      std::vector<IntVec> w;
      for (const IntVec& v : parent.vertices)
        if (dot(l.basis_row(i), v) == bound) w.push_back(v);
      assert(!w.empty() && w.size() < parent.vertices.size());
      AffineFace facet = make_affine_face(l, std::move(w));
      if (facet.dim != parent.dim - 1) continue;
      if (!seen.insert(facet.vertices).second) continue;
      LaurentLabel flab = laurent_label(facet);
      std::vector<int> qx(l.n), qy(l.n);
      for (std::size_t k = 0; k < l.n; ++k) {
        Int dx = parent_label.x[k] - flab.x[k];
        Int dy = parent_label.y[k] - flab.y[k];
        assert(dx >= 0 && dy >= 0);
        qx[k] = static_cast<int>(dx);
        qy[k] = static_cast<int>(dy);
      }
      FacetData fd;
      fd.face = std::move(facet);
      fd.quotient = Monomial(std::move(qx), std::move(qy));
      fd.tight_coord = i;
      fd.tight_upper = side == 1;
      out.push_back(std::move(fd));
    }
  }
  return out;
}

int incidence_sign(const Lattice& l, const IntMatrix& parent_tangent,
                   const IntMatrix& facet_tangent, const FacetData& facet) {
  const std::size_t k = parent_tangent.rows();
  assert(facet_tangent.rows() + 1 == k);
  // Outward direction o with b_i . o = +1 (upper bound tight) or -1 (lower),
  // expressed in the parent's basis as a unit coordinate vector.
  IntVec bi = l.basis_row(facet.tight_coord);
  std::size_t pivot = k;
  Int coeff = 0;
  for (std::size_t r = 0; r < k; ++r) {
    Int c = dot(bi, parent_tangent.row(r));
    if (c != 0) {
      pivot = r;
      coeff = c;
      break;
    }
  }
  assert(pivot < k);
  Rat target = facet.tight_upper ? 1 : -1;
  RatMatrix mat(k, k);
  mat(0, pivot) = target / Rat(coeff);
  // Facet basis vectors expressed in the parent's basis.
  RatMatrix tt = to_rational(parent_tangent.transposed());
  for (std::size_t r = 0; r + 1 < k; ++r) {
    RatVec g(l.m);
    for (std::size_t j = 0; j < l.m; ++j) g[j] = Rat(facet_tangent(r, j));
    auto sol = solve_linear(tt, g);
    assert(sol.has_value());
    for (std::size_t j = 0; j < k; ++j) mat(r + 1, j) = (*sol)[j];
  }
  // Sign of the determinant via elimination.
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && mat(p, c) == 0) ++p;
    if (p == k) return 0;  // degenerate; callers treat as error
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
  return sign;
}

SignVector covector_at_vertex(const Lattice& l, const AffineFace& face,
                              const IntVec& w) {
  IntVec img = l.apply(w);
  SignVector sv(l.n, 0);
  for (std::size_t i = 0; i < l.n; ++i) {
    if (face.beta_exact[i]) {
      assert(img[i] == face.beta_lo[i]);
      sv[i] = 0;
    } else if (img[i] == face.beta_lo[i]) {
      sv[i] = 1;
    } else {
      assert(img[i] == face.beta_lo[i] + 1);
      sv[i] = -1;
    }
  }
  return sv;
}

std::vector<CellFacetRef> cell_facets(const Lattice& l,
                                      const QuotientComplex& qc,
                                      std::size_t cell_index) {
  const QuotientCell& cell = qc.cells[cell_index];
  assert(cell.dim >= 1);
  AffineFace aff = make_affine_face(l, qc.cell_vertices[cell_index]);
  for (std::size_t i = 0; i < l.n; ++i)
    assert(aff.beta_exact[i] == (cell.rep[i] == 0));  // canonical position
  IntMatrix parent_tangent = tangent_basis_for(l, aff.beta_exact);
  std::vector<CellFacetRef> out;
  for (const FacetData& fd : geometric_facets(l, aff)) {
    CellFacetRef ref;
    std::size_t target = qc.cell_of_covector.at(
        covector_at_vertex(l, fd.face, fd.face.vertices.front()));
    const SignVector& rep = qc.cells[target].rep;
    bool found = false;
    for (const IntVec& w : fd.face.vertices)
      if (covector_at_vertex(l, fd.face, w) == rep) {
        ref.translation = w;
        found = true;
        break;
      }
    assert(found);
    (void)found;
    ref.facet_cell = target;
    ref.quotient = fd.quotient;
    IntMatrix facet_tangent = tangent_basis_for(l, fd.face.beta_exact);
    ref.orientation = incidence_sign(l, parent_tangent, facet_tangent, fd);
    assert(ref.orientation != 0);
    out.push_back(std::move(ref));
  }
  return out;
}

}  // namespace lawrence
