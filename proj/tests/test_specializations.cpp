#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "lawrence/errors.hpp"
#include "lawrence/fiber.hpp"
#include "lawrence/initial.hpp"
#include "lawrence/resolution.hpp"
#include "support.hpp"

using namespace lawrence;
using namespace testsupport;

namespace {

IntVec weights(std::initializer_list<long> vals) {
  IntVec out;
  for (long v : vals) out.push_back(Int(v));
  return out;
}

}  // namespace

TEST_CASE("initial terms for a weight with x1 heaviest, n = 3") {
  Lattice l = sum_zero_lattice(3);
  WeightOrder w = make_weight_order(l, weights({2, 1, 0, 0, 0, 0}));
  std::vector<Monomial> terms = initial_terms(l, w);
  std::set<std::string> strs;
  for (const Monomial& t : terms) {
    CHECK(t.is_squarefree());
    strs.insert(t.str());
  }
  CHECK(strs == std::set<std::string>{"x2*y3", "x1*y3", "x1*y2"});
}

TEST_CASE("non-generic weights are rejected with a circuit witness") {
  Lattice l = sum_zero_lattice(3);
  CHECK_THROWS_AS(make_weight_order(l, IntVec(6, Int(0))),
                  NonGenericWeightError);
  CHECK_THROWS_AS(make_weight_order(l, weights({1, 1, 0, 0, 0, 0})),
                  NonGenericWeightError);
  CHECK_THROWS_AS(make_weight_order(l, weights({1, 0})),
                  std::invalid_argument);
}

TEST_CASE("positive cone counts, n = 3") {
  Lattice l = sum_zero_lattice(3);
  WeightOrder w = make_weight_order(l, weights({2, 1, 0, 0, 0, 0}));
  std::vector<PositiveCone> cones = positive_cones(l, w);
  std::size_t d1 = 0, d2 = 0;
  for (const PositiveCone& c : cones) {
    if (c.dim == 1) ++d1;
    if (c.dim == 2) ++d2;
    for (const IntVec& ray : c.rays) CHECK(dot(w.omega, ray) > 0);
  }
  CHECK(d1 == 3);
  CHECK(d2 == 2);

  // reversing the weight gives the same counts by central symmetry
  WeightOrder rev = make_weight_order(l, weights({-2, -1, 0, 0, 0, 0}));
  CHECK(positive_cones(l, rev).size() == cones.size());

  // the two halves are disjoint and split the rays evenly
  std::set<SignVector> pos, neg;
  for (const PositiveCone& c : positive_cones(l, w)) pos.insert(c.sv);
  for (const PositiveCone& c : positive_cones(l, rev)) neg.insert(c.sv);
  for (const SignVector& s : pos) CHECK(neg.count(s) == 0);
  FaceDiagram fd = enumerate_covectors(l);
  for (std::size_t i = fd.dim_offset[1]; i < fd.dim_offset[2]; ++i)
    CHECK(pos.count(fd.faces[i].sv) + neg.count(fd.faces[i].sv) == 1);
}

TEST_CASE("initial resolution of the n = 3 minor ideal") {
  Lattice l = sum_zero_lattice(3);
  WeightOrder w = make_weight_order(l, weights({2, 1, 0, 0, 0, 0}));
  LabeledComplex c = initial_resolution(l, w);
  CHECK(c.ranks() == std::vector<std::size_t>{1, 3, 2});
  CHECK(check_d_squared(c));
  CHECK(complex_is_minimal(c));

  DenseEntries d1 = dense_boundary(c.boundary[0]);
  DenseEntries d2 = dense_boundary(c.boundary[1]);
  DenseEntries e1(1, std::vector<PolyEntry>(3));
  e1[0][0] = PolyEntry(1, var_x(3, 1) * var_y(3, 2));  // x2 y3
  e1[0][1] = PolyEntry(1, var_x(3, 0) * var_y(3, 2));  // x1 y3
  e1[0][2] = PolyEntry(1, var_x(3, 0) * var_y(3, 1));  // x1 y2
  DenseEntries e2(3, std::vector<PolyEntry>(2));
  e2[0][0] = PolyEntry(1, var_x(3, 0));   // x1
  e2[1][0] = PolyEntry(-1, var_x(3, 1));  // -x2
  e2[1][1] = PolyEntry(-1, var_y(3, 1));  // -y2
  e2[2][1] = PolyEntry(1, var_y(3, 2));   // y3
  CHECK(chain_pair_matches(d1, d2, e1, e2));

  // stability: same Betti numbers as the lattice resolution
  CHECK(c.ranks() == betti_numbers(l));
}

TEST_CASE("initial resolution of a rank-1 lattice") {
  Lattice l = from_image(IntMatrix{{Int(1)}, {Int(-1)}});
  WeightOrder w = make_weight_order(l, weights({1, 0, 0, 0}));
  LabeledComplex c = initial_resolution(l, w);
  CHECK(c.ranks() == std::vector<std::size_t>{1, 1});
  std::vector<Monomial> terms = initial_terms(l, w);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].str() == "x1*y2");
}

TEST_CASE("K4 barycentric subdivision from a vertex-1-heavy weight") {
  Lattice l = graphic_lattice(complete_graph(4));
  // omega = 100 e1 + 2 e2 + e3 via the edges (1,4), (2,4), (3,4)
  IntVec w2n(12, Int(0));
  w2n[2] = 100;
  w2n[4] = -2;
  w2n[5] = -1;
  WeightOrder w = make_weight_order(l, w2n);
  std::vector<PositiveCone> cones = positive_cones(l, w);
  std::vector<std::size_t> counts(4, 0);
  for (const PositiveCone& c : cones) counts[c.dim]++;
  CHECK(counts == std::vector<std::size_t>{0, 7, 12, 6});

  std::vector<Monomial> terms = initial_terms(l, w);
  CHECK(terms.size() == 7);
  // the cut at vertex 1 contributes x_e for its three outgoing edges
  Monomial star1 = var_x(6, 0) * var_x(6, 1) * var_x(6, 2);
  CHECK(std::count(terms.begin(), terms.end(), star1) == 1);

  LabeledComplex c = initial_resolution(l, w);
  CHECK(c.ranks() == std::vector<std::size_t>{1, 7, 12, 6});
  CHECK(check_d_squared(c));
  CHECK(complex_is_minimal(c));
  CHECK(c.ranks() == betti_numbers(l));
}

TEST_CASE("fiber points of the pentagon example") {
  Lattice l = sum_zero_lattice(3);
  IntVec a = weights({2, 1, 1}), b = weights({1, 1, 1});
  std::vector<FiberPoint> pts = fiber_points(l, a, b);
  REQUIRE(pts.size() == 8);
  std::set<std::string> got;
  for (const FiberPoint& p : pts) got.insert(p.monomial.str());
  std::set<std::string> expect{
      "x2^2*x3^2*y1^3",     "x1*x2*x3^2*y1^2*y2", "x1^2*x3^2*y1*y2^2",
      "x1*x2^2*x3*y1^2*y3", "x1^2*x2*x3*y1*y2*y3", "x1^3*x3*y2^2*y3",
      "x1^2*x2^2*y1*y3^2",  "x1^3*x2*y2*y3^2"};
  CHECK(got == expect);
}

TEST_CASE("fiber points, degenerate and rank-1 cases") {
  Lattice l = sum_zero_lattice(3);
  IntVec zero(3, Int(0));
  std::vector<FiberPoint> pts = fiber_points(l, zero, zero);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].monomial.is_one());

  // rank-1 oracle: direct enumeration over u in {-2..2}
  Lattice r1 = from_image(IntMatrix{{Int(1)}, {Int(-1)}});
  IntVec a = weights({1, 0}), b = weights({0, 1});
  std::set<std::string> oracle;
  for (int u = -2; u <= 2; ++u) {
    if (-0 > u || u > 1) continue;   // -b <= Bu <= a coordinatewise
    if (-1 > -u || -u > 0) continue;
    std::vector<int> ex{1 - u, 0 + u}, ey{0 + u, 1 - u};
    oracle.insert(Monomial(ex, ey).str());
  }
  REQUIRE(oracle == std::set<std::string>{"x1*y2", "x2*y1"});
  std::set<std::string> got;
  for (const FiberPoint& p : fiber_points(r1, a, b)) got.insert(p.monomial.str());
  CHECK(got == oracle);
}

TEST_CASE("pentagon fiber resolution") {
  Lattice l = sum_zero_lattice(3);
  FiberComplex fc =
      fiber_resolution(l, weights({2, 1, 1}), weights({1, 1, 1}));
  CHECK(fc.f_vector() == std::vector<std::size_t>{8, 14, 7});
  CHECK(check_d_squared(fc.chain));
  CHECK(fiber_is_contractible(fc));
  CHECK(entries_unit_free(fc.chain.boundary));
  // distinct faces carry distinct labels
  std::set<Monomial> labels;
  std::size_t count = 0;
  for (const auto& level : fc.chain.labels)
    for (const Monomial& m : level) {
      labels.insert(m);
      ++count;
    }
  CHECK(labels.size() == count);
}

TEST_CASE("pentagon contractibility certified by elementary collapses") {
  // Independent of the homology route: repeatedly remove free pairs (a face
  // with a unique proper coface) until a single vertex remains.
  Lattice l = sum_zero_lattice(3);
  FiberComplex fc =
      fiber_resolution(l, weights({2, 1, 1}), weights({1, 1, 1}));
  struct Cell {
    std::vector<IntVec> verts;
    int dim;
    bool alive = true;
  };
  std::vector<Cell> cells;
  for (std::size_t d = 0; d < fc.faces.size(); ++d)
    for (const AffineFace& f : fc.faces[d])
      cells.push_back({f.vertices, static_cast<int>(d), true});
  auto contains = [](const Cell& big, const Cell& small) {
    return small.dim < big.dim &&
           std::includes(big.verts.begin(), big.verts.end(),
                         small.verts.begin(), small.verts.end());
  };
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < cells.size() && !progress; ++i) {
      if (!cells[i].alive) continue;
      std::size_t coface = cells.size(), count = 0;
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (!cells[j].alive || j == i) continue;
        if (contains(cells[j], cells[i])) {
          coface = j;
          ++count;
        }
      }
      if (count == 1) {
        cells[i].alive = cells[coface].alive = false;
        progress = true;
      }
    }
  }
  std::size_t alive = 0;
  for (const Cell& c : cells) alive += c.alive;
  CHECK(alive == 1);  // fully collapsed to a point
}

TEST_CASE("fiber of a quotient-cell normal form is the cell itself") {
  Lattice l = sum_zero_lattice(3);
  QuotientComplex qc = quotient_cells(l);
  const QuotientCell& top = qc.cells[qc.dim_offset[2]];
  IntVec a(l.n), b(l.n);
  for (std::size_t i = 0; i < l.n; ++i) {
    a[i] = top.label_x[i];
    b[i] = top.label_y[i];
  }
  FiberComplex fc = fiber_resolution(l, a, b);
  const std::vector<std::size_t> f = fc.f_vector();
  CHECK(f[2] == 1);
  CellGeometry geo = cell_geometry(l, top);
  CHECK(fc.faces[2][0].vertices == geo.vertices);
}

TEST_CASE("subcomplex identity for fiber complexes") {
  // (Y_(a,b)) restricted to labels dividing x^c y^d is the fiber complex of
  // degree (min{b, c-a}, min{a, d-b}), identified by the antipodal map with
  // labels swapped between the variable blocks and shifted.
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> small(0, 2), extra(0, 2);
  for (const Lattice& l :
       {sum_zero_lattice(3), cographic_lattice(complete_graph(4))}) {
    for (int trial = 0; trial < 3; ++trial) {
      IntVec a(l.n), b(l.n), c(l.n), d(l.n);
      for (std::size_t i = 0; i < l.n; ++i) {
        a[i] = small(rng);
        b[i] = small(rng);
        c[i] = a[i] + extra(rng);
        d[i] = b[i] + extra(rng);
      }
      FiberComplex big = fiber_resolution(l, a, b);
      IntVec e(l.n), f(l.n);
      for (std::size_t i = 0; i < l.n; ++i) {
        e[i] = std::min(b[i], Int(c[i] - a[i]));
        f[i] = std::min(a[i], Int(d[i] - b[i]));
      }
      FiberComplex sub = fiber_resolution(l, e, f);
      Monomial bound(std::vector<int>(l.n), std::vector<int>(l.n));
      for (std::size_t i = 0; i < l.n; ++i) {
        bound.x[i] = static_cast<int>(c[i].convert_to<long>());
        bound.y[i] = static_cast<int>(d[i].convert_to<long>());
      }
      // collect cells of `big` whose label divides x^c y^d
      std::vector<std::size_t> fcounts;
      std::set<std::vector<IntVec>> lhs_cells;
      std::map<std::vector<IntVec>, Monomial> lhs_labels;
      for (std::size_t dim = 0; dim < big.faces.size(); ++dim) {
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < big.faces[dim].size(); ++i) {
          if (!big.chain.labels[dim][i].divides(bound)) continue;
          ++cnt;
          std::vector<IntVec> neg;
          for (const IntVec& v : big.faces[dim][i].vertices) {
            IntVec w(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) w[j] = -v[j];
            neg.push_back(std::move(w));
          }
          std::sort(neg.begin(), neg.end());
          lhs_cells.insert(neg);
          lhs_labels.emplace(neg, big.chain.labels[dim][i]);
        }
        fcounts.push_back(cnt);
      }
      while (!fcounts.empty() && fcounts.back() == 0) fcounts.pop_back();
      std::vector<std::size_t> sub_f = sub.f_vector();
      CHECK(fcounts == sub_f);
      std::size_t matched = 0;
      for (std::size_t dim = 0; dim < sub.faces.size(); ++dim)
        for (std::size_t i = 0; i < sub.faces[dim].size(); ++i) {
          REQUIRE(lhs_cells.count(sub.faces[dim][i].vertices) == 1);
          ++matched;
          // label shift: lhs_x = rhs_y + (a - f), lhs_y = rhs_x + (b - e)
          const Monomial& lhs = lhs_labels.at(sub.faces[dim][i].vertices);
          const Monomial& rhs = sub.chain.labels[dim][i];
          for (std::size_t j = 0; j < l.n; ++j) {
            CHECK(Int(lhs.x[j]) == Int(rhs.y[j]) + a[j] - f[j]);
            CHECK(Int(lhs.y[j]) == Int(rhs.x[j]) + b[j] - e[j]);
          }
        }
      CHECK(matched == lhs_cells.size());
    }
  }
}

TEST_CASE("K4 initial boundary is the cyclic rule without the wrap term") {
  // Match cells of the initial complex to ordered partitions through their
  // labels; each column must consist of the block-merge terms only.
  Lattice l = graphic_lattice(complete_graph(4));
  IntVec w2n(12, Int(0));
  w2n[2] = 100;
  w2n[4] = -2;
  w2n[5] = -1;
  LabeledComplex c = initial_resolution(l, make_weight_order(l, w2n));
  const std::size_t d = 4, n = 6;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  {
    std::size_t e = 0;
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = i + 1; j <= d; ++j) edge_index[{i, j}] = e++;
  }
  auto block_product = [&](const std::vector<std::size_t>& from,
                           const std::vector<std::size_t>& to) {
    std::vector<int> x(n, 0), y(n, 0);
    for (std::size_t i : from)
      for (std::size_t j : to) {
        if (i < j)
          x[edge_index.at({i, j})] += 1;
        else
          y[edge_index.at({j, i})] += 1;
      }
    return Monomial(x, y);
  };
  auto partition_label = [&](const OrderedPartition& p) {
    Monomial lab = Monomial::one(n);
    for (std::size_t s = 0; s < p.size(); ++s)
      for (std::size_t t = s + 1; t < p.size(); ++t)
        lab = lab * block_product(p[s], p[t]);
    return lab;
  };
  std::map<Monomial, OrderedPartition> by_label;
  for (std::size_t r = 1; r <= d; ++r)
    for (const OrderedPartition& p : ordered_partitions(d, r))
      by_label.emplace(partition_label(p), p);

  for (std::size_t deg = 2; deg <= 3; ++deg) {
    const BoundaryMatrix& bm = c.boundary[deg - 1];
    for (std::size_t col = 0; col < bm.cols; ++col) {
      const OrderedPartition p = by_label.at(c.labels[deg][col]);
      const std::size_t r = p.size();
      std::multiset<std::pair<Monomial, Monomial>> expect;  // (target, coeff)
      for (std::size_t s = 2; s <= r; ++s) {
        OrderedPartition q;
        for (std::size_t k = 0; k < r; ++k) {
          if (k == s - 1) continue;
          q.push_back(p[k]);
          if (k == s - 2) {
            auto& blk = q.back();
            blk.insert(blk.end(), p[s - 1].begin(), p[s - 1].end());
            std::sort(blk.begin(), blk.end());
          }
        }
        expect.insert({partition_label(q), block_product(p[s - 2], p[s - 1])});
      }
      std::multiset<std::pair<Monomial, Monomial>> got;
      for (const auto& [row, e] : bm.col[col]) {
        REQUIRE(e.terms().size() == 1);
        got.insert({c.labels[deg - 1][row], e.terms()[0].mono});
      }
      CHECK(got == expect);  // merge terms only, no wrap-around
    }
  }
}

TEST_CASE("betti stability across random generic weights") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> wdist(-9, 9);
  for (const Lattice& l :
       {sum_zero_lattice(4), cographic_lattice(complete_graph(4))}) {
    std::vector<std::size_t> betti = betti_numbers(l);
    int accepted = 0;
    while (accepted < 3) {
      IntVec w(2 * l.n);
      for (Int& v : w) v = wdist(rng);
      try {
        WeightOrder order = make_weight_order(l, w);
        LabeledComplex c = initial_resolution(l, order);
        CHECK(c.ranks() == betti);
        CHECK(check_d_squared(c));
        CHECK(complex_is_minimal(c));
        ++accepted;
      } catch (const NonGenericWeightError&) {
      }
    }
  }
}
