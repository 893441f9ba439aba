#include "lawrence/graphs.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "lawrence/errors.hpp"
#include "lawrence/resolution.hpp"

namespace lawrence {

namespace {

void validate(const Digraph& g) {
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : g.edges) {
    if (i < 1 || j < 1 || i > g.d || j > g.d || i == j)
      throw std::invalid_argument("bad edge in digraph");
    auto key = std::minmax(i, j);
    if (!pairs.insert(key).second)
      throw std::invalid_argument("repeated edge in digraph");
  }
}

bool subset_connected(const Digraph& g, const std::vector<char>& in) {
  std::size_t start = 0;
  std::size_t count = 0;
  for (std::size_t v = 1; v <= g.d; ++v)
    if (in[v]) {
      if (!start) start = v;
      ++count;
    }
  if (count == 0) return false;
  std::vector<char> seen(g.d + 1, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (auto [a, b] : g.edges) {
      std::size_t w = 0;
      if (a == v) w = b;
      else if (b == v) w = a;
      else continue;
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == count;
}

void canonical_sign(IntVec& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
}

}  // namespace

Digraph complete_graph(std::size_t d) {
  Digraph g;
  g.d = d;
  for (std::size_t i = 1; i <= d; ++i)
    for (std::size_t j = i + 1; j <= d; ++j) g.edges.emplace_back(i, j);
  return g;
}

bool is_connected(const Digraph& g) {
  std::vector<char> all(g.d + 1, 1);
  all[0] = 0;
  return subset_connected(g, all);
}

IntMatrix incidence_matrix(const Digraph& g) {
  validate(g);
  IntMatrix m(g.edges.size(), g.d);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    m(e, g.edges[e].first - 1) = 1;
    m(e, g.edges[e].second - 1) = -1;
  }
  return m;
}

Lattice graphic_lattice(const Digraph& g) {
  IntMatrix inc = incidence_matrix(g);
  // Components: drop one vertex column per component, the columns of the
  // rest span the image.
  std::vector<std::size_t> comp(g.d + 1, 0);
  std::size_t ncomp = 0;
  for (std::size_t v = 1; v <= g.d; ++v) {
    if (comp[v]) continue;
    ++ncomp;
    std::vector<std::size_t> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (auto [a, b] : g.edges) {
        std::size_t w = 0;
        if (a == u) w = b;
        else if (b == u) w = a;
        else continue;
        if (!comp[w]) {
          comp[w] = comp[u];
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<char> drop(g.d + 1, 0);
  for (std::size_t c = 1; c <= ncomp; ++c) {
    for (std::size_t v = g.d; v >= 1; --v)
      if (comp[v] == c) {
        drop[v] = 1;
        break;
      }
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 1; v <= g.d; ++v)
    if (!drop[v]) keep.push_back(v - 1);
  if (keep.empty()) throw std::invalid_argument("trivial lattice");
  IntMatrix b(inc.rows(), keep.size());
  for (std::size_t e = 0; e < inc.rows(); ++e)
    for (std::size_t k = 0; k < keep.size(); ++k) b(e, k) = inc(e, keep[k]);
  return from_image(b);
}

Lattice cographic_lattice(const Digraph& g) {
  IntMatrix inc = incidence_matrix(g);
  return from_kernel(inc.transposed());
}

std::vector<IntVec> graph_cocircuits(const Digraph& g) {
  validate(g);
  if (!is_connected(g))
    throw std::invalid_argument("connected graph required for cocircuits");
  if (g.d > 24) throw CapExceededError("cocircuit scan capped at 24 vertices");
  std::vector<IntVec> out;
  // Subsets containing vertex 1; both sides connected.
  const std::size_t k = g.d - 1;
  for (std::size_t mask = 0; mask + 1 < (std::size_t(1) << k); ++mask) {
    std::vector<char> in(g.d + 1, 0), cmp(g.d + 1, 0);
    in[1] = 1;
    for (std::size_t v = 2; v <= g.d; ++v) {
      if (mask & (std::size_t(1) << (v - 2)))
        in[v] = 1;
      else
        cmp[v] = 1;
    }
    if (!subset_connected(g, in) || !subset_connected(g, cmp)) continue;
    IntVec cut(g.edges.size(), Int(0));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      auto [i, j] = g.edges[e];
      if (in[i] && !in[j]) cut[e] = 1;
      if (!in[i] && in[j]) cut[e] = -1;
    }
    canonical_sign(cut);
    out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVec> graph_circuits(const Digraph& g) {
  validate(g);
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, int>>
      edge_of;  // (u,v) -> (index, sign)
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    edge_of[{g.edges[e].first, g.edges[e].second}] = {e, 1};
    edge_of[{g.edges[e].second, g.edges[e].first}] = {e, -1};
  }
  std::vector<std::vector<std::size_t>> adj(g.d + 1);
  for (auto [i, j] : g.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::set<IntVec> found;
  std::vector<std::size_t> path;
  std::vector<char> on_path(g.d + 1, 0);
  auto record = [&](const std::vector<std::size_t>& cycle) {
    IntVec v(g.edges.size(), Int(0));
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto [e, s] = edge_of.at({cycle[i], cycle[(i + 1) % cycle.size()]});
      v[e] = s;
    }
    canonical_sign(v);
    found.insert(std::move(v));
  };
  // Simple cycles: start from their minimal vertex, walk through larger
  // vertices only, fix the direction by path[1] < path.back().
  auto dfs = [&](auto&& self, std::size_t start, std::size_t v) -> void {
    for (std::size_t w : adj[v]) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) record(path);
        continue;
      }
      if (w <= start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = 1;
      self(self, start, w);
      on_path[w] = 0;
      path.pop_back();
    }
  };
  for (std::size_t s = 1; s <= g.d; ++s) {
    path = {s};
    on_path.assign(g.d + 1, 0);
    on_path[s] = 1;
    dfs(dfs, s, s);
  }
  return std::vector<IntVec>(found.begin(), found.end());
}

std::vector<OrderedPartition> ordered_partitions(std::size_t d, std::size_t r) {
  std::vector<OrderedPartition> out;
  OrderedPartition blocks(r);
  blocks[0].push_back(1);
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (next > d) {
      for (const auto& b : blocks)
        if (b.empty()) return;
      out.push_back(blocks);
      return;
    }
    for (std::size_t k = 0; k < r; ++k) {
      blocks[k].push_back(next);
      self(self, next + 1);
      blocks[k].pop_back();
    }
  };
  rec(rec, 2);
  std::sort(out.begin(), out.end());
  return out;
}

LabeledComplex kd_bar_resolution(std::size_t d, std::size_t cap) {
  if (d < 2) throw std::invalid_argument("need d >= 2");
  if (d > cap) {
    std::ostringstream os;
    os << "kd resolution capped at d = " << cap;
    throw CapExceededError(os.str());
  }
  const std::size_t n = d * (d - 1) / 2;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  {
    std::size_t e = 0;
    for (std::size_t i = 1; i <= d; ++i)
      for (std::size_t j = i + 1; j <= d; ++j) edge_index[{i, j}] = e++;
  }
  // Product of x_{ij} over i in from, j in to; x_{ij} with i < j is the
  // x-variable of edge {i,j}, otherwise the y-variable.
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
    return Monomial(std::move(x), std::move(y));
  };
  auto partition_label = [&](const OrderedPartition& p) {
    Monomial lab = Monomial::one(n);
    for (std::size_t s = 0; s < p.size(); ++s)
      for (std::size_t t = s + 1; t < p.size(); ++t)
        lab = lab * block_product(p[s], p[t]);
    return lab;
  };

  std::vector<std::vector<OrderedPartition>> parts(d + 1);
  std::vector<std::map<OrderedPartition, std::size_t>> index(d + 1);
  for (std::size_t r = 1; r <= d; ++r) {
    parts[r] = ordered_partitions(d, r);
    for (std::size_t i = 0; i < parts[r].size(); ++i)
      index[r].emplace(parts[r][i], i);
  }

  LabeledComplex c;
  c.n = n;
  c.m = d - 1;
  c.labels.assign(d, {});
  for (std::size_t r = 1; r <= d; ++r)
    for (const OrderedPartition& p : parts[r])
      c.labels[r - 1].push_back(partition_label(p));

  auto merged = [](const OrderedPartition& p, std::size_t a, std::size_t b) {
    // blocks a and b merged, order otherwise kept; b removed
    OrderedPartition q;
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k == b) continue;
      q.push_back(p[k]);
      if (k == a) {
        auto& blk = q.back();
        blk.insert(blk.end(), p[b].begin(), p[b].end());
        std::sort(blk.begin(), blk.end());
      }
    }
    return q;
  };

  c.boundary.clear();
  for (std::size_t r = 2; r <= d; ++r) {
    BoundaryMatrix bm(parts[r - 1].size(), parts[r].size());
    for (std::size_t ci = 0; ci < parts[r].size(); ++ci) {
      const OrderedPartition& p = parts[r][ci];
      // wrap-around term: last block joins the first
      {
        OrderedPartition q = merged(p, 0, r - 1);
        int sign = (r + 1) % 2 == 0 ? 1 : -1;
        bm.add_term(ci, index[r - 1].at(q), sign,
                    block_product(p[r - 1], p[0]));
      }
      for (std::size_t s = 2; s <= r; ++s) {
        OrderedPartition q = merged(p, s - 2, s - 1);
        int sign = s % 2 == 0 ? 1 : -1;
        bm.add_term(ci, index[r - 1].at(q), sign,
                    block_product(p[s - 2], p[s - 1]));
      }
    }
    c.boundary.push_back(std::move(bm));
  }
  return c;
}

KdCrossCheck kd_cross_check(std::size_t d) {
  KdCrossCheck rep;
  LabeledComplex bar = kd_bar_resolution(d);
  rep.d_squared = check_d_squared(bar);
  rep.bar_ranks = bar.ranks();
  rep.lattice_betti = betti_numbers(graphic_lattice(complete_graph(d)));
  rep.ranks_match = rep.bar_ranks == rep.lattice_betti;

  // Degree-one entries against the circuit binomials, up to sign.
  auto normalize = [](PolyEntry e) {
    if (!e.terms().empty() && e.terms().front().coef < 0) e = -e;
    return e;
  };
  std::set<PolyEntry> bar_gens;
  for (const auto& column : bar.boundary[0].col)
    for (const auto& [row, e] : column) bar_gens.insert(normalize(e));
  std::set<PolyEntry> lat_gens;
  for (const Binomial& b : lawrence_generators(graphic_lattice(complete_graph(d))))
    lat_gens.insert(normalize(b.as_entry()));
  rep.generators_match = bar_gens == lat_gens;
  return rep;
}

}  // namespace lawrence
