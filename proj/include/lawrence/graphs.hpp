#pragma once

#include <utility>
#include <vector>

#include "lawrence/chain.hpp"
#include "lawrence/lattice.hpp"

namespace lawrence {

// Directed graph on vertices 1..d; at most one edge per unordered pair.
struct Digraph {
  std::size_t d = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

Digraph complete_graph(std::size_t d);
bool is_connected(const Digraph& g);

// |E| x d matrix with row e_i - e_j per edge (i, j).
IntMatrix incidence_matrix(const Digraph& g);

// Column span of the incidence matrix in Z^edges (the cut space).
Lattice graphic_lattice(const Digraph& g);

// Saturated orthogonal complement (the cycle space). Throws on forests.
Lattice cographic_lattice(const Digraph& g);

// Signed cut vectors of vertex subsets with both sides connected; canonical
// sign, sorted. Equals circuits(graphic_lattice(g)) up to sign.
std::vector<IntVec> graph_cocircuits(const Digraph& g);

// Signed edge vectors of simple cycles; canonical sign, sorted. Equals
// circuits(cographic_lattice(g)) up to sign.
std::vector<IntVec> graph_circuits(const Digraph& g);

// Ordered partitions of {1..d} into r nonempty blocks with 1 in the first
// block; blocks sorted internally, partitions sorted lexicographically.
using OrderedPartition = std::vector<std::vector<std::size_t>>;
std::vector<OrderedPartition> ordered_partitions(std::size_t d, std::size_t r);

// Explicit resolution of the complete-graph Lawrence ideal: module of
// homological degree r-1 has the r-block ordered partitions as basis, with
// the cyclic-rule differential. Variables pair x_e, y_e per edge {i<j} of
// K_d, with x_{ij} -> x_e and x_{ji} -> y_e.
LabeledComplex kd_bar_resolution(std::size_t d, std::size_t cap = 7);

struct KdCrossCheck {
  bool d_squared = false;
  bool ranks_match = false;
  bool generators_match = false;
  std::vector<std::size_t> bar_ranks, lattice_betti;
  bool ok() const { return d_squared && ranks_match && generators_match; }
};

// Bar complex against the arrangement pipeline on K_d.
KdCrossCheck kd_cross_check(std::size_t d);

}  // namespace lawrence
