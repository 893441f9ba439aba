#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "lawrence/chain.hpp"
#include "lawrence/graphs.hpp"
#include "lawrence/lattice.hpp"

namespace lawrence {

// Input files: matrix ("n m" header, then the basis B row by row), kernel
// ("ker d n" header, then A), or graph ("graph d" header, then one directed
// edge per line, 1-indexed).
struct ParsedInput {
  std::optional<Lattice> lattice;
  std::optional<Digraph> graph;
};

ParsedInput parse_input(std::istream& in);
ParsedInput parse_input_file(const std::string& path);

nlohmann::json complex_to_json(const LabeledComplex& c);
LabeledComplex complex_from_json(const nlohmann::json& j);

// Drop homological degree 0 (resolve the ideal instead of the quotient
// ring); boundary degrees shift down by one.
LabeledComplex truncate_to_ideal(const LabeledComplex& c);

// Human-readable boundary matrices, one block per homological degree.
std::string complex_dump(const LabeledComplex& c);

std::string format_matrix(const IntMatrix& m);

}  // namespace lawrence
