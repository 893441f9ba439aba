#include "lawrence/io.hpp"

#include <fstream>
#include <sstream>

#include "lawrence/errors.hpp"

namespace lawrence {

namespace {

Int read_int(std::istream& in, const char* what) {
  std::string tok;
  if (!(in >> tok)) throw ParseError(std::string("expected ") + what);
  try {
    return Int(tok);
  } catch (const std::exception&) {
    throw ParseError("not an integer: '" + tok + "'");
  }
}

IntMatrix read_matrix(std::istream& in, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = read_int(in, "matrix entry");
  return m;
}

}  // namespace

ParsedInput parse_input(std::istream& in) {
  std::string head;
  if (!(in >> head)) throw ParseError("empty input");
  ParsedInput out;
  if (head == "ker") {
    long d = read_int(in, "row count").convert_to<long>();
    long n = read_int(in, "column count").convert_to<long>();
    if (d <= 0 || n <= 0) throw ParseError("bad kernel header");
    out.lattice = from_kernel(read_matrix(in, d, n));
  } else if (head == "graph") {
    Digraph g;
    g.d = read_int(in, "vertex count").convert_to<std::size_t>();
    long i, j;
    std::string tok;
    while (in >> tok) {
      try {
        i = Int(tok).convert_to<long>();
      } catch (const std::exception&) {
        throw ParseError("not an integer: '" + tok + "'");
      }
      j = read_int(in, "edge endpoint").convert_to<long>();
      if (i < 1 || j < 1) throw ParseError("edge endpoints must be positive");
      g.edges.emplace_back(i, j);
    }
    out.graph = g;
  } else {
    long n, m;
    try {
      n = Int(head).convert_to<long>();
    } catch (const std::exception&) {
      throw ParseError("unknown header '" + head + "'");
    }
    m = read_int(in, "column count").convert_to<long>();
    if (n <= 0 || m <= 0) throw ParseError("bad matrix header");
    try {
      out.lattice = from_image(read_matrix(in, n, m));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return out;
}

ParsedInput parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_input(in);
}

nlohmann::json complex_to_json(const LabeledComplex& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["ranks"] = c.ranks();
  nlohmann::json cells = nlohmann::json::array();
  std::size_t id = 0;
  for (std::size_t d = 0; d < c.labels.size(); ++d)
    for (const Monomial& lab : c.labels[d]) {
      nlohmann::json cell;
      cell["dim"] = d;
      cell["label_x"] = lab.x;
      cell["label_y"] = lab.y;
      cell["id"] = id++;
      cells.push_back(std::move(cell));
    }
  j["cells"] = std::move(cells);
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t d = 0; d < c.boundary.size(); ++d) {
    const BoundaryMatrix& b = c.boundary[d];
    for (std::size_t col = 0; col < b.cols; ++col)
      for (const auto& [row, e] : b.col[col]) {
        nlohmann::json entry;
        entry["degree"] = d + 1;
        entry["row"] = row;
        entry["col"] = col;
        nlohmann::json terms = nlohmann::json::array();
        for (const Term& t : e.terms()) {
          nlohmann::json term;
          term["sign"] = t.coef;
          term["x"] = t.mono.x;
          term["y"] = t.mono.y;
          terms.push_back(std::move(term));
        }
        entry["terms"] = std::move(terms);
        entries.push_back(std::move(entry));
      }
  }
  j["boundary"] = std::move(entries);
  return j;
}

LabeledComplex complex_from_json(const nlohmann::json& j) {
  LabeledComplex c;
  c.n = j.at("n").get<std::size_t>();
  c.m = j.at("m").get<std::size_t>();
  std::vector<std::size_t> ranks = j.at("ranks").get<std::vector<std::size_t>>();
  c.labels.assign(ranks.size(), {});
  for (const auto& cell : j.at("cells")) {
    std::size_t d = cell.at("dim").get<std::size_t>();
    c.labels.at(d).push_back(Monomial(cell.at("label_x").get<std::vector<int>>(),
                                      cell.at("label_y").get<std::vector<int>>()));
  }
  for (std::size_t d = 0; d < ranks.size(); ++d)
    if (c.labels[d].size() != ranks[d]) throw ParseError("rank mismatch");
  for (std::size_t d = 0; d + 1 < ranks.size(); ++d)
    c.boundary.emplace_back(ranks[d], ranks[d + 1]);
  for (const auto& entry : j.at("boundary")) {
    std::size_t d = entry.at("degree").get<std::size_t>();
    if (d == 0 || d >= ranks.size()) throw ParseError("bad boundary degree");
    for (const auto& term : entry.at("terms"))
      c.boundary[d - 1].add_term(
          entry.at("col").get<std::size_t>(), entry.at("row").get<std::size_t>(),
          term.at("sign").get<int>(),
          Monomial(term.at("x").get<std::vector<int>>(),
                   term.at("y").get<std::vector<int>>()));
  }
  return c;
}

LabeledComplex truncate_to_ideal(const LabeledComplex& c) {
  LabeledComplex out;
  out.n = c.n;
  out.m = c.m == 0 ? 0 : c.m - 1;
  out.labels.assign(c.labels.begin() + 1, c.labels.end());
  out.boundary.assign(c.boundary.begin() + 1, c.boundary.end());
  return out;
}

std::string complex_dump(const LabeledComplex& c) {
  std::ostringstream os;
  os << "ranks:";
  for (std::size_t r : c.ranks()) os << " " << r;
  os << "\n";
  for (std::size_t d = 0; d < c.boundary.size(); ++d) {
    const BoundaryMatrix& b = c.boundary[d];
    os << "boundary " << d + 1 << " (" << b.rows << " x " << b.cols << "):\n";
    for (std::size_t row = 0; row < b.rows; ++row) {
      os << "  [";
      for (std::size_t col = 0; col < b.cols; ++col) {
        const PolyEntry* e = b.entry(row, col);
        os << (col ? ", " : "") << (e ? e->str() : "0");
      }
      os << "]\n";
    }
  }
  return os.str();
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream os;
  os << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

}  // namespace lawrence
