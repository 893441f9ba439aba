#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "lawrence/errors.hpp"
#include "lawrence/fiber.hpp"
#include "lawrence/graphs.hpp"
#include "lawrence/initial.hpp"
#include "lawrence/io.hpp"
#include "lawrence/resolution.hpp"

namespace {

using namespace lawrence;

// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 not unimodular, 4 non-generic weight, 5 cap exceeded.
enum ExitCode {
  kOk = 0,
  kVerifyFailed = 1,
  kParseError = 2,
  kNotUnimodular = 3,
  kNonGenericWeight = 4,
  kCapExceeded = 5,
};

struct CommonArgs {
  std::string input;
  std::string json_path;
  bool graphic = false;
  bool cographic = false;
  std::size_t max_covectors = 1'000'000;
  std::string convention = "ring";
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_convention = false) {
  cmd->add_option("input", args.input, "input file (matrix, ker, or graph)")
      ->required();
  cmd->add_option("--json", args.json_path, "write a JSON report to this file");
  cmd->add_flag("--graphic", args.graphic, "use the graphic lattice of a graph input");
  cmd->add_flag("--cographic", args.cographic, "use the cographic lattice of a graph input");
  cmd->add_option("--max-covectors", args.max_covectors, "covector enumeration cap");
  if (with_convention)
    cmd->add_option("--convention", args.convention,
                    "resolve the quotient ring or the ideal")
        ->check(CLI::IsMember({"ring", "ideal"}));
}

Lattice load_lattice(const CommonArgs& args) {
  ParsedInput in = parse_input_file(args.input);
  if (in.lattice) return *in.lattice;
  if (args.graphic && args.cographic)
    throw ParseError("choose one of --graphic / --cographic");
  if (args.graphic) return graphic_lattice(*in.graph);
  if (args.cographic) return cographic_lattice(*in.graph);
  throw ParseError("graph input requires --graphic or --cographic");
}

void write_json(const CommonArgs& args, const nlohmann::json& j) {
  if (args.json_path.empty()) return;
  std::ofstream out(args.json_path);
  if (!out) throw ParseError("cannot write '" + args.json_path + "'");
  out << j.dump(2) << "\n";
}

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(Int(tok));
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + tok + "'");
    }
  }
  return out;
}

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i].str();
  return s + ")";
}

nlohmann::json lattice_summary(const Lattice& l) {
  nlohmann::json j;
  j["n"] = l.n;
  j["m"] = l.m;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < l.n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < l.m; ++k)
      row.push_back(l.basis(i, k).convert_to<long long>());
    rows.push_back(std::move(row));
  }
  j["basis"] = std::move(rows);
  return j;
}

int cmd_check(const CommonArgs& args) {
  Lattice l = load_lattice(args);
  UnimodularityReport rep = unimodularity_report(l);
  ClassGroup cg = class_group(l);
  std::cout << "lattice: n = " << l.n << ", m = " << l.m << "\n";
  std::cout << "saturated: " << (is_saturated(l) ? "yes" : "no") << "\n";
  std::cout << "unimodular: " << (rep.unimodular ? "yes" : "no") << "\n";
  if (!rep.unimodular) {
    std::cout << "  witness minor " << rep.witness_minor << " on rows {";
    for (std::size_t i = 0; i < rep.witness_rows.size(); ++i)
      std::cout << (i ? "," : "") << rep.witness_rows[i] + 1;
    std::cout << "}\n";
  }
  std::cout << "class group Z^n/L: free rank " << cg.free_rank;
  if (!cg.torsion.empty()) {
    std::cout << ", torsion";
    for (const Int& d : cg.torsion) std::cout << " Z/" << d;
  }
  std::cout << "\n";
  nlohmann::json j = lattice_summary(l);
  j["unimodular"] = rep.unimodular;
  j["saturated"] = is_saturated(l);
  j["class_group_free_rank"] = cg.free_rank;
  nlohmann::json tor = nlohmann::json::array();
  for (const Int& d : cg.torsion) tor.push_back(d.convert_to<long long>());
  j["class_group_torsion"] = std::move(tor);
  if (!rep.unimodular) {
    j["witness_minor"] = rep.witness_minor.convert_to<long long>();
    j["witness_rows"] = rep.witness_rows;
  }
  write_json(args, j);
  return rep.unimodular ? kOk : kNotUnimodular;
}

int cmd_circuits(const CommonArgs& args) {
  Lattice l = load_lattice(args);
  std::vector<Circuit> cs = circuits(l);
  std::cout << cs.size() << " circuits\n";
  nlohmann::json list = nlohmann::json::array();
  for (const Circuit& c : cs) {
    std::cout << "  " << vec_str(c.vec.coords) << "\n";
    nlohmann::json item;
    nlohmann::json coords = nlohmann::json::array();
    for (const Int& v : c.vec.coords) coords.push_back(v.convert_to<long long>());
    item["coords"] = std::move(coords);
    item["support"] = c.support;
    list.push_back(std::move(item));
  }
  nlohmann::json j = lattice_summary(l);
  j["circuits"] = std::move(list);
  write_json(args, j);
  return kOk;
}

int cmd_generators(const CommonArgs& args) {
  Lattice l = load_lattice(args);
  std::vector<Binomial> gens = lawrence_generators(l);
  std::cout << gens.size() << " generators\n";
  nlohmann::json list = nlohmann::json::array();
  for (const Binomial& b : gens) {
    std::cout << "  " << b.str() << "\n";
    nlohmann::json item;
    item["plus_x"] = b.plus.x;
    item["plus_y"] = b.plus.y;
    item["minus_x"] = b.minus.x;
    item["minus_y"] = b.minus.y;
    item["text"] = b.str();
    list.push_back(std::move(item));
  }
  nlohmann::json j = lattice_summary(l);
  j["generators"] = std::move(list);
  write_json(args, j);
  return kOk;
}

nlohmann::json complex_report(const LabeledComplex& c, const Lattice& l,
                              bool& ok) {
  bool d2 = check_d_squared(c);
  bool minimal = complex_is_minimal(c);
  bool homogeneous = complex_is_homogeneous(c, l);
  std::vector<std::size_t> torus = torus_homology_ranks(c);
  bool torus_ok = true;
  for (std::size_t i = 0; i < torus.size(); ++i)
    torus_ok = torus_ok &&
               Int(torus[i]) == binomial_coefficient(c.m, i);
  std::cout << "d_squared_zero: " << (d2 ? "pass" : "FAIL") << "\n";
  std::cout << "minimal (no unit entries): " << (minimal ? "pass" : "FAIL") << "\n";
  std::cout << "lattice-graded entries: " << (homogeneous ? "pass" : "FAIL") << "\n";
  std::cout << "torus homology (vars -> 1): ";
  for (std::size_t h : torus) std::cout << h << " ";
  std::cout << (torus_ok ? "(pass)" : "(FAIL)") << "\n";
  ok = d2 && minimal && homogeneous && torus_ok;
  nlohmann::json v;
  v["d_squared_zero"] = d2;
  v["minimal"] = minimal;
  v["graded"] = homogeneous;
  v["torus_homology"] = torus;
  return v;
}

int cmd_resolve(const CommonArgs& args) {
  Lattice l = load_lattice(args);
  ResolutionOptions opts;
  opts.enumeration.max_faces = args.max_covectors;
  LabeledComplex c = build_resolution(l, opts);
  std::cout << "ranks:";
  for (std::size_t r : c.ranks()) std::cout << " " << r;
  std::cout << "\n";
  bool ok = false;
  nlohmann::json verification = complex_report(c, l, ok);
  LabeledComplex out = args.convention == "ideal" ? truncate_to_ideal(c) : c;
  std::cout << complex_dump(out);
  nlohmann::json j = complex_to_json(out);
  j["convention"] = args.convention;
  j["verification"] = std::move(verification);
  write_json(args, j);
  return ok ? kOk : kVerifyFailed;
}

int cmd_initial(const CommonArgs& args, const std::string& weight_text) {
  Lattice l = load_lattice(args);
  WeightOrder w = make_weight_order(l, parse_int_list(weight_text));
  EnumerationOptions eopts;
  eopts.max_faces = args.max_covectors;
  LabeledComplex c = initial_resolution(l, w, eopts);
  std::cout << "initial terms:";
  for (const Monomial& t : initial_terms(l, w)) std::cout << " " << t.str();
  std::cout << "\nranks:";
  for (std::size_t r : c.ranks()) std::cout << " " << r;
  std::cout << "\n";
  bool d2 = check_d_squared(c);
  bool minimal = complex_is_minimal(c);
  std::cout << "d_squared_zero: " << (d2 ? "pass" : "FAIL") << "\n";
  std::cout << "minimal: " << (minimal ? "pass" : "FAIL") << "\n";
  LabeledComplex out = args.convention == "ideal" ? truncate_to_ideal(c) : c;
  std::cout << complex_dump(out);
  nlohmann::json j = complex_to_json(out);
  j["convention"] = args.convention;
  j["verification"] = {{"d_squared_zero", d2}, {"minimal", minimal}};
  write_json(args, j);
  return d2 && minimal ? kOk : kVerifyFailed;
}

int cmd_fiber(const CommonArgs& args, const std::string& degree_text) {
  Lattice l = load_lattice(args);
  auto slash = degree_text.find('/');
  if (slash == std::string::npos)
    throw ParseError("--degree expects a1,...,an/b1,...,bn");
  IntVec a = parse_int_list(degree_text.substr(0, slash));
  IntVec b = parse_int_list(degree_text.substr(slash + 1));
  if (a.size() != l.n || b.size() != l.n)
    throw ParseError("degree vectors must have length n");
  for (const Int& v : a)
    if (v < 0) throw ParseError("degree entries must be nonnegative");
  for (const Int& v : b)
    if (v < 0) throw ParseError("degree entries must be nonnegative");
  EnumerationOptions eopts;
  eopts.max_faces = args.max_covectors;
  FiberComplex fc = fiber_resolution(l, a, b, eopts);
  std::cout << fc.points.size() << " fiber monomials:\n";
  for (const FiberPoint& p : fc.points)
    std::cout << "  " << p.monomial.str() << "\n";
  std::cout << "f-vector:";
  for (std::size_t r : fc.f_vector()) std::cout << " " << r;
  std::cout << "\n";
  bool d2 = check_d_squared(fc.chain);
  bool contractible = fiber_is_contractible(fc);
  std::cout << "d_squared_zero: " << (d2 ? "pass" : "FAIL") << "\n";
  std::cout << "contractible: " << (contractible ? "pass" : "FAIL") << "\n";
  std::cout << complex_dump(fc.chain);
  nlohmann::json j = complex_to_json(fc.chain);
  nlohmann::json pts = nlohmann::json::array();
  for (const FiberPoint& p : fc.points) {
    nlohmann::json pt;
    nlohmann::json coords = nlohmann::json::array();
    for (const Int& v : p.point) coords.push_back(v.convert_to<long long>());
    pt["point"] = std::move(coords);
    pt["x"] = p.monomial.x;
    pt["y"] = p.monomial.y;
    pts.push_back(std::move(pt));
  }
  j["fiber_points"] = std::move(pts);
  j["verification"] = {{"d_squared_zero", d2}, {"contractible", contractible}};
  write_json(args, j);
  return d2 && contractible ? kOk : kVerifyFailed;
}

int cmd_graph(const CommonArgs& args) {
  ParsedInput in = parse_input_file(args.input);
  if (!in.graph) throw ParseError("graph command needs a graph input file");
  if (args.graphic == args.cographic)
    throw ParseError("choose one of --graphic / --cographic");
  Lattice l = args.graphic ? graphic_lattice(*in.graph)
                           : cographic_lattice(*in.graph);
  std::cout << (args.graphic ? "graphic" : "cographic")
            << " lattice basis (matrix input format):\n"
            << format_matrix(l.basis);
  std::vector<IntVec> combinatorial = args.graphic
                                          ? graph_cocircuits(*in.graph)
                                          : graph_circuits(*in.graph);
  std::cout << combinatorial.size()
            << (args.graphic ? " cocircuits\n" : " cycles\n");
  nlohmann::json j = lattice_summary(l);
  j["kind"] = args.graphic ? "graphic" : "cographic";
  nlohmann::json vecs = nlohmann::json::array();
  for (const IntVec& v : combinatorial) {
    nlohmann::json item = nlohmann::json::array();
    for (const Int& x : v) item.push_back(x.convert_to<long long>());
    vecs.push_back(std::move(item));
  }
  j[args.graphic ? "cocircuits" : "cycles"] = std::move(vecs);
  write_json(args, j);
  return kOk;
}

int cmd_kd(const CommonArgs& args, std::size_t d) {
  LabeledComplex c = kd_bar_resolution(d);
  std::cout << "ranks:";
  for (std::size_t r : c.ranks()) std::cout << " " << r;
  std::cout << "\n";
  bool d2 = check_d_squared(c);
  std::cout << "d_squared_zero: " << (d2 ? "pass" : "FAIL") << "\n";
  nlohmann::json j = complex_to_json(c);
  j["verification"] = {{"d_squared_zero", d2}};
  write_json(args, j);
  return d2 ? kOk : kVerifyFailed;
}

int cmd_verify(const CommonArgs& args, std::size_t samples, int max_entry,
               std::size_t weights, unsigned long seed) {
  Lattice l = load_lattice(args);
  ResolutionOptions opts;
  opts.enumeration.max_faces = args.max_covectors;
  LabeledComplex c = build_resolution(l, opts);
  std::cout << "ranks:";
  for (std::size_t r : c.ranks()) std::cout << " " << r;
  std::cout << "\n";
  bool ok = false;
  nlohmann::json verification = complex_report(c, l, ok);

  ExactnessReport exact =
      graded_exactness_sample(l, sample_degrees(l.n, samples, max_entry, seed));
  bool exact_ok = exact.all_verified();
  std::cout << "graded exactness (" << samples << " degrees, entries <= "
            << max_entry << "): " << (exact_ok ? "pass" : "FAIL") << "\n";
  ok = ok && exact_ok;

  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<int> wdist(-9, 9);
  std::size_t accepted = 0;
  bool betti_ok = true;
  std::vector<std::size_t> betti = c.ranks();
  for (std::size_t tries = 0; accepted < weights && tries < 50 * weights + 50;
       ++tries) {
    IntVec w(2 * l.n);
    for (Int& v : w) v = wdist(rng);
    try {
      WeightOrder order = make_weight_order(l, w);
      LabeledComplex ic = initial_resolution(l, order, opts.enumeration);
      bool same = ic.ranks() == betti;
      bool d2 = check_d_squared(ic);
      betti_ok = betti_ok && same && d2 && complex_is_minimal(ic);
      ++accepted;
    } catch (const NonGenericWeightError&) {
      continue;
    }
  }
  if (accepted < weights) betti_ok = false;
  std::cout << "initial-ideal Betti stability (" << accepted
            << " generic weights): " << (betti_ok ? "pass" : "FAIL") << "\n";
  ok = ok && betti_ok;

  verification["graded_exactness"] = exact_ok;
  verification["betti_stability"] = betti_ok;
  nlohmann::json j = lattice_summary(l);
  j["ranks"] = c.ranks();
  j["verification"] = std::move(verification);
  write_json(args, j);
  std::cout << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cellular resolutions of unimodular Lawrence ideals"};
  app.require_subcommand(1);

  CommonArgs check_args, circuits_args, generators_args, resolve_args,
      initial_args, fiber_args, graph_args, kd_args, verify_args;
  std::string weight_text, degree_text;
  std::size_t kd_d = 3;
  std::size_t samples = 25;
  int max_entry = 3;
  std::size_t nweights = 3;
  unsigned long seed = 2024;

  add_common(app.add_subcommand("check", "unimodularity and class group"),
             check_args);
  add_common(app.add_subcommand("circuits", "circuits of the lattice"),
             circuits_args);
  add_common(app.add_subcommand("generators", "Lawrence ideal generators"),
             generators_args);
  add_common(app.add_subcommand("resolve", "quotient-complex resolution"),
             resolve_args, true);
  CLI::App* initial_cmd =
      app.add_subcommand("initial", "resolution of an initial monomial ideal");
  add_common(initial_cmd, initial_args, true);
  initial_cmd->add_option("--weight", weight_text, "weights w1,...,w2n")
      ->required();
  CLI::App* fiber_cmd =
      app.add_subcommand("fiber", "resolution of a fiber monomial ideal");
  add_common(fiber_cmd, fiber_args);
  fiber_cmd->add_option("--degree,--fiber", degree_text, "a1,...,an/b1,...,bn")
      ->required();
  add_common(app.add_subcommand("graph", "graphic or cographic lattice data"),
             graph_args);
  CLI::App* kd_cmd =
      app.add_subcommand("kd", "ordered-partition resolution of a complete graph");
  kd_cmd->add_option("--d", kd_d, "number of vertices")->required();
  kd_cmd->add_option("--json", kd_args.json_path, "write JSON here");
  CLI::App* verify_cmd = app.add_subcommand("verify", "full property suite");
  add_common(verify_cmd, verify_args);
  verify_cmd->add_option("--samples", samples, "exactness sample count");
  verify_cmd->add_option("--max-entry", max_entry, "degree entry bound");
  verify_cmd->add_option("--weights", nweights, "generic weights to test");
  verify_cmd->add_option("--seed", seed, "sampling seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("check")) return cmd_check(check_args);
    if (app.got_subcommand("circuits")) return cmd_circuits(circuits_args);
    if (app.got_subcommand("generators")) return cmd_generators(generators_args);
    if (app.got_subcommand("resolve")) return cmd_resolve(resolve_args);
    if (app.got_subcommand("initial")) return cmd_initial(initial_args, weight_text);
    if (app.got_subcommand("fiber")) return cmd_fiber(fiber_args, degree_text);
    if (app.got_subcommand("graph")) return cmd_graph(graph_args);
    if (app.got_subcommand("kd")) return cmd_kd(kd_args, kd_d);
    if (app.got_subcommand("verify"))
      return cmd_verify(verify_args, samples, max_entry, nweights, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const NotUnimodularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotUnimodular;
  } catch (const NonGenericWeightError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonGenericWeight;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
