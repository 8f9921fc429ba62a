// mwcut: command-line front end for the multiway cut solvers.

#include "mwcut/mwcut.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mwcut;
using json = nlohmann::ordered_json;

enum Exit { kYes = 0, kNo = 1, kInputError = 2, kInternalError = 3 };

template <class F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin, std::string("stdin"));
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return f(in, path);
}

template <class F>
void with_output(const std::string& path, F&& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  f(out);
}

io::GraphFile read_graph(const std::string& path) {
  return with_input(path, [](std::istream& in, const std::string& src) { return io::parse_graph(in, src); });
}

json exact(const Rational& r) { return {{"exact", r.str()}, {"decimal", r.to_double()}}; }

std::string join(const VertexSet& s) {
  std::string out;
  for (VertexId v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out.empty() ? "-" : out;
}

struct SolveFlags {
  std::string input;
  std::string mode = "above-lp";
  std::optional<std::int64_t> k;
  std::string trace;
  bool verify = false;
  bool json = false;
  bool max_degree = false;
  bool check = false;

  SolverOptions options(Trace* t) const {
    SolverOptions opt;
    opt.mode = *parse_mode(mode);
    opt.policy = max_degree ? BranchPolicy::MaxDegree : BranchPolicy::SmallestId;
    opt.check_invariants = check;
    opt.trace = trace.empty() ? nullptr : t;
    return opt;
  }

  std::int64_t budget(const std::optional<std::int64_t>& from_file) const {
    if (k) return *k;
    if (from_file) return *from_file;
    throw InputError("no budget: pass --k or put a 'k' line in the input");
  }
};

void add_solve_flags(CLI::App* cmd, SolveFlags& f, const char* input_help) {
  cmd->add_option("input", f.input, input_help)->required();
  cmd->add_option("--mode", f.mode, "above-lp, above-cut or standard")
      ->check(CLI::IsMember({"above-lp", "above-cut", "standard"}));
  cmd->add_option("--k", f.k, "budget (overrides a 'k' line in the input)");
  cmd->add_option("--trace", f.trace, "write the reduction/branching log here");
  cmd->add_flag("--verify", f.verify, "cross-check the verdict with brute force when small enough");
  cmd->add_flag("--json", f.json, "machine-readable report");
  cmd->add_flag("--max-degree", f.max_degree, "branch on the highest-degree terminal neighbour");
  cmd->add_flag("--check", f.check, "recompute pp around every rule and branch");
}

/// Adds LP, pp and lpcon of the instance actually searched.
void describe_nmc(json& r, const Instance& inst) {
  if (detail::adjacent_terminals(inst)) {
    r["lp"] = nullptr;
    r["pp"] = nullptr;
    r["lpcon"] = nullptr;
    return;
  }
  Rational lp = lp_value(inst);
  r["lp"] = exact(lp);
  r["pp"] = exact(Rational(inst.k) - lp);
  if (inst.terminals.size() >= 2) {
    r["lpcon"] = lpcon(inst);
  } else {
    r["lpcon"] = nullptr;
  }
}

void add_stats(json& r, const SolveStats& s) {
  r["nodes"] = s.nodes;
  r["max_depth"] = s.max_depth;
  r["lp_solves"] = s.lp.solves;
  r["seconds"] = s.seconds;
}

/// Runs the oracle; records "agree", "skipped: ..." or throws on disagreement.
template <class F>
void verify(json& r, bool enabled, bool verdict, F&& oracle) {
  if (!enabled) return;
  try {
    bool expected = oracle();
    if (expected != verdict) {
      throw ConsistencyError(std::string("brute force says ") + (expected ? "YES" : "NO") + ", solver says " +
                             (verdict ? "YES" : "NO"));
    }
    r["verify"] = "agree";
  } catch (const oracle::LimitExceeded& e) {
    std::cerr << "warning: verification skipped: " << e.what() << '\n';
    r["verify"] = std::string("skipped: ") + e.what();
  }
}

void print_report(const json& r, bool as_json) {
  if (as_json) {
    std::cout << r.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : r.items()) {
    std::cout << key << ": ";
    if (value.is_null()) {
      std::cout << "n/a";
    } else if (value.is_object() && value.contains("exact")) {
      std::cout << value["exact"].get<std::string>();
    } else if (value.is_string()) {
      std::cout << value.get<std::string>();
    } else if (value.is_array()) {
      std::string line;
      for (const auto& x : value) line += (line.empty() ? "" : " ") + (x.is_string() ? x.get<std::string>() : x.dump());
      std::cout << (line.empty() ? "-" : line);
    } else {
      std::cout << value.dump();
    }
    std::cout << '\n';
  }
}

void write_trace(const SolveFlags& f, const Trace& t) {
  if (f.trace.empty()) return;
  with_output(f.trace, [&](std::ostream& out) { t.write(out); });
}

int finish(const json& r, const SolveFlags& f, const Trace& t, bool yes) {
  write_trace(f, t);
  print_report(r, f.json);
  return yes ? kYes : kNo;
}

int cmd_solve_nmc(const SolveFlags& f) {
  io::GraphFile file = read_graph(f.input);
  Instance inst = file.instance;
  inst.k = f.budget(file.has_k ? std::optional(inst.k) : std::nullopt);
  Trace trace;
  SolveResult res = solve(inst, f.options(&trace));
  json r;
  r["problem"] = "nmc";
  r["mode"] = f.mode;
  r["verdict"] = res.yes ? "yes" : "no";
  r["k"] = inst.k;
  r["witness"] = res.yes ? json(std::vector<VertexId>(res.witness.begin(), res.witness.end())) : json(nullptr);
  describe_nmc(r, inst);
  add_stats(r, res.stats);
  verify(r, f.verify, res.yes, [&] { return oracle::brute_nmc_decide(inst); });
  return finish(r, f, trace, res.yes);
}

int cmd_solve_emc(const SolveFlags& f) {
  io::GraphFile file = read_graph(f.input);
  const Instance& in = file.instance;
  std::int64_t k = f.budget(file.has_k ? std::optional(in.k) : std::nullopt);
  Trace trace;
  EdgeMwcResult res = solve_edge_mwc(in.graph, in.terminals, k, f.options(&trace));
  json r;
  r["problem"] = "emc";
  r["mode"] = f.mode;
  r["verdict"] = res.yes ? "yes" : "no";
  r["k"] = k;
  if (res.yes) {
    json edges = json::array();
    for (auto [u, v] : res.edges) edges.push_back(std::to_string(u) + "-" + std::to_string(v));
    r["witness"] = edges;
  } else {
    r["witness"] = nullptr;
  }
  describe_nmc(r, edge_mwc_to_node_mwc(in.graph, in.terminals, k).instance);
  add_stats(r, res.nmc.stats);
  verify(r, f.verify, res.yes, [&] {
    return static_cast<std::int64_t>(oracle::brute_edge_mwc(in.graph, in.terminals)) <= k;
  });
  return finish(r, f, trace, res.yes);
}

int cmd_solve_vcamm(const SolveFlags& f) {
  io::GraphFile file = read_graph(f.input);
  if (!file.instance.terminals.empty()) throw InputError(f.input + ": vertex cover input takes no 't' lines");
  VcAmmInstance in{file.instance.graph, f.budget(file.has_k ? std::optional(file.instance.k) : std::nullopt)};
  Trace trace;
  VcAmmResult res = solve_vcamm(in, f.options(&trace));
  json r;
  r["problem"] = "vcamm";
  r["mode"] = f.mode;
  r["verdict"] = res.yes ? "yes" : "no";
  r["k"] = in.k;
  r["matching"] = res.matching;
  r["witness"] = res.yes ? json(std::vector<VertexId>(res.cover.begin(), res.cover.end())) : json(nullptr);
  describe_nmc(r, vcamm_to_nmc(in).instance);
  add_stats(r, res.nmc.stats);
  verify(r, f.verify, res.yes, [&] {
    return static_cast<std::int64_t>(oracle::brute_vc(in.graph)) <= static_cast<std::int64_t>(res.matching) + in.k;
  });
  return finish(r, f, trace, res.yes);
}

int cmd_solve_asat(const SolveFlags& f) {
  Formula2CNF phi =
      with_input(f.input, [](std::istream& in, const std::string& src) { return io::parse_cnf(in, src); });
  if (!f.k) throw InputError("solve-asat needs --k");
  std::int64_t k = *f.k;
  Trace trace;
  AsatResult res = solve_asat(phi, k, f.options(&trace));
  json r;
  r["problem"] = "asat";
  r["mode"] = f.mode;
  r["verdict"] = res.yes ? "yes" : "no";
  r["k"] = k;
  if (res.yes) {
    json assignment = json::array();
    for (std::uint32_t x = 1; x <= phi.variables; ++x) {
      assignment.push_back(res.assignment[x] ? static_cast<std::int64_t>(x) : -static_cast<std::int64_t>(x));
    }
    r["assignment"] = assignment;
    json violated = json::array();
    for (std::size_t c : res.violated) violated.push_back(c + 1);
    r["violated_clauses"] = violated;
  } else {
    r["assignment"] = nullptr;
  }
  describe_nmc(r, vcamm_to_nmc(asat_to_vcamm(phi, k).vcamm).instance);
  add_stats(r, res.vcamm.nmc.stats);
  verify(r, f.verify, res.yes, [&] { return oracle::brute_asat(phi, k); });
  return finish(r, f, trace, res.yes);
}

struct LpFlags {
  std::string input;
  std::string pairs;
  std::vector<VertexId> pins;
  bool json = false;
};

int cmd_lp(const LpFlags& f) {
  io::GraphFile file = read_graph(f.input);
  const Instance& inst = file.instance;
  DemandSet demands = file.demands;
  if (!f.pairs.empty()) {
    demands = with_input(f.pairs, [](std::istream& in, const std::string& src) { return io::parse_demands(in, src); });
  }
  bool all_pairs = demands.pairs.empty();
  VertexSet terminals = inst.terminals;
  if (all_pairs) {
    demands = DemandSet::all_pairs(terminals);
  } else {
    for (VertexId v : demands.endpoints()) {
      if (!inst.graph.has_vertex(v)) throw InputError("demand endpoint " + std::to_string(v) + " is not a vertex");
      terminals.insert(v);
    }
  }
  VertexSet pins(f.pins.begin(), f.pins.end());
  for (VertexId v : pins) {
    if (!inst.graph.has_vertex(v)) throw InputError("pinned vertex " + std::to_string(v) + " is not a vertex");
  }
  auto lp = solve_lp(inst.graph, terminals, demands, pins);
  json r;
  if (!lp) {
    r["value"] = "infeasible";
    print_report(r, f.json);
    return kNo;
  }
  Assignment shown = all_pairs ? round_half_integral(inst.graph, terminals, lp->assignment) : lp->assignment;
  if (f.json) {
    r["value"] = exact(lp->value);
    json asg = json::object();
    for (const auto& [v, d] : shown) asg[std::to_string(v)] = d.str();
    r["assignment"] = asg;
    std::cout << r.dump(2) << '\n';
  } else {
    std::cout << "value: " << lp->value << '\n';
    for (const auto& [v, d] : shown) std::cout << v << " = " << d << '\n';
  }
  return kYes;
}

struct ReduceFlags {
  std::string input;
  std::string mode = "above-lp";
  std::optional<std::int64_t> k;
  bool json = false;
};

int cmd_reduce(const ReduceFlags& f) {
  io::GraphFile file = read_graph(f.input);
  Instance inst = file.instance;
  if (f.k) {
    inst.k = *f.k;
  } else if (!file.has_k) {
    throw InputError("no budget: pass --k or put a 'k' line in the input");
  }
  ReductionResult red = reduce_exhaustively(inst, {*parse_mode(f.mode)});
  std::ostringstream trace;
  red.trace.write(trace);
  std::ostringstream reduced;
  io::write_graph(reduced, red.instance);
  std::string verdict = "irreducible";
  if (red.verdict == Verdict::Yes) verdict = "yes";
  if (red.verdict == Verdict::No) {
    verdict = "no (" + std::string(step_name(red.trace.entries.back().step)) + ")";
  }
  TerminalBound bound = terminal_bound_stats(red.instance);
  if (f.json) {
    json r;
    r["verdict"] = verdict;
    if (red.verdict == Verdict::Yes) r["witness"] = std::vector<VertexId>(red.witness.begin(), red.witness.end());
    r["deleted"] = std::vector<VertexId>(red.deleted.begin(), red.deleted.end());
    r["trace"] = trace.str();
    if (red.verdict == Verdict::Continue) {
      r["terminals"] = bound.terminals;
      r["twice_k"] = bound.twice_k;
      r["terminal_bound_holds"] = bound.holds;
      r["instance"] = reduced.str();
    }
    std::cout << r.dump(2) << '\n';
  } else {
    std::cout << "verdict: " << verdict << '\n';
    if (red.verdict == Verdict::Yes) std::cout << "witness: " << join(red.witness) << '\n';
    std::cout << "deleted: " << join(red.deleted) << '\n';
    if (red.verdict == Verdict::Continue) {
      std::cout << "terminals: " << bound.terminals << (bound.holds ? " <= " : " > ") << bound.twice_k << " (2k)\n";
    }
    std::cout << "trace:\n" << trace.str();
    if (red.verdict == Verdict::Continue) std::cout << "instance:\n" << reduced.str();
  }
  return red.verdict == Verdict::No ? kNo : kYes;
}

int cmd_gen_gadget(const std::string& input, const std::string& output) {
  MisInstance mis = with_input(input, [](std::istream& in, const std::string& src) { return io::parse_mis(in, src); });
  MulticutGadget gad = gen_multicut_gadget(mis);
  Instance as_graph{gad.instance.graph, gad.instance.terminals(), gad.instance.k};
  with_output(output, [&](std::ostream& out) {
    out << "# node multicut gadget: " << mis.graph.vertex_count() << " vertices, " << mis.parts.size()
        << " parts, LP = " << gad.instance.k << '\n';
    io::write_graph(out, as_graph, true, &gad.instance.pairs);
  });
  return kYes;
}

struct RandomFlags {
  std::size_t n = 8;
  std::size_t terminals = 3;
  std::string density = "1/3";
  std::int64_t k = 2;
  std::uint64_t seed = 1;
  bool connected = false;
  bool separate = false;
  std::string output;
};

int cmd_gen_random(const RandomFlags& f) {
  Rational p = Rational::parse(f.density);
  if (p.sign() < 0 || p > Rational(1) || !p.is_small()) throw InputError("--density must be a fraction in [0, 1]");
  if (f.terminals > f.n) throw InputError("--terminals exceeds --n");
  RandomInstanceParams params;
  params.vertices = f.n;
  params.terminals = f.terminals;
  params.edge_num = static_cast<std::uint64_t>(p.numerator());
  params.edge_den = static_cast<std::uint64_t>(p.denominator());
  params.k = f.k;
  params.connected = f.connected;
  params.separate_terminals = f.separate;
  Rng rng(f.seed);
  Instance inst = random_instance(params, rng);
  with_output(f.output, [&](std::ostream& out) {
    out << "# random instance, seed " << f.seed << '\n';
    io::write_graph(out, inst);
  });
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for node multiway cut above the LP bound"};
  app.require_subcommand(1);

  SolveFlags nmc, emc, vcamm, asat;
  add_solve_flags(app.add_subcommand("solve-nmc", "node multiway cut"), nmc, "graph file or -");
  add_solve_flags(app.add_subcommand("solve-emc", "edge multiway cut via the line graph"), emc, "graph file or -");
  add_solve_flags(app.add_subcommand("solve-vcamm", "vertex cover above maximum matching"), vcamm,
                  "graph file (no terminals) or -");
  add_solve_flags(app.add_subcommand("solve-asat", "almost 2-SAT"), asat, "DIMACS CNF file or -");

  LpFlags lp;
  auto* lp_cmd = app.add_subcommand("lp", "exact LP relaxation value and half-integral optimum");
  lp_cmd->add_option("input", lp.input, "graph file or -")->required();
  lp_cmd->add_option("--pairs", lp.pairs, "demand file with 'd u v' lines");
  lp_cmd->add_option("--pin", lp.pins, "vertices forced to weight 0")->delimiter(',');
  lp_cmd->add_flag("--json", lp.json, "machine-readable report");

  ReduceFlags rd;
  auto* reduce_cmd = app.add_subcommand("reduce", "apply the reduction rules exhaustively");
  reduce_cmd->add_option("input", rd.input, "graph file or -")->required();
  reduce_cmd->add_option("--mode", rd.mode, "above-lp, above-cut or standard")
      ->check(CLI::IsMember({"above-lp", "above-cut", "standard"}));
  reduce_cmd->add_option("--k", rd.k, "budget (overrides a 'k' line in the input)");
  reduce_cmd->add_flag("--json", rd.json, "machine-readable report");

  std::string gadget_in, gadget_out;
  auto* gadget_cmd = app.add_subcommand("gen-gadget", "multicut instance with pp = 0 from a multicoloured IS instance");
  gadget_cmd->add_option("input", gadget_in, "MIS file or -")->required();
  gadget_cmd->add_option("-o,--output", gadget_out, "output file (default stdout)");

  RandomFlags rnd;
  auto* random_cmd = app.add_subcommand("gen-random", "seeded random instance");
  random_cmd->add_option("--n", rnd.n, "vertices");
  random_cmd->add_option("--terminals", rnd.terminals, "terminals");
  random_cmd->add_option("--density", rnd.density, "edge probability as p/q");
  random_cmd->add_option("--k", rnd.k, "budget written to the file");
  random_cmd->add_option("--seed", rnd.seed, "random seed");
  random_cmd->add_flag("--connected", rnd.connected, "add edges until connected");
  random_cmd->add_flag("--separate", rnd.separate, "no edge between two terminals");
  random_cmd->add_option("-o,--output", rnd.output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (app.got_subcommand("solve-nmc")) return cmd_solve_nmc(nmc);
    if (app.got_subcommand("solve-emc")) return cmd_solve_emc(emc);
    if (app.got_subcommand("solve-vcamm")) return cmd_solve_vcamm(vcamm);
    if (app.got_subcommand("solve-asat")) return cmd_solve_asat(asat);
    if (app.got_subcommand("lp")) return cmd_lp(lp);
    if (app.got_subcommand("reduce")) return cmd_reduce(rd);
    if (app.got_subcommand("gen-gadget")) return cmd_gen_gadget(gadget_in, gadget_out);
    if (app.got_subcommand("gen-random")) return cmd_gen_random(rnd);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}
