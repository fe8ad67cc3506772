// ldsk: command-line front end for the locating-dominating set toolkit.
//
// Exit codes: 0 success or YES, 1 NO or failed verification, 2 usage or I/O.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ldsk/ldsk.hpp"

namespace {

using namespace ldsk;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;

/// A verified negative answer, reported with exit code 1.
struct NoAnswer {
  std::string message;
};

void write_or_print(const std::optional<std::string>& path, const std::string& text) {
  if (path)
    detail::write_file(*path, text);
  else
    std::cout << text;
}

Parameter parse_parameter(const std::string& s) { return parameter_from_string(s); }

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string graph;
  std::optional<int> budget;
  std::optional<std::string> out;
};

int run_solve(const SolveArgs& a) {
  const Graph g = read_graph(a.graph);
  if (a.budget) {
    if (auto d = solve_exact(g, *a.budget)) {
      std::cout << "YES " << d->size() << "\n";
      if (a.out) write_code_set(*a.out, *d);
      return kExitOk;
    }
    std::cout << "NO\n";
    return kExitNo;
  }
  const auto d = solve_exact(g);
  std::cout << "lds " << d->size() << "\n";
  if (a.out) write_code_set(*a.out, *d);
  return kExitOk;
}

struct VerifyArgs {
  std::string graph, solution;
  std::optional<int> budget;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = read_graph(a.graph);
  const CodeSet d = read_code_set(a.solution);
  for (Vertex v : d)
    if (!g.contains(v)) throw InvalidArgument("solution vertex " + std::to_string(v) + " not in graph");
  const Verdict verdict = is_locating_dominating(g, d);
  if (!verdict.ok()) {
    std::cout << "INVALID " << verdict.describe() << "\n";
    return kExitNo;
  }
  if (a.budget && static_cast<int>(d.size()) > *a.budget) {
    std::cout << "INVALID size " << d.size() << " exceeds budget " << *a.budget << "\n";
    return kExitNo;
  }
  std::cout << "VALID " << d.size() << "\n";
  return kExitOk;
}

struct KernelizeArgs {
  std::string graph;
  int budget = 0;
  std::string param;
  std::optional<std::string> modulator, host, out;
  std::optional<int> max_leaf;
};

int run_kernelize(const KernelizeArgs& a) {
  const Graph g = read_graph(a.graph);
  KernelizeOptions options;
  if (a.modulator) options.modulator = parse_vertex_list(detail::read_file(*a.modulator));
  if (a.host) options.host = parse_vertex_list(detail::read_file(*a.host));
  options.max_leaf = a.max_leaf;
  const KernelResult r = kernelize({g, a.budget}, parse_parameter(a.param), options);
  const Json report = report_to_json(r.report);
  if (a.out) {
    write_graph(*a.out + ".graph", r.instance.graph);
    detail::write_file(*a.out + ".budget", std::to_string(r.instance.budget) + "\n");
    detail::write_file(*a.out + ".trace.json", serialize_trace(r.trace));
    detail::write_file(*a.out + ".report.json", report.dump(2) + "\n");
  }
  std::cout << "kernel vertices " << r.instance.graph.order() << " edges " << r.instance.graph.size() << " budget "
            << r.instance.budget << (r.trace.collapsed_to_no ? " (canonical NO instance)" : "") << "\n";
  std::cout << "records " << r.trace.records.size() << " bounds " << (r.report.all_hold() ? "hold" : "VIOLATED")
            << "\n";
  if (!a.out) std::cout << serialize_graph(r.instance.graph);
  return r.report.all_hold() ? kExitOk : kExitNo;
}

struct LiftArgs {
  std::string trace, solution;
  std::optional<std::string> out;
};

int run_lift(const LiftArgs& a) {
  const KernelTrace trace = parse_trace(detail::read_file(a.trace));
  const CodeSet kernel_solution = read_code_set(a.solution);
  CodeSet lifted;
  try {
    lifted = lift_solution(trace, kernel_solution);
  } catch (const InternalError& e) {
    throw NoAnswer{std::string("lifted set failed verification: ") + e.what()};
  }
  std::cout << "lifted " << lifted.size() << " budget " << trace.original_budget
            << (static_cast<int>(lifted.size()) <= trace.original_budget ? " within" : " exceeded") << "\n";
  write_or_print(a.out, serialize_code_set(lifted));
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string graph;
  int k = 2;
  std::vector<std::string> hypergraphs;
  std::string variant = "vc";
  int n = 10;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::string out;
};

void write_instance(const std::string& prefix, const Layout& layout) {
  write_graph(prefix + ".graph", layout_graph(layout));
  detail::write_file(prefix + ".budget", std::to_string(layout_budget(layout)) + "\n");
  detail::write_file(prefix + ".layout.json", serialize_layout(layout));
}

int run_generate_clique(const GenerateArgs& a) {
  CliqueReduction r = build_clique_reduction({read_graph(a.graph), a.k});
  write_instance(a.out, Layout{r});
  std::cout << "vertices " << r.graph.order() << " budget " << r.budget << " cover " << clique_cover(r).size() << "\n";
  if (r.source.h.order() <= kCliqueOracleCap && r.h_edges.size() >= 2)
    if (auto clique = solve_clique_exact(r.source.h, a.k)) {
      write_code_set(a.out + ".solution", canonical_solution_from_clique(r, *clique));
      std::cout << "canonical solution written for clique " << join(*clique) << "\n";
    }
  return kExitOk;
}

int run_generate_composition(const GenerateArgs& a) {
  std::vector<HypergraphInstance> instances;
  for (const auto& path : a.hypergraphs) instances.push_back(read_hypergraph(path));
  Composition c = build_or_composition(std::move(instances), variant_from_string(a.variant));
  write_instance(a.out, Layout{c});
  std::cout << "vertices " << c.graph.order() << " budget " << c.budget << " instances " << c.t() << " h " << c.h
            << "\n";
  if (c.n <= kBicoloringCap)
    for (int i = 0; i < c.t(); ++i)
      if (auto phi = solve_bicoloring_exact(c.instances[static_cast<std::size_t>(i)])) {
        write_code_set(a.out + ".solution", solution_from_bicoloring(c, i, *phi));
        std::cout << "solution written from a bicoloring of instance " << i << "\n";
        break;
      }
  return kExitOk;
}

int run_generate_random(const GenerateArgs& a) {
  if (a.n < 0) throw InvalidArgument("vertex count must be non-negative");
  if (a.p < 0.0 || a.p > 1.0) throw InvalidArgument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(a.seed);
  std::bernoulli_distribution coin(a.p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a.n; ++u)
    for (Vertex v = u + 1; v < a.n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  write_graph(a.out, Graph::from_edges(a.n, edges));
  std::cout << "vertices " << a.n << " edges " << edges.size() << " seed " << a.seed << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct StatsArgs {
  std::string graph;
};

int run_stats(const StatsArgs& a) {
  const Graph g = read_graph(a.graph);
  std::cout << "n " << g.order() << "\nm " << g.size() << "\n";
  const TwinClasses twins = twin_classes(g);
  std::map<std::size_t, int> histogram;
  for (const auto& c : twins.classes) ++histogram[c.members.size()];
  std::cout << "twin classes";
  for (auto [size, count] : histogram) std::cout << " " << size << ":" << count;
  std::cout << "\ncluster modulator " << cluster_modulator_3approx(g).size() << "\nclique modulator "
            << clique_modulator_2approx(g).size() << "\n";
  if (g.order() == 0) return kExitOk;
  const HostDecomposition dec = host_decomposition(g);
  std::map<int, int> census;
  for (const auto& p : dec.paths) ++census[p.size()];
  std::cout << "host " << dec.host.size() << "\npaths " << dec.paths.size();
  for (auto [len, count] : census) std::cout << " " << len << ":" << count;
  std::cout << "\n";
  bool has_degree_two = false;
  for (Vertex v = 0; v < g.order(); ++v) has_degree_two = has_degree_two || g.degree(v) == 2;
  if (has_degree_two && is_connected(g) && g.order() >= 2 && g.order() <= kDefaultMaxLeafCap) {
    const int k = max_leaf_number_exact(g);
    std::cout << "max leaf " << k << "\npath bound " << dec.paths.size() << " <= " << p2_bound(k) << " "
              << (check_p2_bound(g, k) ? "holds" : "VIOLATED") << "\n";
  }
  return kExitOk;
}

struct AuditArgs {
  std::string layout, solution;
};

int run_audit(const AuditArgs& a) {
  const Layout layout = parse_layout(detail::read_file(a.layout));
  const CodeSet d = read_code_set(a.solution);
  const Graph& g = layout_graph(layout);
  for (Vertex v : d)
    if (!g.contains(v)) throw InvalidArgument("solution vertex " + std::to_string(v) + " not in graph");
  const Verdict verdict = is_locating_dominating(g, d);
  std::cout << "locating-dominating " << (verdict.ok() ? "yes" : "no (" + verdict.describe() + ")") << "\nsize "
            << d.size() << " budget " << layout_budget(layout) << "\n";
  bool ok = verdict.ok() && static_cast<int>(d.size()) <= layout_budget(layout);
  if (const auto* c = std::get_if<Composition>(&layout)) {
    const AuditReport report = audit_observations(*c, d);
    for (const auto& check : report.checks)
      std::cout << (check.holds ? "pass " : "FAIL ") << check.name << "\n";
    std::cout << "selector intersection " << report.selector_intersection << " (bound " << report.selector_bound
              << ")\n";
    ok = ok && report.all_hold();
    if (ok) {
      const auto ex = extract_bicoloring(*c, d);
      std::cout << "instance " << ex.instance << " coloring";
      for (int x : ex.phi) std::cout << " " << (x == 0 ? "alpha" : "beta");
      std::cout << "\n";
    }
  } else if (ok) {
    const auto& r = std::get<CliqueReduction>(layout);
    std::cout << "clique " << join(extract_clique_from_solution(r, d)) << "\n";
  }
  std::cout << (ok ? "audit passed\n" : "audit FAILED\n");
  return ok ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locating-dominating set solver, kernelizer and instance generator"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "Exact minimum locating-dominating set");
  c_solve->add_option("graph", solve.graph, "Graph file")->required();
  c_solve->add_option("--budget,-d", solve.budget, "Decide size <= d instead of optimizing");
  c_solve->add_option("--out,-o", solve.out, "Write the solution here");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check a solution file against a graph");
  c_verify->add_option("graph", verify.graph, "Graph file")->required();
  c_verify->add_option("solution", verify.solution, "Solution file")->required();
  c_verify->add_option("--budget,-d", verify.budget, "Also require size <= d");

  KernelizeArgs kern;
  auto* c_kern = app.add_subcommand("kernelize", "Apply a kernel and write kernel, budget, trace and report");
  c_kern->add_option("graph", kern.graph, "Graph file")->required();
  c_kern->add_option("--budget,-d", kern.budget, "Budget d")->required();
  c_kern->add_option("--param,-p", kern.param, "cluster | clique | maxleaf")
      ->required()
      ->check(CLI::IsMember({"cluster", "clique", "maxleaf"}));
  c_kern->add_option("--modulator", kern.modulator, "Modulator file (cluster/clique)");
  c_kern->add_option("--host", kern.host, "Host vertex file (maxleaf)");
  c_kern->add_option("--max-leaf", kern.max_leaf, "Known max leaf number for the size check");
  c_kern->add_option("--out,-o", kern.out, "Output prefix");

  LiftArgs lift;
  auto* c_lift = app.add_subcommand("lift", "Map a kernel solution back through a trace");
  c_lift->add_option("trace", lift.trace, "Trace file")->required();
  c_lift->add_option("solution", lift.solution, "Kernel solution file")->required();
  c_lift->add_option("--out,-o", lift.out, "Write the lifted solution here");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "Generate instances");
  c_gen->require_subcommand(1);
  auto* g_clique = c_gen->add_subcommand("clique-reduction", "LDS instance from a Clique instance");
  g_clique->add_option("graph", gen.graph, "Graph H")->required();
  g_clique->add_option("-k", gen.k, "Clique size")->required();
  g_clique->add_option("--out,-o", gen.out, "Output prefix")->required();
  auto* g_comp = c_gen->add_subcommand("or-composition", "OR-composition of hypergraph bicoloring instances");
  g_comp->add_option("hypergraphs", gen.hypergraphs, "Hypergraph files")->required();
  g_comp->add_option("--variant", gen.variant, "vc | clique")->check(CLI::IsMember({"vc", "clique"}));
  g_comp->add_option("--out,-o", gen.out, "Output prefix")->required();
  auto* g_random = c_gen->add_subcommand("random", "Random G(n, p) graph");
  g_random->add_option("--n,-n", gen.n, "Vertex count");
  g_random->add_option("--p,-p", gen.p, "Edge probability");
  g_random->add_option("--seed", gen.seed, "Random seed");
  g_random->add_option("--out,-o", gen.out, "Output graph file")->required();

  StatsArgs stats;
  auto* c_stats = app.add_subcommand("stats", "Graph statistics");
  c_stats->add_option("graph", stats.graph, "Graph file")->required();

  AuditArgs audit;
  auto* c_audit = app.add_subcommand("audit", "Audit a solution of a generated instance");
  c_audit->add_option("layout", audit.layout, "Layout file")->required();
  c_audit->add_option("solution", audit.solution, "Solution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_solve->parsed()) return run_solve(solve);
    if (c_verify->parsed()) return run_verify(verify);
    if (c_kern->parsed()) return run_kernelize(kern);
    if (c_lift->parsed()) return run_lift(lift);
    if (g_clique->parsed()) return run_generate_clique(gen);
    if (g_comp->parsed()) return run_generate_composition(gen);
    if (g_random->parsed()) return run_generate_random(gen);
    if (c_stats->parsed()) return run_stats(stats);
    if (c_audit->parsed()) return run_audit(audit);
  } catch (const NoAnswer& e) {
    std::cerr << "ldsk: " << e.message << "\n";
    return kExitNo;
  } catch (const InternalError& e) {
    std::cerr << "ldsk: internal error: " << e.what() << "\n";
    return kExitNo;
  } catch (const std::exception& e) {
    std::cerr << "ldsk: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
