#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "ldsk/clique_reduction.hpp"
#include "ldsk/composition.hpp"
#include "ldsk/error.hpp"
#include "ldsk/graph.hpp"
#include "ldsk/oracles.hpp"
#include "ldsk/trace.hpp"

namespace ldsk {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  if (n < 0) throw InvalidArgument("negative vertex count in document");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    const auto pair = e.get<std::array<Vertex, 2>>();
    if (pair[0] < 0 || pair[0] >= n || pair[1] < 0 || pair[1] >= n || pair[0] == pair[1])
      throw InvalidArgument("bad edge in document");
    edges.emplace_back(pair[0], pair[1]);
  }
  return Graph::from_edges(n, edges);
}

inline Json hypergraph_to_json(const HypergraphInstance& h) { return {{"n", h.n}, {"edges", h.edges}}; }

inline HypergraphInstance hypergraph_from_json(const Json& j) {
  return make_hypergraph(j.at("n").get<int>(), j.at("edges").get<std::vector<std::array<Vertex, 3>>>());
}

template <typename F>
auto parse_document(const std::string& text, const char* what, F&& body) {
  try {
    return body(Json::parse(text));
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Kernel traces.

inline Json trace_to_json(const KernelTrace& t) {
  Json records = Json::array();
  for (const auto& r : t.records) {
    if (const auto* tw = std::get_if<TwinRemoved>(&r)) {
      records.push_back({{"rule", "twin"}, {"removed", tw->removed}, {"twins", tw->twins},
                         {"budget_delta", tw->budget_delta}});
    } else if (const auto* cq = std::get_if<CliqueRemoved>(&r)) {
      records.push_back({{"rule", "clique"}, {"trivial", cq->trivial}, {"key", cq->key}, {"removed", cq->removed},
                         {"remaining", cq->remaining}, {"tau", cq->tau}, {"budget_delta", cq->budget_delta}});
    } else {
      const auto& p = std::get<PathReplaced>(r);
      records.push_back({{"rule", "path"}, {"path", p.path}, {"sections", p.sections},
                         {"replacement", p.replacement}, {"budget_delta", p.budget_delta}});
    }
  }
  return {{"format", "ldsk-trace"},
          {"parameter", to_string(t.parameter)},
          {"original", detail::graph_to_json(t.original)},
          {"original_budget", t.original_budget},
          {"modulator", t.modulator},
          {"host", t.host},
          {"records", records},
          {"kernel_to_original", t.kernel_to_original},
          {"kernel_budget", t.kernel_budget},
          {"collapsed_to_no", t.collapsed_to_no}};
}

inline Parameter parameter_from_string(const std::string& s) {
  if (s == "cluster") return Parameter::kCluster;
  if (s == "clique") return Parameter::kClique;
  if (s == "maxleaf") return Parameter::kMaxLeaf;
  throw InvalidArgument("unknown parameter " + s);
}

inline KernelTrace trace_from_json(const Json& j) {
  if (j.value("format", "") != "ldsk-trace") throw InvalidArgument("document is not a kernel trace");
  KernelTrace t;
  t.parameter = parameter_from_string(j.at("parameter").get<std::string>());
  t.original = detail::graph_from_json(j.at("original"));
  t.original_budget = j.at("original_budget").get<int>();
  t.modulator = j.at("modulator").get<std::vector<Vertex>>();
  t.host = j.at("host").get<std::vector<Vertex>>();
  for (const auto& r : j.at("records")) {
    const auto rule = r.at("rule").get<std::string>();
    if (rule == "twin") {
      t.records.push_back(TwinRemoved{r.at("removed").get<Vertex>(), r.at("twins").get<std::vector<Vertex>>(),
                                      r.at("budget_delta").get<int>()});
    } else if (rule == "clique") {
      t.records.push_back(CliqueRemoved{r.at("trivial").get<bool>(), r.at("key").get<std::string>(),
                                        r.at("removed").get<std::vector<Vertex>>(),
                                        r.at("remaining").get<std::vector<std::vector<Vertex>>>(),
                                        r.at("tau").get<std::vector<Vertex>>(), r.at("budget_delta").get<int>()});
    } else if (rule == "path") {
      t.records.push_back(PathReplaced{r.at("path").get<std::vector<Vertex>>(), r.at("sections").get<std::vector<int>>(),
                                       r.at("replacement").get<std::array<Vertex, 5>>(),
                                       r.at("budget_delta").get<int>()});
    } else {
      throw InvalidArgument("unknown rule record " + rule);
    }
  }
  t.kernel_to_original = j.at("kernel_to_original").get<std::vector<Vertex>>();
  t.kernel_budget = j.at("kernel_budget").get<int>();
  t.collapsed_to_no = j.at("collapsed_to_no").get<bool>();
  for (Vertex v : t.kernel_to_original)
    if (v != kNoVertex && !t.original.contains(v)) throw InvalidArgument("trace maps to a vertex outside the original");
  return t;
}

inline std::string serialize_trace(const KernelTrace& t) { return trace_to_json(t).dump(2) + "\n"; }

inline KernelTrace parse_trace(const std::string& text) {
  return detail::parse_document(text, "trace", [](const Json& j) { return trace_from_json(j); });
}

inline Json report_to_json(const SizeReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"holds", c.holds()}});
  Json out = {{"vertices", r.vertices},     {"modulator_size", r.modulator_size}, {"pattern_count", r.pattern_count},
              {"path_count", r.path_count}, {"max_leaf", nullptr},                {"checks", checks},
              {"all_hold", r.all_hold()}};
  if (r.max_leaf) out["max_leaf"] = *r.max_leaf;
  return out;
}

// ---------------------------------------------------------------------------
// Gadget layouts. A layout stores the generation inputs with the role table;
// loading rebuilds the construction and insists the table matches.

using Layout = std::variant<CliqueReduction, Composition>;

inline Json layout_to_json(const Layout& layout) {
  Json out;
  const RoleTable* roles = nullptr;
  if (const auto* r = std::get_if<CliqueReduction>(&layout)) {
    out = {{"format", "ldsk-layout"},
           {"construction", "clique-reduction"},
           {"k", r->source.k},
           {"source", detail::graph_to_json(r->source.h)},
           {"vertices", r->graph.order()},
           {"budget", r->budget}};
    roles = &r->roles;
  } else {
    const auto& c = std::get<Composition>(layout);
    Json instances = Json::array();
    for (int i = 0; i < c.original_count; ++i)
      instances.push_back(detail::hypergraph_to_json(c.instances[static_cast<std::size_t>(i)]));
    out = {{"format", "ldsk-layout"},
           {"construction", "or-composition"},
           {"variant", to_string(c.variant)},
           {"instances", instances},
           {"padded_count", c.t()},
           {"vertices", c.graph.order()},
           {"budget", c.budget}};
    roles = &c.roles;
  }
  Json table = Json::object();
  for (Vertex v = 0; v < roles->size(); ++v) table[roles->name(v)] = v;
  out["roles"] = table;
  return out;
}

inline CompositionVariant variant_from_string(const std::string& s) {
  if (s == "vc") return CompositionVariant::kVertexCover;
  if (s == "clique") return CompositionVariant::kClique;
  throw InvalidArgument("unknown composition variant " + s);
}

inline Layout layout_from_json(const Json& j) {
  if (j.value("format", "") != "ldsk-layout") throw InvalidArgument("document is not a gadget layout");
  const auto kind = j.at("construction").get<std::string>();
  Layout layout;
  const RoleTable* roles = nullptr;
  if (kind == "clique-reduction") {
    layout = build_clique_reduction({detail::graph_from_json(j.at("source")), j.at("k").get<int>()});
    roles = &std::get<CliqueReduction>(layout).roles;
  } else if (kind == "or-composition") {
    std::vector<HypergraphInstance> instances;
    for (const auto& h : j.at("instances")) instances.push_back(detail::hypergraph_from_json(h));
    layout = build_or_composition(std::move(instances), variant_from_string(j.at("variant").get<std::string>()));
    roles = &std::get<Composition>(layout).roles;
  } else {
    throw InvalidArgument("unknown construction " + kind);
  }
  const auto& table = j.at("roles");
  if (static_cast<int>(table.size()) != roles->size()) throw InvalidArgument("layout role table has the wrong size");
  for (auto it = table.begin(); it != table.end(); ++it)
    if (roles->id(it.key()) != it.value().get<Vertex>())
      throw InvalidArgument("layout role " + it.key() + " does not match the regenerated construction");
  return layout;
}

inline std::string serialize_layout(const Layout& layout) { return layout_to_json(layout).dump(2) + "\n"; }

inline Layout parse_layout(const std::string& text) {
  return detail::parse_document(text, "layout", [](const Json& j) { return layout_from_json(j); });
}

inline const Graph& layout_graph(const Layout& layout) {
  return std::visit([](const auto& x) -> const Graph& { return x.graph; }, layout);
}

inline int layout_budget(const Layout& layout) {
  return std::visit([](const auto& x) { return x.budget; }, layout);
}

}  // namespace ldsk
