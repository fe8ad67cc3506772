#include <gtest/gtest.h>

#include <random>

#include "ldsk/clique_reduction.hpp"
#include "ldsk/composition.hpp"
#include "ldsk/oracles.hpp"
#include "support/oracles.hpp"

using namespace ldsk;
using namespace ldsk::testing;

namespace {

// Every proper bicoloring by plain enumeration.
std::vector<Coloring> all_bicolorings(const HypergraphInstance& h) {
  std::vector<Coloring> out;
  for (Mask m = 0; m < (Mask{1} << h.n); ++m) {
    Coloring phi(static_cast<std::size_t>(h.n));
    for (int v = 0; v < h.n; ++v) phi[static_cast<std::size_t>(v)] = static_cast<int>(m >> v & 1);
    bool ok = true;
    for (const auto& e : h.edges) {
      const int s = phi[static_cast<std::size_t>(e[0])] + phi[static_cast<std::size_t>(e[1])] +
                    phi[static_cast<std::size_t>(e[2])];
      ok = ok && s != 0 && s != 3;
    }
    if (ok) out.push_back(phi);
  }
  return out;
}

HypergraphInstance fano() {
  return make_hypergraph(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

int expected_reduction_order(int n, int m, int k) { return k * n + 8 * k + static_cast<int>(binomial2(k)) * (4 * m + 7); }

}  // namespace

TEST(CliqueReduction, SizesAndBudget) {
  struct Case {
    Graph h;
    int k, order, budget;
  };
  // Orders from the gadget inventory, budgets from 4k + C(k,2)(2M+1).
  const std::vector<Case> cases{{path_graph(3), 2, 37, 13},
                                {complete_graph(3), 3, 90, 33},
                                {complete_graph(4), 3, 129, 51},
                                {complete_graph(2), 2, 31, 11}};
  for (const auto& c : cases) {
    const auto r = build_clique_reduction({c.h, c.k});
    EXPECT_EQ(r.graph.order(), c.order);
    EXPECT_EQ(r.graph.order(), expected_reduction_order(c.h.order(), c.h.size(), c.k));
    EXPECT_EQ(r.budget, c.budget);
    EXPECT_EQ(r.roles.size(), r.graph.order());
    EXPECT_EQ(static_cast<int>(clique_cover(r).size()), c.k + 5 * c.k + 7 * static_cast<int>(binomial2(c.k)));
  }
}

TEST(CliqueReduction, RejectsDegenerateInputs) {
  EXPECT_THROW(build_clique_reduction({complete_graph(3), 1}), InvalidArgument);
  EXPECT_THROW(build_clique_reduction({Graph::from_edges(3, std::vector<Edge>{{0, 1}}), 2}), InvalidArgument);
}

TEST(CliqueReduction, EdgeVerticesSeeTheirEndpoints) {
  const auto r = build_clique_reduction({complete_graph(4), 3});
  for (const auto& p : r.pairs)
    for (auto [u, v] : r.h_edges)
      for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
        const Vertex e = r.edge_vertex(p, a, b);
        EXPECT_TRUE(r.graph.adjacent(e, r.copies[static_cast<std::size_t>(p.i)][static_cast<std::size_t>(a)]));
        EXPECT_TRUE(r.graph.adjacent(e, r.copies[static_cast<std::size_t>(p.j)][static_cast<std::size_t>(b)]));
        EXPECT_FALSE(r.graph.adjacent(e, r.copies[static_cast<std::size_t>(p.i)][static_cast<std::size_t>(b)]));
      }
  EXPECT_EQ(r.roles.id("e(0,1;1,2)"), r.edge_vertex(r.pair(0, 1), 0, 1));
  EXPECT_THROW(r.pair(2, 0), InvalidArgument);
  const auto p3 = build_clique_reduction({path_graph(3), 2});
  EXPECT_THROW(p3.edge_vertex(p3.pairs.front(), 0, 2), InvalidArgument);
}

TEST(CliqueReduction, CanonicalSolutionsRoundTrip) {
  for (const auto& [h, k] : std::vector<std::pair<Graph, int>>{
           {path_graph(3), 2}, {complete_graph(3), 2}, {complete_graph(3), 3}, {complete_graph(4), 2}, {complete_graph(4), 3}}) {
    const auto r = build_clique_reduction({h, k});
    // Every ordered k-clique of H.
    for_each_subset(h.order(), k, [&](Mask m) {
      std::vector<Vertex> clique = mask_vertices(m);
      if (!is_clique(h, clique)) return true;
      do {
        const CodeSet d = canonical_solution_from_clique(r, clique);
        EXPECT_EQ(static_cast<int>(d.size()), r.budget);
        EXPECT_TRUE(is_locating_dominating(r.graph, d).ok());
        EXPECT_EQ(extract_clique_from_solution(r, d), clique);
      } while (std::next_permutation(clique.begin(), clique.end()));
      return true;
    });
  }
}

TEST(CliqueReduction, CanonicalSolutionRejectsNonCliques) {
  const auto r = build_clique_reduction({path_graph(3), 2});
  EXPECT_THROW(canonical_solution_from_clique(r, {0, 2}), InvalidArgument);
  EXPECT_THROW(canonical_solution_from_clique(r, {0}), InvalidArgument);
  EXPECT_THROW(canonical_solution_from_clique(r, {1, 1}), InvalidArgument);
}

TEST(CliqueReduction, ExtractionRejectsNonCanonicalSets) {
  const auto r = build_clique_reduction({path_graph(3), 2});
  std::vector<Vertex> everything = all_vertices(r.graph);
  EXPECT_THROW(extract_clique_from_solution(r, CodeSet(everything)), InvalidArgument);
  CodeSet d = canonical_solution_from_clique(r, {0, 1});
  d.erase(*d.begin());
  EXPECT_THROW(extract_clique_from_solution(r, d), InvalidArgument);
}

TEST(CliqueReduction, SmallInstanceOptimaByExactSolver) {
  // P3, k = 2 has a 2-clique: the optimum equals d.
  const auto p3 = build_clique_reduction({path_graph(3), 2});
  const auto best = solve_exact(p3.graph);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(static_cast<int>(best->size()), p3.budget);
  EXPECT_EQ(extract_clique_from_solution(p3, *best).size(), 2u);
  // Single-edge H: the optimum overshoots d by one.
  const auto k2 = build_clique_reduction({complete_graph(2), 2});
  EXPECT_FALSE(solve_exact(k2.graph, k2.budget).has_value());
  EXPECT_EQ(lds_number(k2.graph), 12);
  EXPECT_THROW(canonical_solution_from_clique(k2, {0, 1}), InvalidArgument);
}

TEST(Composition, PaddingAndBudget) {
  const auto h0 = make_hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
  const auto vc = build_or_composition_vc({h0, h0});
  EXPECT_EQ(vc.t(), 2);
  EXPECT_EQ(vc.h, 1);
  EXPECT_EQ(vc.graph.order(), 50);
  EXPECT_EQ(vc.budget, 19);
  const auto cl = build_or_composition_clique({h0, h0});
  EXPECT_EQ(cl.t(), 4);
  EXPECT_EQ(cl.original_count, 2);
  EXPECT_EQ(cl.graph.order(), 56);
  EXPECT_EQ(cl.budget, 21);
  const auto five = build_or_composition_vc({h0, h0, h0, h0, h0});
  EXPECT_EQ(five.t(), 8);
  EXPECT_EQ(five.h, 3);
  EXPECT_THROW(build_or_composition_vc({}), InvalidArgument);
  EXPECT_THROW(build_or_composition_vc({h0, make_hypergraph(5, {})}), InvalidArgument);
}

TEST(Composition, SelectorWiringFollowsBits) {
  const auto h = make_hypergraph(3, {{0, 1, 2}});
  const auto c = build_or_composition_clique({h, h, h, h});
  for (int i = 0; i < c.t(); ++i)
    for (int j = 0; j < c.h; ++j) {
      const auto& s = c.selector[static_cast<std::size_t>(j)];
      const Vertex x = c.x[static_cast<std::size_t>(i)];
      EXPECT_EQ(c.graph.adjacent(x, s.alpha), ((i >> j) & 1) == 1);
      EXPECT_EQ(c.graph.adjacent(x, s.beta), ((i >> j) & 1) == 0);
    }
}

TEST(Composition, SolutionsFromEveryBicoloring) {
  std::mt19937_64 rng(606);
  for (auto variant : {CompositionVariant::kVertexCover, CompositionVariant::kClique}) {
    for (int trial = 0; trial < 6; ++trial) {
      const int n = 3 + trial % 3;
      std::vector<HypergraphInstance> inst;
      for (int i = 0; i < 2; ++i) inst.push_back(make_hypergraph(n, random_triples(rng, n, 1 + trial % 4)));
      const auto c = build_or_composition(inst, variant);
      EXPECT_EQ(c.budget, 3 * (n + c.h) + static_cast<int>(c.edges.size()) +
                              (variant == CompositionVariant::kVertexCover ? 2 : 1));
      for (int i = 0; i < c.t(); ++i)
        for (const auto& phi : all_bicolorings(c.instances[static_cast<std::size_t>(i)])) {
          const CodeSet d = solution_from_bicoloring(c, i, phi);
          EXPECT_EQ(static_cast<int>(d.size()), c.budget);
          EXPECT_TRUE(is_locating_dominating(c.graph, d).ok());
          EXPECT_TRUE(audit_observations(c, d).all_hold());
          const auto ex = extract_bicoloring(c, d);
          EXPECT_EQ(ex.instance, i);
          EXPECT_EQ(ex.phi, phi);
        }
    }
  }
}

TEST(Composition, FanoPlaneHasNoSolutionSide) {
  const auto f = fano();
  EXPECT_TRUE(all_bicolorings(f).empty());
  EXPECT_FALSE(solve_bicoloring_exact(f).has_value());
  const auto c = build_or_composition_vc({f, f});
  EXPECT_THROW(solution_from_bicoloring(c, 0, Coloring(7, 0)), InvalidArgument);
}

TEST(Composition, BicoloringOracleAgreesWithEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 5;
    const auto h = make_hypergraph(n, random_triples(rng, n, 2 + trial % 9));
    const auto all = all_bicolorings(h);
    const auto found = solve_bicoloring_exact(h);
    EXPECT_EQ(found.has_value(), !all.empty());
    if (found) {
      EXPECT_EQ(*found, all.front());
    }
  }
}

TEST(Composition, CoverWitnesses) {
  const auto h0 = make_hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
  const auto vc = build_or_composition_vc({h0, h0});
  const auto wv = composition_cover_witnesses(vc);
  EXPECT_EQ(static_cast<int>(wv.vertices.size()), 48);
  EXPECT_TRUE(is_independent(vc.graph, vc.x));
  const Graph left = delete_vertices(vc.graph, wv.vertices).graph;
  EXPECT_EQ(left.size(), 0);

  const auto cl = build_or_composition_clique({h0, h0});
  const auto wc = composition_cover_witnesses(cl);
  EXPECT_EQ(static_cast<int>(wc.vertices.size()), 52);
  const auto kept = delete_vertices(cl.graph, wc.vertices).graph;
  EXPECT_EQ(kept.order(), cl.t());
  EXPECT_EQ(kept.size(), cl.t() * (cl.t() - 1) / 2);
}

TEST(Composition, ExtractionNamesTheFailingStep) {
  const auto h0 = make_hypergraph(4, {{0, 1, 2}, {1, 2, 3}});
  const auto c = build_or_composition_vc({h0, h0});
  const CodeSet all(all_vertices(c.graph));
  try {
    extract_bicoloring(c, all);
    FAIL() << "expected a budget error";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("budget"), std::string::npos);
  }
}

TEST(Composition, RoleNames) {
  const auto h = make_hypergraph(3, {{0, 1, 2}});
  const auto c = build_or_composition_vc({h});
  EXPECT_EQ(c.roles.id("alpha(0)"), c.vertex_gadgets[0].alpha);
  EXPECT_EQ(c.roles.id("c(E{0,1,2})"), c.edge_gadgets[0].c);
  EXPECT_EQ(c.roles.id("T(0).a"), c.selector[0].a);
  EXPECT_EQ(c.roles.id("x(1)"), c.x[1]);
  EXPECT_EQ(c.roles.name(c.z), "z");
  EXPECT_THROW(c.roles.id("nope"), InvalidArgument);
}
