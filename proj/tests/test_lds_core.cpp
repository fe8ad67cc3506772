#include <gtest/gtest.h>

#include <random>

#include "ldsk/lds.hpp"
#include "support/oracles.hpp"

using namespace ldsk;
using namespace ldsk::testing;

TEST(LdsCore, CodeSetNormalizes) {
  CodeSet d{5, 1, 5, 3};
  EXPECT_EQ(d.vertices(), std::vector<Vertex>({1, 3, 5}));
  d.insert(2);
  d.insert(3);
  d.erase(5);
  d.erase(9);
  EXPECT_EQ(d.vertices(), std::vector<Vertex>({1, 2, 3}));
  EXPECT_EQ(parse_code_set(serialize_code_set(d)), d);
}

TEST(LdsCore, VerdictReportsFirstViolation) {
  const Graph p5 = path_graph(5);
  const Verdict undominated = is_locating_dominating(p5, CodeSet{0, 1});
  ASSERT_TRUE(std::holds_alternative<Undominated>(undominated.violation));
  EXPECT_EQ(std::get<Undominated>(undominated.violation).vertex, 3);
  const Verdict first = is_locating_dominating(p5, CodeSet{1});
  ASSERT_TRUE(std::holds_alternative<Confounded>(first.violation));
  EXPECT_EQ(std::get<Confounded>(first.violation).second, 2);
  const Verdict confounded = is_locating_dominating(p5, CodeSet{2, 4});
  ASSERT_FALSE(confounded.ok());
  ASSERT_TRUE(std::holds_alternative<Undominated>(confounded.violation));
  const Verdict pair = is_locating_dominating(path_graph(3), CodeSet{1});
  ASSERT_TRUE(std::holds_alternative<Confounded>(pair.violation));
  EXPECT_EQ(std::get<Confounded>(pair.violation).first, 0);
  EXPECT_EQ(std::get<Confounded>(pair.violation).second, 2);
  EXPECT_TRUE(is_locating_dominating(p5, CodeSet{1, 3}).ok());
  EXPECT_EQ(is_locating_dominating(p5, CodeSet{1, 3}).describe(), "locating-dominating");
  EXPECT_THROW(is_locating_dominating(p5, CodeSet{7}), InvalidArgument);
}

TEST(LdsCore, VerifierMatchesMaskOracle) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(rng, 1 + trial % 10, 0.35);
    const auto nb = neighbour_masks(g);
    std::uniform_int_distribution<Mask> pick(0, (Mask{1} << g.order()) - 1);
    for (int s = 0; s < 20; ++s) {
      const Mask m = pick(rng);
      EXPECT_EQ(is_locating_dominating(g, CodeSet(mask_vertices(m))).ok(), is_lds_mask(nb, m));
    }
  }
}

TEST(LdsCore, SmallFamiliesHaveKnownOptima) {
  // Frozen from the brute-force oracle.
  EXPECT_EQ(lds_number(Graph(1)), 1);
  EXPECT_EQ(lds_number(Graph(3)), 3);
  EXPECT_EQ(lds_number(complete_graph(2)), 1);
  EXPECT_EQ(lds_number(complete_graph(4)), 3);
  EXPECT_EQ(lds_number(star_graph(4)), 4);
  EXPECT_EQ(lds_number(cycle_graph(6)), 3);
  EXPECT_EQ(lds_number(Graph(0)), 0);
  EXPECT_EQ(brute_force_lds_number(complete_graph(4)), 3);
  EXPECT_EQ(brute_force_lds_number(star_graph(4)), 4);
  EXPECT_EQ(brute_force_lds_number(cycle_graph(6)), 3);
}

TEST(LdsCore, PathsFollowTwoFifthsFormula) {
  for (int n = 1; n <= 30; ++n) EXPECT_EQ(lds_number(path_graph(n)), (2 * n + 4) / 5) << "n = " << n;
  for (int n = 1; n <= 14; ++n) EXPECT_EQ(brute_force_lds_number(path_graph(n)), (2 * n + 4) / 5) << "n = " << n;
}

TEST(LdsCore, SolverMatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 12;
    const double p = 0.15 + 0.1 * (trial % 7);
    const Graph g = random_graph(rng, n, p);
    const int expected = brute_force_lds_number(g);
    const auto sol = solve_exact(g);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(static_cast<int>(sol->size()), expected);
    EXPECT_TRUE(is_lds_mask(neighbour_masks(g), vertices_mask(sol->vertices())));
    EXPECT_FALSE(solve_exact(g, expected - 1).has_value());
    EXPECT_TRUE(has_lds_within(g, expected));
    EXPECT_FALSE(has_lds_within(g, expected - 1));
  }
}

TEST(LdsCore, SolverIsDeterministic) {
  std::mt19937_64 rng(9);
  const Graph g = random_graph(rng, 14, 0.3);
  EXPECT_EQ(solve_exact(g), solve_exact(g));
}

TEST(LdsCore, SolverRefusesAboveCap) {
  EXPECT_THROW(solve_exact(path_graph(10), std::nullopt, SolverOptions{8}), RefusalError);
  EXPECT_THROW(solve_exact(Graph(kSolverHardCap + 1)), RefusalError);
  EXPECT_FALSE(has_lds_within(path_graph(4), -1));
}

TEST(LdsCore, SolverHandlesTwoWordGraphs) {
  const Graph c65 = cycle_graph(65);
  const auto d = solve_exact(c65);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->size(), 26u);
  EXPECT_FALSE(solve_exact(c65, 25).has_value());
}
