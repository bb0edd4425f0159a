#include <gtest/gtest.h>

#include "oracles/brute_force.hpp"
#include "oracles/tits_representation.hpp"
#include "oracles/trace_form.hpp"
#include "test_support.hpp"

// Sanity checks on the independent oracles themselves.

namespace {

using namespace morselab;

TEST(TitsOracle, CoxeterRelations) {
  const auto g = *graph_family("c4");
  const oracle::TitsRepresentation tits(g);
  for (std::size_t s = 0; s < g.size(); ++s) {
    EXPECT_EQ(tits.of_word({s, s}), tits.identity());
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (s == t) continue;
      const bool commute = tits.of_word({s, t}) == tits.of_word({t, s});
      EXPECT_EQ(commute, g.adjacent(s, t));
    }
  }
}

TEST(TitsOracle, InfiniteDihedralSpheres) {
  const oracle::TitsRepresentation tits(DefiningGraph({"x", "y"}, {}));
  EXPECT_EQ(tits.sphere_sizes(4), (std::vector<std::size_t>{1, 2, 2, 2, 2}));
  EXPECT_EQ(tits.length({0, 1, 0, 0, 1}, 6), 1);
}

TEST(TraceOracle, CancellationAcrossCommutingLetters) {
  const auto p4 = *graph_family("p4");
  const oracle::TraceForm raag(p4, true);
  // a b a^-1 -> b; a c a^-1 stays.
  EXPECT_EQ(raag.length({{0, 1}, {1, 1}, {0, -1}}), 1u);
  EXPECT_EQ(raag.length({{0, 1}, {2, 1}, {0, -1}}), 3u);
  EXPECT_EQ(raag.key({{0, 1}, {1, 1}}), raag.key({{1, 1}, {0, 1}}));
  EXPECT_NE(raag.key({{0, 1}, {2, 1}}), raag.key({{2, 1}, {0, 1}}));
  const oracle::TraceForm racg(p4, false);
  EXPECT_EQ(racg.length({{0, 1}, {1, 1}, {0, -1}}), 1u);
}

TEST(BruteOracle, JoinsAndCycles) {
  const auto c4 = *graph_family("c4");
  EXPECT_TRUE(oracle::is_join_by_bipartition(c4, c4.all()));
  EXPECT_FALSE(oracle::is_join_by_bipartition(c4, c4.parse_subset("a1,a2")));
  EXPECT_TRUE(oracle::join_superset_exists(c4, c4.parse_subset("a1,a2")));
  EXPECT_EQ(oracle::induced_cycle_sets(c4, 4).size(), 1u);
  EXPECT_EQ(oracle::induced_cycle_sets(build_cycle(6), 6).size(), 1u);
  EXPECT_TRUE(oracle::induced_cycle_sets(build_cycle(6), 4).empty());
}

TEST(BruteOracle, CosetScanOnSquare) {
  const auto c4 = *graph_family("c4");
  const oracle::TraceForm tf(c4, false);
  // b1 b2 b1 b2 is at distance 4 from <a1, a2>.
  const std::vector<oracle::Syllable> g{{1, 1}, {3, 1}, {1, 1}, {3, 1}};
  EXPECT_EQ(oracle::coset_distance_scan(tf, g, c4.parse_subset("a1,a2"), false, 8), 4u);
  EXPECT_EQ(oracle::coset_distance_scan(tf, g, c4.parse_subset("b1,b2"), false, 8), 0u);
}

}  // namespace
