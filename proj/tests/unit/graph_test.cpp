#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "morselab/errors.hpp"
#include "morselab/graph.hpp"
#include "oracles/brute_force.hpp"

namespace {

using namespace morselab;

DefiningGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(names[i], names[j]);
  return DefiningGraph(names, edges);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(LoadGraph, SingleEdge) {
  const auto g = load_graph(R"({"vertices":["a","b"],"edges":[["a","b"]]})");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.adjacent(0, 1));
}

TEST(LoadGraph, RejectsBadInput) {
  EXPECT_THROW(load_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"), ValidationError);
  EXPECT_THROW(load_graph(R"({"vertices":["a","a"],"edges":[]})"), ValidationError);
  EXPECT_THROW(load_graph(R"({"vertices":["a"],"edges":[["a","z"]]})"), ValidationError);
  EXPECT_THROW(load_graph(R"({"vertices":["a"],"edges":[["a"]]})"), ParseError);
  EXPECT_THROW(load_graph("{not json"), ParseError);
}

TEST(LoadGraph, SquareFileIsFourCycle) {
  const auto g = load_graph_file(std::string(MORSELAB_TEST_DATA_DIR) + "/square.json");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(is_induced_cycle(g, {0, 1, 2, 3}));
  EXPECT_EQ(g, *graph_family("c4"));
}

TEST(LoadGraph, JsonRoundTrip) {
  for (const char* name : {"c4", "p4", "gamma_d:3", "omega_d:2", "cycle:7"}) {
    const auto g = *graph_family(name);
    EXPECT_EQ(load_graph(graph_to_json(g)), g) << name;
  }
}

TEST(TriangleFree, Examples) {
  EXPECT_TRUE(is_triangle_free(*graph_family("c4")));
  EXPECT_FALSE(is_triangle_free(load_graph(read_file(std::string(MORSELAB_TEST_DATA_DIR) + "/triangle.json"))));
  EXPECT_TRUE(is_triangle_free(build_gamma_d(2)));
  EXPECT_FALSE(oracle::has_triangle(build_gamma_d(2)));
}

TEST(InducedFourCycles, Examples) {
  EXPECT_EQ(enumerate_induced_4cycles(*graph_family("c4")).size(), 1u);
  EXPECT_TRUE(enumerate_induced_4cycles(*graph_family("p4")).empty());
}

TEST(InducedFourCycles, GammaTwoMatchesSubsetScan) {
  const auto g = build_gamma_d(2);
  std::set<std::uint64_t> found;
  for (const auto& c : enumerate_induced_4cycles(g)) {
    EXPECT_TRUE(is_induced_cycle(g, c.vertices()));
    found.insert(c.vertex_set().bits());
  }
  EXPECT_EQ(found, oracle::induced_cycle_sets(g, 4));
  EXPECT_EQ(found.size(), 5u);
}

TEST(InducedCycles, Examples) {
  EXPECT_EQ(enumerate_induced_cycles(build_cycle(5), 5, 5).size(), 1u);
  EXPECT_TRUE(enumerate_induced_cycles(*graph_family("c4"), 4, 4).size() == 1);
  EXPECT_THROW(enumerate_induced_cycles(*graph_family("c4"), 5, 8), PreconditionError);
}

TEST(InducedCycles, GammaThreeMatchesSubsetScan) {
  const auto g = build_gamma_d(3);
  for (std::size_t len = 4; len <= 6; ++len) {
    std::set<std::uint64_t> found;
    for (const auto& c : enumerate_induced_cycles(g, len, len)) found.insert(c.vertex_set().bits());
    EXPECT_EQ(found, oracle::induced_cycle_sets(g, len)) << len;
  }
}

TEST(InducedCycles, CanonicalForm) {
  const InducedCycle a({2, 1, 0, 3});
  const InducedCycle b({0, 3, 2, 1});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.vertices(), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(IsJoin, Examples) {
  const auto c4 = *graph_family("c4");
  EXPECT_TRUE(is_join(c4, c4.parse_subset("a1,b1")));
  EXPECT_FALSE(is_join(c4, c4.parse_subset("a1,a2")));
  EXPECT_TRUE(is_join(c4, c4.all()));
  EXPECT_THROW(is_join(c4, VertexSet()), PreconditionError);
}

TEST(ConeOff, Examples) {
  const auto c4 = *graph_family("c4");
  const auto coned = cone_off(c4, "a1", "a2", "t");
  EXPECT_EQ(coned.size(), 5u);
  const auto t = coned.index("t");
  EXPECT_EQ(coned.neighbours(t), coned.parse_subset("a1,a2"));
  EXPECT_THROW(cone_off(c4, "a1", "b1", "t"), PreconditionError);
  EXPECT_THROW(cone_off(c4, "a1", "a2", "b1"), PreconditionError);
}

TEST(Families, GammaAndOmega) {
  const auto g2 = build_gamma_d(2);
  EXPECT_EQ(g2.size(), 6u);
  EXPECT_FALSE(g2.adjacent(g2.index("a2"), g2.index("b2")));
  const auto g3 = build_gamma_d(3);
  EXPECT_EQ(g3.size(), 8u);
  EXPECT_EQ(g3.edge_count(), 12u);
  const auto o2 = build_omega_d(2);
  EXPECT_EQ(o2.size(), 7u);
  EXPECT_EQ(o2.neighbours(o2.index("t")), o2.parse_subset("a2,b2"));
  EXPECT_TRUE(is_triangle_free(o2));
  for (int d = 2; d <= 6; ++d) {
    const auto g = build_gamma_d(d);
    EXPECT_EQ(cone_off(g, "a" + std::to_string(d), "b" + std::to_string(d), "t"), build_omega_d(d));
  }
}

TEST(Families, NamesAndErrors) {
  EXPECT_TRUE(graph_family("p4").has_value());
  EXPECT_FALSE(graph_family("nonsense").has_value());
  EXPECT_THROW(build_gamma_d(1), PreconditionError);
  EXPECT_EQ(resolve_graph("c5").size(), 5u);
}

TEST(Subsets, ParseAndFormat) {
  const auto g = build_gamma_d(2);
  const auto s = g.parse_subset("b2,a2");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(g.format_subset(s), "a2,b2");
  EXPECT_THROW(g.parse_subset("a2,zz"), ValidationError);
}

TEST(Fingerprint, DistinguishesGraphs) {
  EXPECT_EQ(build_gamma_d(2).fingerprint(), build_gamma_d(2).fingerprint());
  EXPECT_NE(build_gamma_d(2).fingerprint(), build_omega_d(2).fingerprint());
}

TEST(GraphProperties, JoinAgreesWithBipartitionSearch) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const auto g = random_graph(rng, n, 0.5);
    std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << n) - 1);
    for (int k = 0; k < 60; ++k) {
      const VertexSet s(pick(rng));
      EXPECT_EQ(is_join(g, s), oracle::is_join_by_bipartition(g, s));
    }
  }
}

TEST(GraphProperties, FourCyclesEqualRangeEnumeration) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, 4 + trial % 6, 0.4);
    EXPECT_EQ(enumerate_induced_4cycles(g), enumerate_induced_cycles(g, 4, 4));
    for (std::size_t len = 4; len <= g.size(); ++len) {
      std::set<std::uint64_t> found;
      for (const auto& c : enumerate_induced_cycles(g, len, len)) {
        EXPECT_TRUE(is_induced_cycle(g, c.vertices()));
        found.insert(c.vertex_set().bits());
      }
      EXPECT_EQ(found, oracle::induced_cycle_sets(g, len));
    }
  }
}

TEST(GraphProperties, TriangleFreeAgreesWithScan) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 3 + trial % 8, 0.3);
    EXPECT_EQ(is_triangle_free(g), !oracle::has_triangle(g));
  }
}

}  // namespace
