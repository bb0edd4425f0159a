#include <gtest/gtest.h>

#include <random>

#include "morselab/classify.hpp"
#include "morselab/divergence.hpp"
#include "morselab/errors.hpp"
#include "oracles/tits_representation.hpp"
#include "test_support.hpp"

// Cross-module invariants driven by seeded generators.

namespace {

using namespace morselab;
using namespace testing_support;

TEST(CrossModule, NonQuasiconvexSubsetsAdmitPip1Witnesses) {
  for (const char* name : {"c4", "gamma_d:2"}) {
    const auto g = *graph_family(name);
    const auto squares = enumerate_induced_4cycles(g);
    int witnessed = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.size()); ++m) {
      const VertexSet s1(m);
      if (classify_special_racg(g, s1).verdict("strongly_quasiconvex") != Verdict::kFalse) continue;
      bool built = false;
      for (const auto& sq : squares) {
        try {
          const auto w = pip1_witness_path(g, s1, sq, 2, 2);
          EXPECT_LE(Rational(w.length()), closed_form_bound(BoundKind::kPip1Upper, {.n = 2, .r = 2}));
          built = true;
          break;
        } catch (const PreconditionError&) {
        }
      }
      EXPECT_TRUE(built) << name << " " << g.format_subset(s1);
      witnessed += built;
    }
    EXPECT_GT(witnessed, 0);
  }
}

TEST(CrossModule, RacgWordLengthMatchesTitsLength) {
  const auto p = racg("gamma_d:2");
  const oracle::TitsRepresentation tits(p.graph());
  std::mt19937_64 rng(71);
  for (int i = 0; i < 60; ++i) {
    const auto w = random_word(p, rng, 7);
    std::vector<std::size_t> vs;
    for (auto l : w) vs.push_back(vertex_of(l));
    EXPECT_EQ(static_cast<int>(reduce(p, w).length()), tits.length(vs, 7));
  }
}

TEST(CrossModule, FinitelyGeneratedZeroDistanceMeansMembership) {
  const auto p = racg("gamma_d:2");
  const auto ball = build_ball(p, 8);
  const auto s1 = p.graph().parse_subset("a2,b2");
  // The special subgroup presented through its generators as words.
  const SubgroupField fg(ball, FinitelyGeneratedSubgroup{{nf(p, "a2"), nf(p, "b2")}});
  const SubgroupField special(ball, SpecialSubgroup{s1});
  for (ElementId id = 0; id < ball.size(); ++id) {
    EXPECT_EQ(fg.upper_bound(id) == 0, special_subgroup_member(p, ball.word(id), s1));
    if (fg.exact(id)) EXPECT_EQ(fg.upper_bound(id), special.upper_bound(id));
  }
}

TEST(CrossModule, SubgroupDistanceIsLeftInvariantUnderSubgroup) {
  const auto p = racg("gamma_d:2");
  const auto s1 = p.graph().parse_subset("a0,a2,b2");
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<std::size_t> pick(0, 2);
  const auto members = s1.members();
  for (int i = 0; i < 100; ++i) {
    const auto g = reduce(p, random_word(p, rng, 8));
    Word k;
    for (int j = 0; j < 5; ++j) k.push_back(p.letter(members[pick(rng)]));
    const auto kg = multiply(p, reduce(p, k), g);
    EXPECT_EQ(special_subgroup_distance(p, s1, kg), special_subgroup_distance(p, s1, g));
    EXPECT_LE(special_subgroup_distance(p, s1, g), static_cast<int>(g.length()));
  }
}

TEST(CrossModule, SubgroupDistanceIsOneLipschitz) {
  for (auto p : {racg("omega_d:2"), raag("p4")}) {
    std::mt19937_64 rng(73);
    const VertexSet s1 = p.graph().parse_subset(p.is_raag() ? "a,c" : "a2,b2");
    for (int i = 0; i < 200; ++i) {
      const auto g = reduce(p, random_word(p, rng, 9));
      for (Letter x : p.alphabet()) {
        const int a = special_subgroup_distance(p, s1, g);
        const int b = special_subgroup_distance(p, s1, multiply(p, g, x));
        EXPECT_LE(std::abs(a - b), 1);
      }
    }
  }
}

TEST(CrossModule, BoundarySpheresPartitionTheBall) {
  const auto p = raag("p4");
  const auto ball = build_ball(p, 6);
  const SubgroupField field(ball, SpecialSubgroup{p.graph().parse_subset("a,d")});
  std::size_t total = 0;
  for (int r = 0; r <= 6; ++r) total += boundary_sphere(field, r).size();
  EXPECT_EQ(total, ball.size());
}

}  // namespace
