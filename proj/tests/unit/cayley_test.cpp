#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <map>
#include <set>

#include "morselab/ball_cache.hpp"
#include "morselab/cayley.hpp"
#include "morselab/errors.hpp"
#include "oracles/brute_force.hpp"
#include "oracles/tits_representation.hpp"
#include "test_support.hpp"

namespace {

using namespace morselab;
using namespace testing_support;

// Elements of length <= radius found by closing {identity} under right
// multiplication by generators, without BFS layering.
std::size_t closure_count(const Presentation& p, int radius) {
  std::set<NormalWord> seen{NormalWord{}};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<NormalWord> add;
    for (const auto& u : seen)
      for (Letter x : p.alphabet()) {
        auto v = multiply(p, u, x);
        if (static_cast<int>(v.length()) <= radius && !seen.count(v)) add.push_back(std::move(v));
      }
    for (auto& v : add) grew |= seen.insert(std::move(v)).second;
  }
  return seen.size();
}

TEST(BuildBall, SmallCounts) {
  const auto c4 = racg("c4");
  EXPECT_EQ(build_ball(c4, 0).size(), 1u);
  EXPECT_EQ(build_ball(c4, 1).size(), 5u);
}

TEST(BuildBall, FourCycleMatchesProductOfLines) {
  // D_inf has sphere sizes 1, 2, 2, ...; the C4 group is D_inf x D_inf.
  const auto ball = build_ball(racg("c4"), 8);
  const auto spheres = ball.sphere_sizes();
  for (int k = 0; k <= 8; ++k) {
    std::size_t expected = 0;
    for (int i = 0; i <= k; ++i) expected += (i == 0 ? 1 : 2) * (k - i == 0 ? 1 : 2);
    EXPECT_EQ(spheres[static_cast<std::size_t>(k)], expected) << k;
  }
}

TEST(BuildBall, MatchesClosureEnumeration) {
  for (auto p : {racg("c4"), raag("p4")}) {
    for (int r = 0; r <= 6; ++r) EXPECT_EQ(build_ball(p, r).size(), closure_count(p, r));
  }
}

TEST(BuildBall, MatchesTitsRepresentationSpheres) {
  for (const char* name : {"c4", "c5", "gamma_d:2", "omega_d:2"}) {
    const auto p = racg(name);
    const oracle::TitsRepresentation tits(p.graph());
    EXPECT_EQ(build_ball(p, 6).sphere_sizes(), tits.sphere_sizes(6)) << name;
  }
}

TEST(BuildBall, InvariantsHold) {
  for (auto p : {racg("gamma_d:2"), raag("p4")}) {
    const auto ball = build_ball(p, 5);
    for (ElementId id = 0; id < ball.size(); ++id) {
      EXPECT_EQ(ball.depth(id), static_cast<int>(ball.letters(id).size()));
      EXPECT_EQ(ball.find(ball.word(id)), id);
      for (std::size_t k = 0; k < ball.degree(); ++k) {
        const ElementId v = ball.neighbour(id, k);
        if (v == kNoElement) {
          EXPECT_EQ(ball.depth(id), ball.radius());
          continue;
        }
        EXPECT_LE(std::abs(ball.depth(v) - ball.depth(id)), 1);
        EXPECT_EQ(ball.word(v), multiply(p, ball.word(id), ball.presentation().alphabet()[k]));
        // Symmetric: stepping back by the inverse letter returns.
        const Letter inv = p.inverse(p.alphabet()[k]);
        const auto back = std::find(p.alphabet().begin(), p.alphabet().end(), inv) - p.alphabet().begin();
        EXPECT_EQ(ball.neighbour(v, static_cast<std::size_t>(back)), id);
      }
    }
    for (int d = 0; d <= ball.radius(); ++d)
      for (ElementId id = ball.layer_begin(d); id < ball.layer_begin(d + 1); ++id) EXPECT_EQ(ball.depth(id), d);
  }
}

TEST(BuildBall, BudgetExceeded) {
  BallOptions tight;
  tight.element_budget = 100;
  try {
    build_ball(racg("gamma_d:2"), 8, tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GE(e.completed_radius(), 1);
    EXPECT_LE(e.elements(), 100u);
  }
  EXPECT_THROW(build_ball(racg("c4"), -1), PreconditionError);
}

TEST(BallCache, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "morselab_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto p = raag("p4");
  const auto built = build_ball_cached(p, 4, {}, dir.string());
  const auto path = ball_cache_path(dir.string(), p, 4);
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto loaded = load_ball(p, 4, path);
  ASSERT_EQ(loaded.size(), built.size());
  for (ElementId id = 0; id < built.size(); ++id) {
    EXPECT_EQ(loaded.word(id), built.word(id));
    for (std::size_t k = 0; k < built.degree(); ++k) EXPECT_EQ(loaded.neighbour(id, k), built.neighbour(id, k));
  }
  EXPECT_EQ(loaded.find(nf(p, "a d a")), built.find(nf(p, "a d a")));
  EXPECT_THROW(load_ball(raag("c4"), 4, path), Error);
  EXPECT_THROW(load_ball(p, 5, path), Error);
  std::filesystem::resize_file(path, 40);
  EXPECT_THROW(load_ball(p, 4, path), Error);
  std::filesystem::remove_all(dir);
}

TEST(Distance, Examples) {
  const auto p = racg("c4");
  const auto ball = build_ball(p, 6);
  const auto g = nf(p, "a1 a2 b1");
  EXPECT_EQ(distance(ball, g, g), 0);
  EXPECT_EQ(distance(ball, NormalWord{}, nf(p, "b2")), 1);
}

TEST(Distance, EqualsInBallBfs) {
  const auto p = racg("gamma_d:2");
  const auto ball = build_ball(p, 6);
  BallSearch search(ball);
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<ElementId> pick(0, ball.layer_begin(4) - 1);
  for (int i = 0; i < 200; ++i) {
    const ElementId x = pick(rng), y = pick(rng);
    const auto bfs = search.distance(x, y, [](ElementId) { return true; });
    ASSERT_TRUE(bfs.has_value());
    EXPECT_EQ(distance(ball, ball.word(x), ball.word(y)), *bfs);
  }
}

TEST(SubgroupDistance, SquareTranslates) {
  const auto p = racg("c4");
  const auto ball = build_ball(p, 14);
  const SubgroupSpec k = SpecialSubgroup{p.graph().parse_subset("a1,a2")};
  const auto bb = nf(p, "b1 b2");
  for (int n = 1; n <= 6; ++n) {
    const auto g = power(p, bb, n);
    EXPECT_EQ(subgroup_distance(ball, k, g), 2 * n);
    EXPECT_EQ(subgroup_distance(ball, k, multiply(p, g, nf(p, "b1"))), 2 * n + 1);
  }
  EXPECT_EQ(subgroup_distance(ball, k, nf(p, "a1 a2 a1")), 0);
}

TEST(SubgroupDistance, GreedyMatchesCosetScan) {
  const auto p = racg("gamma_d:2");
  const oracle::TraceForm tf(p.graph(), false);
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<std::uint64_t> subset(1, 63);
  for (int i = 0; i < 120; ++i) {
    const VertexSet s1(subset(rng));
    const auto g = reduce(p, random_word(p, rng, 6));
    const auto brute = oracle::coset_distance_scan(tf, syllables(g.letters()), s1, false, 2 * g.length());
    EXPECT_EQ(special_subgroup_distance(p, s1, g), static_cast<int>(brute));
  }
}

TEST(SubgroupDistance, SpecialFieldMatchesGreedy) {
  const auto p = raag("p4");
  const auto ball = build_ball(p, 6);
  for (const char* subset : {"a", "a,d", "b,c", "a,b,c,d"}) {
    const auto s1 = p.graph().parse_subset(subset);
    const SubgroupField field(ball, SpecialSubgroup{s1});
    for (ElementId id = 0; id < ball.size(); id += 7) {
      ASSERT_TRUE(field.exact(id));
      EXPECT_EQ(field.upper_bound(id), special_subgroup_distance(p, s1, ball.word(id)));
    }
  }
}

TEST(SubgroupDistance, FinitelyGeneratedCertificates) {
  const auto p = raag("p4");
  const auto ball = build_ball(p, 7);
  const FinitelyGeneratedSubgroup h{{nf(p, "a d a"), nf(p, "d a d")}};
  const SubgroupField field(ball, h);
  EXPECT_EQ(subgroup_distance(field, NormalWord{}), 0);
  EXPECT_EQ(subgroup_distance(field, nf(p, "a d a")), 0);
  EXPECT_EQ(subgroup_distance(field, nf(p, "b")), 1);
  EXPECT_TRUE(field.looks_infinite());
  // Near the rim the nearest member cannot be certified.
  const ElementId far = ball.layer_begin(7);
  if (!field.exact(far)) EXPECT_THROW(subgroup_distance(field, ball.word(far)), Unresolved);
  // Certified values agree with a brute minimum over enumerated members.
  for (ElementId id = 0; id < ball.layer_begin(3); ++id) {
    if (!field.exact(id)) continue;
    int best = 1 << 20;
    for (ElementId m : field.members())
      best = std::min(best, distance(ball, ball.word(id), ball.word(m)));
    EXPECT_EQ(field.upper_bound(id), best);
  }
}

TEST(SubgroupDistance, FiniteSubgroupStopsGrowing) {
  const auto p = racg("c4");
  const auto ball = build_ball(p, 6);
  EXPECT_FALSE(SubgroupField(ball, SpecialSubgroup{p.graph().parse_subset("a1,b1")}).looks_infinite());
  EXPECT_TRUE(SubgroupField(ball, SpecialSubgroup{p.graph().parse_subset("a1,a2")}).looks_infinite());
}

TEST(BoundarySphere, Examples) {
  const auto p = racg("c4");
  const auto ball = build_ball(p, 8);
  const SubgroupSpec k = SpecialSubgroup{p.graph().parse_subset("a1,a2")};
  const SubgroupField field(ball, k);
  const auto zero = boundary_sphere(field, 0);
  EXPECT_EQ(zero, field.members());
  const auto two = boundary_sphere(field, 2);
  EXPECT_NE(std::find(two.begin(), two.end(), ball.require(nf(p, "b1 b2"))), two.end());
  for (ElementId id : two) EXPECT_EQ(subgroup_distance(ball, k, ball.word(id)), 2);
  EXPECT_THROW(boundary_sphere(field, 7, 2), PreconditionError);
}

TEST(ComplementDistance, Examples) {
  const auto p = racg("c4");
  const auto ball = build_ball(p, 8);
  const SubgroupField field(ball, SpecialSubgroup{p.graph().parse_subset("a1,a2")});
  const ElementId x = ball.require(nf(p, "b1 b2"));
  EXPECT_EQ(complement_distance(field, 2, x, x), 0);
  const ElementId y = ball.require(nf(p, "b1 b2 b1"));
  EXPECT_EQ(complement_distance(field, 2, x, y), 1);
  EXPECT_THROW(complement_distance(field, 3, x, y), PreconditionError);
}

TEST(ComplementDistance, Properties) {
  const auto p = racg("gamma_d:2");
  const auto ball = build_ball(p, 7);
  const SubgroupField field(ball, SpecialSubgroup{p.graph().parse_subset("a2,b2")});
  BallSearch search(ball);
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<ElementId> pick(0, ball.layer_begin(4) - 1);
  int checked = 0;
  while (checked < 200) {
    const ElementId x = pick(rng), y = pick(rng), z = pick(rng);
    // r = 0 is the plain in-ball metric.
    EXPECT_EQ(complement_distance(field, 0, x, y), search.distance(x, y, [](ElementId) { return true; }));
    const int rmax = std::min({field.upper_bound(x), field.upper_bound(y), field.upper_bound(z)});
    std::optional<int> previous;
    for (int r = 0; r <= rmax; ++r) {
      const auto dxy = complement_distance(field, r, x, y);
      if (dxy) EXPECT_GE(*dxy, distance(ball, ball.word(x), ball.word(y)));
      if (previous && dxy) EXPECT_GE(*dxy, *previous);
      if (previous && !dxy) SUCCEED();
      if (!previous && r > 0) EXPECT_FALSE(dxy.has_value());
      previous = dxy;
      const auto dyz = complement_distance(field, r, y, z);
      const auto dxz = complement_distance(field, r, x, z);
      if (dxy && dyz && dxz) EXPECT_LE(*dxz, *dxy + *dyz);
    }
    ++checked;
  }
}

}  // namespace
