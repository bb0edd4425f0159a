#include <gtest/gtest.h>

#include "morselab/cayley.hpp"
#include "morselab/errors.hpp"
#include "morselab/experiments.hpp"
#include "test_support.hpp"

namespace {

using namespace morselab;
using namespace testing_support;

TEST(Recipes, Names) {
  EXPECT_EQ(recipe_names(), (std::vector<std::string>{"E1", "E2", "E3", "E4", "E5"}));
  try {
    run_recipe("E0");
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("E1"), std::string::npos);
  }
}

TEST(Recipes, FirstRecipePassesAndRenders) {
  const auto result = run_recipe("E1");
  EXPECT_TRUE(result.passed());
  EXPECT_FALSE(result.checks.empty());
  const auto text = result.render();
  EXPECT_NE(text.find("E1 PASS"), std::string::npos);
  EXPECT_NE(text.find("[PASS]"), std::string::npos);
}

TEST(Recipes, BudgetFailureIsReportedNotThrown) {
  RecipeOptions o;
  o.ball.element_budget = 100;
  const auto result = run_recipe("E1", o);
  EXPECT_FALSE(result.passed());
  EXPECT_NE(result.render().find("budget"), std::string::npos);
}

TEST(GrowthSeries, FourCycleByHand) {
  // (1 + t)^2 / (1 - t)^2 = 1 + 4t + 8t^2 + 12t^3 + ...
  EXPECT_EQ(growth_series(racg("c4"), 4), (std::vector<std::int64_t>{1, 4, 8, 12, 16}));
  // Free group on two generators: c4 RAAG is F2 x F2, spheres of F2 are 1, 4, 12, 36.
  const auto f2xf2 = growth_series(raag("c4"), 3);
  EXPECT_EQ(f2xf2, (std::vector<std::int64_t>{1, 8, 40, 168}));
}

TEST(GrowthSeries, MatchesBallSpheres) {
  for (auto p : {racg("gamma_d:2"), raag("p4"), racg("omega_d:2"), raag("c5")}) {
    const auto ball = build_ball(p, 5);
    const auto spheres = ball.sphere_sizes();
    const auto series = growth_series(p, 5);
    for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(static_cast<std::int64_t>(spheres[k]), series[k]);
  }
}

TEST(RandomElement, DeterministicAndBounded) {
  const auto p = racg("gamma_d:2");
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_element(p, a, 6);
    EXPECT_EQ(x, random_element(p, b, 6));
    EXPECT_LE(x.length(), 6u);
  }
}

}  // namespace
