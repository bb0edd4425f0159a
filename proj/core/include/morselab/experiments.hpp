#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "morselab/cayley.hpp"

namespace morselab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct RecipeResult {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  bool passed() const;
  /// One line per check followed by a summary line "<name> PASS|FAIL (<t>s)".
  std::string render() const;
};

struct RecipeOptions {
  std::uint64_t seed = 20160707;
  unsigned threads = 1;
  /// Overrides the recipe's default ball radius.
  std::optional<int> r_max;
  std::size_t pair_cap = 100'000;
  BallOptions ball;
  std::optional<std::string> cache_dir;
};

const std::vector<std::string>& recipe_names();

/// Runs one canned experiment. Throws ValidationError for unknown names.
/// Failures inside a check (including BudgetExceeded) are reported as FAIL
/// rather than thrown.
RecipeResult run_recipe(std::string_view name, const RecipeOptions& options = {});

/// Normal form of a uniformly random word of length at most max_len.
NormalWord random_element(const Presentation& p, std::mt19937_64& rng, int max_len);

/// Sphere sizes 0..degree from the clique formula for graph products of
/// Z/2 (RACG) or Z (RAAG).
std::vector<std::int64_t> growth_series(const Presentation& p, int degree);

}  // namespace morselab
