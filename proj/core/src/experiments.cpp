#include "morselab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "morselab/ball_cache.hpp"
#include "morselab/classify.hpp"
#include "morselab/divergence.hpp"
#include "morselab/errors.hpp"

namespace morselab {

bool RecipeResult::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string RecipeResult::render() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  out.setf(std::ios::fixed);
  out.precision(2);
  out << name << ' ' << (passed() ? "PASS" : "FAIL") << " (" << seconds << "s)\n";
  return out.str();
}

NormalWord random_element(const Presentation& p, std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> length(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, p.alphabet().size() - 1);
  Word w;
  const int len = length(rng);
  for (int i = 0; i < len; ++i) w.push_back(p.alphabet()[pick(rng)]);
  return reduce(p, w);
}

std::vector<std::int64_t> growth_series(const Presentation& p, int degree) {
  const DefiningGraph& g = p.graph();
  const auto terms = static_cast<std::size_t>(degree) + 1;
  std::vector<std::int64_t> clique_count(g.size() + 1, 0);
  std::function<void(std::size_t, VertexSet, std::size_t)> extend =
      [&](std::size_t from, VertexSet candidates, std::size_t size) {
        ++clique_count[size];
        for (auto v : candidates.members()) {
          if (v < from) continue;
          extend(v + 1, candidates & g.neighbours(v), size + 1);
        }
      };
  extend(0, g.all(), 0);

  // x = -c t / (1 + t), c = 1 for Z/2 factors and 2 for Z factors.
  const std::int64_t c = p.is_raag() ? 2 : 1;
  std::vector<std::int64_t> x(terms, 0);
  for (std::size_t k = 1; k < terms; ++k) x[k] = (k % 2 == 1) ? -c : c;
  auto times = [&](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    std::vector<std::int64_t> out(terms, 0);
    for (std::size_t i = 0; i < terms; ++i) {
      for (std::size_t j = 0; i + j < terms; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
  };
  std::vector<std::int64_t> q(terms, 0);
  std::vector<std::int64_t> power(terms, 0);
  power[0] = 1;
  for (std::size_t size = 0; size < clique_count.size(); ++size) {
    for (std::size_t k = 0; k < terms; ++k) q[k] += clique_count[size] * power[k];
    power = times(power, x);
  }
  std::vector<std::int64_t> s(terms, 0);
  s[0] = 1;
  for (std::size_t k = 1; k < terms; ++k) {
    std::int64_t acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += q[j] * s[k - j];
    s[k] = -acc;
  }
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

void add(RecipeResult& out, std::string name, bool passed, std::string detail = {}) {
  out.checks.push_back({std::move(name), passed, std::move(detail)});
}

// Runs `body`, turning library errors into a failed check.
void guarded(RecipeResult& out, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const BudgetExceeded& e) {
    add(out, name, false,
        std::string("BudgetExceeded after layer ") + std::to_string(e.completed_radius()) + " (" +
            std::to_string(e.elements()) + " elements): " + e.what() +
            "; lower --rmax or raise --budget");
  } catch (const std::exception& e) {
    add(out, name, false, e.what());
  }
}

std::string fmt_value(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "inf";
}

DefiningGraph family(const char* name) { return *graph_family(name); }

NormalWord word(const Presentation& p, const std::string& text) {
  return parse_normal_word(p, text);
}

std::string repeat(const std::string& unit, int times) {
  std::string out;
  for (int i = 0; i < times; ++i) out += unit + " ";
  return out;
}

// ---------------------------------------------------------------- E1

void recipe_e1(RecipeResult& out, const RecipeOptions& o) {
  const Presentation p(family("c4"), GroupKind::kRacg);
  const int radius = o.r_max.value_or(14);
  const VertexSet k = p.graph().parse_subset("a1,a2");
  guarded(out, "ball", [&] {
    const BallIndex ball = build_ball_cached(p, radius, o.ball, o.cache_dir);
    const SubgroupField field(ball, SpecialSubgroup{k});
    for (int n = 1; n <= 6; ++n) {
      for (int tail = 0; tail <= 1; ++tail) {
        const std::string text = repeat("b1 b2", n) + (tail ? "b1" : "");
        const std::string label = "(b1 b2)^" + std::to_string(n) + (tail ? " b1" : "");
        guarded(out, label, [&] {
          const NormalWord g = word(p, text);
          const int expected = 2 * n + tail;
          const int greedy = special_subgroup_distance(p, k, g);
          const auto bfs = field.distance(ball.require(g));
          const bool ok = greedy == expected && bfs && *bfs == expected;
          add(out, label, ok,
              "greedy " + std::to_string(greedy) + ", ball BFS " +
                  (bfs ? std::to_string(*bfs) : "uncertified") + ", expected " +
                  std::to_string(expected));
        });
      }
    }
  });
}

// ---------------------------------------------------------------- E2

struct LiteralVerdicts {
  bool triangle_free;
  bool sqc;
  bool stable;
  bool finite;
};

LiteralVerdicts literal_classify(const DefiningGraph& g, VertexSet s) {
  const std::size_t n = g.size();
  LiteralVerdicts v{true, true, true, true};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) v.triangle_free = false;
  for (std::size_t v0 = 0; v0 < n; ++v0)
    for (std::size_t v1 = 0; v1 < n; ++v1)
      for (std::size_t v2 = 0; v2 < n; ++v2)
        for (std::size_t v3 = 0; v3 < n; ++v3) {
          const bool distinct = v0 != v1 && v0 != v2 && v0 != v3 && v1 != v2 && v1 != v3 && v2 != v3;
          if (!distinct) continue;
          const bool square = g.adjacent(v0, v1) && g.adjacent(v1, v2) && g.adjacent(v2, v3) &&
                              g.adjacent(v3, v0) && !g.adjacent(v0, v2) && !g.adjacent(v1, v3);
          if (!square) continue;
          const bool diagonal = (s.contains(v0) && s.contains(v2)) || (s.contains(v1) && s.contains(v3));
          const bool whole = s.contains(v0) && s.contains(v1) && s.contains(v2) && s.contains(v3);
          if (diagonal) v.stable = false;
          if (diagonal && !whole) v.sqc = false;
        }
  for (auto a : s.members())
    for (auto b : s.members())
      if (a != b && !g.adjacent(a, b)) v.finite = false;
  return v;
}

void recipe_e2(RecipeResult& out, const RecipeOptions&) {
  const std::vector<std::pair<std::string, DefiningGraph>> graphs = {
      {"c4", family("c4")}, {"gamma_d:2", family("gamma_d:2")},
      {"omega_d:2", family("omega_d:2")}, {"c5", family("c5")}};
  auto as_verdict = [](bool b) { return b ? Verdict::kTrue : Verdict::kFalse; };
  for (const auto& [label, g] : graphs) {
    guarded(out, "classifier on all subsets of " + label, [&] {
      std::size_t mismatches = 0;
      std::string first;
      const std::uint64_t total = std::uint64_t{1} << g.size();
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        const VertexSet s(bits);
        const auto report = classify_special_racg(g, s);
        const auto lit = literal_classify(g, s);
        bool same = true;
        if (!lit.triangle_free) {
          same = report.any_outside_scope();
        } else {
          same = report.verdict("strongly_quasiconvex") == as_verdict(lit.sqc) &&
                 report.verdict("stable") == as_verdict(lit.stable) &&
                 report.verdict("finite") == as_verdict(lit.finite);
        }
        if (!same && mismatches++ == 0) first = "{" + g.format_subset(s) + "}";
      }
      add(out, "classifier on all subsets of " + label, mismatches == 0,
          std::to_string(total) + " subsets" +
              (mismatches ? ", " + std::to_string(mismatches) + " mismatches, first " + first : ""));
    });
  }

  const DefiningGraph c4 = family("c4");
  const Presentation p(c4, GroupKind::kRacg);
  const auto squares = enumerate_induced_4cycles(c4);
  guarded(out, "pip1 witnesses on C4", [&] {
    const BallIndex ball = build_ball(p, 16);
    std::size_t built = 0;
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
      const VertexSet s(bits);
      if (classify_special_racg(c4, s).verdict("strongly_quasiconvex") != Verdict::kFalse) continue;
      const SubgroupField field(ball, SpecialSubgroup{s});
      for (int r : {2, 3}) {
        const int n = 2;
        const std::string label =
            "pip1 {" + c4.format_subset(s) + "} n=" + std::to_string(n) + " r=" + std::to_string(r);
        guarded(out, label, [&] {
          const auto w = pip1_witness_path(c4, s, squares.front(), n, r);
          const auto bound = closed_form_bound(BoundKind::kPip1Upper, {.n = n, .r = r});
          bool ok = Rational(w.length()) <= bound;
          for (std::size_t i = 0; i < w.path.size(); ++i) {
            const auto d = field.distance(ball.require(w.path[i]));
            ok = ok && d && *d >= r;
            if (i > 0) ok = ok && distance(ball, w.path[i - 1], w.path[i]) == 1;
          }
          const auto dx = field.distance(ball.require(w.path.front()));
          const auto dy = field.distance(ball.require(w.path.back()));
          ok = ok && dx == r && dy == r;
          ok = ok && distance(ball, w.path.front(), w.path.back()) >= n * r;
          add(out, label, ok,
              "length " + std::to_string(w.length()) + " <= " + bound.str() +
                  ", endpoints on the r-sphere, all vertices at distance >= r");
          ++built;
        });
      }
    }
    add(out, "pip1 coverage", built == 12,
        std::to_string(built) + " witnesses for the 6 non-quasiconvex subsets");
  });
}

// ---------------------------------------------------------------- E3

void check_sigma_rows(RecipeResult& out, const std::string& label, const SubgroupField& field,
                      const DivergenceProfile& profile) {
  const BallIndex& ball = field.ball();
  const Presentation& p = ball.presentation();
  bool any_finite = false;
  for (const auto& row : profile.rows) {
    const std::string name = label + " r=" + std::to_string(row.r);
    if (!row.value) {
      add(out, name, true,
          std::string("value inf") + (profile.finite_subgroup ? " (bounded subgroup)" : "") +
              ", pairs " + std::to_string(row.pairs_examined) +
              (row.capped ? " (cap hit)" : ""));
      continue;
    }
    any_finite = true;
    const Rational bound =
        closed_form_bound(BoundKind::kPip2Lower, {.n = profile.n, .r = row.r, .rho = profile.rho});
    const ElementId x = ball.require(*row.witness_x);
    const ElementId y = ball.require(*row.witness_y);
    const int exclusion = static_cast<int>((profile.rho * Rational(row.r)).ceil());
    const auto recomputed = complement_distance(field, exclusion, x, y);
    const bool witness_ok = field.distance(x) == row.r && field.distance(y) == row.r &&
                            distance(ball, *row.witness_x, *row.witness_y) >= profile.n * row.r &&
                            recomputed && *recomputed == *row.value;
    add(out, name, Rational(*row.value) >= bound && witness_ok,
        "value " + std::to_string(*row.value) + " >= " + bound.str() + ", pairs " +
            std::to_string(row.pairs_examined) + (row.capped ? " (cap hit)" : "") + ", witness " +
            format_word(p, *row.witness_x) + " | " + format_word(p, *row.witness_y) +
            (witness_ok ? " re-verified" : " FAILED re-verification"));
  }
  if (!any_finite) {
    add(out, label + " coverage", true, "all rows infinite, the bound holds vacuously");
  }
}

void recipe_e3(RecipeResult& out, const RecipeOptions& o) {
  const Presentation p(family("gamma_d:2"), GroupKind::kRacg);
  const DefiningGraph& g = p.graph();
  SigmaOptions so;
  so.n = 3;
  so.rho = Rational(1);
  so.radii = {2, 3};
  so.r_max = o.r_max.value_or(12);
  so.pair_cap = o.pair_cap;
  so.sources = SourceMode::kAnchored;
  so.threads = o.threads;

  const VertexSet preferred = g.parse_subset("a0,b0");
  const bool preferred_ok =
      classify_special_racg(g, preferred).verdict("strongly_quasiconvex") == Verdict::kTrue;
  const VertexSet rule_subset = preferred_ok ? preferred : g.parse_subset("a1");
  const VertexSet link_subset = g.parse_subset("a2,b2");

  guarded(out, "E3 sigma profiles", [&] {
    for (int r : so.radii) {
      if (r + so.n * r + so.slack > so.r_max) {
        throw PreconditionError("r = " + std::to_string(r) + " needs r_max >= " +
                                std::to_string(r + so.n * r) + "; got " + std::to_string(so.r_max));
      }
    }
    const BallIndex ball = build_ball_cached(p, so.r_max, o.ball, o.cache_dir);
    for (VertexSet s : {link_subset, rule_subset}) {
      const std::string label = "{" + g.format_subset(s) + "}";
      const auto report = classify_special_racg(g, s);
      const bool condition = report.verdict("strongly_quasiconvex") == Verdict::kTrue;
      add(out, label + " satisfies the square condition", condition,
          s == rule_subset && !preferred_ok ? "fallback: {a0,b0} holds a square diagonal" : "");
      const SubgroupField field(ball, SpecialSubgroup{s});
      const auto profile = sigma_profile(field, so);
      check_sigma_rows(out, label, field, profile);
    }
  });
}

// ---------------------------------------------------------------- E4

void recipe_e4(RecipeResult& out, const RecipeOptions& o) {
  const Presentation p(family("p4"), GroupKind::kRaag);
  const std::vector<NormalWord> gens = {word(p, "a d a"), word(p, "d a d")};

  guarded(out, "generators and products up to 4 are loxodromic", [&] {
    const auto report = loxodromic_report(p, gens, 4);
    bool ok = true;
    std::string detail;
    for (const auto& [prop, v] : report.verdicts) {
      ok = ok && v == Verdict::kTrue;
      detail += prop + "=" + std::string(to_string(v)) + " ";
    }
    add(out, "generators and products up to 4 are loxodromic", ok, detail);
  });

  guarded(out, "join subwords of length <= 2", [&] {
    std::vector<NormalWord> moves;
    for (const auto& gen : gens) {
      moves.push_back(gen);
      moves.push_back(inverse(p, gen));
    }
    std::vector<NormalWord> layer{NormalWord{}};
    std::size_t worst = 0;
    std::size_t count = 0;
    std::string worst_word;
    for (int len = 1; len <= 4; ++len) {
      std::vector<NormalWord> next;
      for (const auto& prefix : layer) {
        for (const auto& m : moves) {
          NormalWord w = multiply(p, prefix, m);
          if (!w.empty()) {
            ++count;
            const std::size_t j = max_join_subword_length(p, w);
            if (j > worst) {
              worst = j;
              worst_word = format_word(p, w);
            }
          }
          next.push_back(std::move(w));
        }
      }
      layer = std::move(next);
    }
    add(out, "join subwords of length <= 2", worst <= 2,
        std::to_string(count) + " products, longest join subword " + std::to_string(worst) +
            " in " + worst_word);
  });

  SigmaOptions so;
  so.n = 9;
  so.rho = Rational(1);
  so.r_max = o.r_max.value_or(45);
  so.pair_cap = o.pair_cap;
  so.sources = SourceMode::kAnchored;
  so.threads = o.threads;
  so.ball = o.ball;
  so.cache_dir = o.cache_dir;
  const SubgroupSpec spec = FinitelyGeneratedSubgroup{gens};

  guarded(out, "growth diagnostic over r=2..5 reports superlinear", [&] {
    SigmaOptions growth = so;
    growth.radii = {2, 3, 4, 5};
    const auto profile = sigma_profile(p, spec, growth);
    const auto report = growth_diagnostic(profile);
    add(out, "growth diagnostic over r=2..5 reports superlinear", report.superlinear,
        "loglog slope " + std::to_string(report.loglog_slope));
  });

  guarded(out, "sigma rows n=9 r=3,4 respect the kmt bound", [&] {
    SigmaOptions rows = so;
    rows.radii = {3, 4};
    const auto profile = sigma_profile(p, spec, rows);
    bool ok = true;
    std::string detail;
    for (const auto& row : profile.rows) {
      detail += "r=" + std::to_string(row.r) + " value " + fmt_value(row.value);
      try {
        const Rational bound = closed_form_bound(
            BoundKind::kKmtLower, {.n = 9, .r = row.r, .rho = Rational(1), .join_bound = 2});
        if (bound > Rational(0) && (!row.value || Rational(*row.value) < bound)) ok = false;
        detail += " bound " + bound.str() + "; ";
      } catch (const PreconditionError&) {
        detail += " bound not applicable; ";
      }
    }
    add(out, "sigma rows n=9 r=3,4 respect the kmt bound", ok, detail);
  });
}

// ---------------------------------------------------------------- E5

void recipe_e5(RecipeResult& out, const RecipeOptions& o) {
  std::mt19937_64 rng(o.seed);

  for (const auto& [label, graph, kind] :
       {std::tuple{"C4 racg", "c4", GroupKind::kRacg}, std::tuple{"P4 raag", "p4", GroupKind::kRaag}}) {
    const std::string name = std::string("normal form length = BFS distance, ") + label + " R=5";
    guarded(out, name, [&] {
      const Presentation p(family(graph), kind);
      const BallIndex ball = build_ball(p, 5);
      BallSearch search(ball);
      std::vector<int> bfs(ball.size(), -1);
      search.run(0, [](ElementId) { return true; },
                 [&](std::span<const ElementId> layer, int depth) {
                   for (ElementId id : layer) bfs[id] = depth;
                   return false;
                 },
                 5);
      std::size_t bad = 0;
      for (ElementId id = 0; id < ball.size(); ++id) {
        const auto letters = ball.letters(id);
        if (bfs[id] != static_cast<int>(letters.size()) || !is_normal_form(p, letters)) ++bad;
      }
      const auto series = growth_series(p, 5);
      const auto spheres = ball.sphere_sizes();
      bool growth_ok = spheres.size() == series.size();
      for (std::size_t i = 0; growth_ok && i < spheres.size(); ++i) {
        growth_ok = static_cast<std::int64_t>(spheres[i]) == series[i];
      }
      add(out, name, bad == 0 && growth_ok,
          std::to_string(ball.size()) + " elements, " + std::to_string(bad) +
              " disagreements, sphere sizes " + (growth_ok ? "match" : "differ from") +
              " the clique growth series");
    });
  }

  guarded(out, "greedy coset distance = coset scan, 200 samples over Gamma_2", [&] {
    const Presentation p(family("gamma_d:2"), GroupKind::kRacg);
    const std::uint64_t subsets = std::uint64_t{1} << p.graph().size();
    std::uniform_int_distribution<std::uint64_t> pick(1, subsets - 1);
    std::size_t bad = 0;
    std::string first;
    for (int sample = 0; sample < 200; ++sample) {
      const VertexSet s(pick(rng));
      const NormalWord g = random_element(p, rng, 6);
      const int greedy = special_subgroup_distance(p, s, g);
      // Subgroup elements up to length 2|g| contain a nearest one.
      std::vector<Letter> moves;
      for (Letter l : p.alphabet()) {
        if (s.contains(vertex_of(l))) moves.push_back(l);
      }
      std::unordered_set<NormalWord, NormalWordHash> seen{NormalWord{}};
      std::vector<NormalWord> frontier{NormalWord{}};
      const NormalWord g_inv = inverse(p, g);
      std::size_t best = g.length();
      for (std::size_t len = 1; len <= 2 * g.length(); ++len) {
        std::vector<NormalWord> next;
        for (const auto& k : frontier) {
          for (Letter l : moves) {
            NormalWord kk = multiply(p, k, l);
            if (kk.length() == len && seen.insert(kk).second) next.push_back(std::move(kk));
          }
        }
        for (const auto& k : next) best = std::min(best, multiply(p, g_inv, k).length());
        frontier = std::move(next);
      }
      if (static_cast<std::size_t>(greedy) != best && bad++ == 0) {
        first = format_word(p, g) + " vs {" + p.graph().format_subset(s) + "}";
      }
    }
    add(out, "greedy coset distance = coset scan, 200 samples over Gamma_2", bad == 0,
        std::to_string(bad) + " mismatches" + (bad ? ", first " + first : ""));
  });

  guarded(out, "cone-off distance shift, 50 samples", [&] {
    const Presentation gamma(family("gamma_d:2"), GroupKind::kRacg);
    const Presentation omega(family("omega_d:2"), GroupKind::kRacg);
    const BallIndex gamma_ball = build_ball(gamma, 5);
    const BallIndex omega_ball = build_ball(omega, 6);
    const SubgroupField link(gamma_ball, SpecialSubgroup{gamma.graph().parse_subset("a2,b2")});
    VertexSet base;
    for (const auto& name : gamma.graph().names()) base.insert(omega.graph().index(name));
    const SubgroupField base_field(omega_ball, SpecialSubgroup{base});
    const Letter t = omega.letter(omega.graph().index("t"));
    std::size_t bad = 0;
    std::string first;
    for (int sample = 0; sample < 50; ++sample) {
      const NormalWord x = random_element(gamma, rng, 5);
      Word tx{t};
      for (Letter l : x.letters()) tx.push_back(omega.letter(omega.graph().index(gamma.graph().name(vertex_of(l)))));
      const auto lhs = base_field.distance(omega_ball.require(reduce(omega, tx)));
      const auto rhs = link.distance(gamma_ball.require(x));
      if (!(lhs && rhs && *lhs == *rhs + 1) && bad++ == 0) first = format_word(gamma, x);
    }
    add(out, "cone-off distance shift, 50 samples", bad == 0,
        std::to_string(bad) + " mismatches" + (bad ? ", first x = " + first : ""));
  });

  guarded(out, "geodesic divergence in Omega_2 <= Gamma_2, r=2..5", [&] {
    const int radius = o.r_max.value_or(10);
    const Presentation gamma(family("gamma_d:2"), GroupKind::kRacg);
    const Presentation omega(family("omega_d:2"), GroupKind::kRacg);
    const std::vector<int> radii{2, 3, 4, 5};
    const auto g_rows = geodesic_divergence(
        build_ball_cached(gamma, radius, o.ball, o.cache_dir),
        PeriodicGeodesic(gamma, parse_word(gamma, "a2 b2")), radii);
    const auto o_rows = geodesic_divergence(
        build_ball_cached(omega, radius, o.ball, o.cache_dir),
        PeriodicGeodesic(omega, parse_word(omega, "a2 b2")), radii);
    bool ok = true;
    std::string detail = "R=" + std::to_string(radius) + ";";
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const auto& a = o_rows[i].value;
      const auto& b = g_rows[i].value;
      if (b && (!a || *a > *b)) ok = false;
      detail += " r=" + std::to_string(radii[i]) + ": " + fmt_value(a) + " <= " + fmt_value(b) + ";";
    }
    add(out, "geodesic divergence in Omega_2 <= Gamma_2, r=2..5", ok, detail);
  });
}

}  // namespace

const std::vector<std::string>& recipe_names() {
  static const std::vector<std::string> names = {"E1", "E2", "E3", "E4", "E5"};
  return names;
}

RecipeResult run_recipe(std::string_view name, const RecipeOptions& options) {
  static const std::vector<std::pair<std::string_view, void (*)(RecipeResult&, const RecipeOptions&)>>
      table = {{"E1", recipe_e1}, {"E2", recipe_e2}, {"E3", recipe_e3}, {"E4", recipe_e4},
               {"E5", recipe_e5}};
  for (const auto& [key, fn] : table) {
    if (key != name) continue;
    RecipeResult out;
    out.name = std::string(key);
    const auto start = Clock::now();
    fn(out, options);
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  }
  std::string valid;
  for (const auto& n : recipe_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw ValidationError("unknown recipe '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace morselab
