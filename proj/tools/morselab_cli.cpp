// morselab: command-line front end for the RACG/RAAG toolkit.
//
// Exit codes: 0 success, 1 input or precondition error, 2 outside the scope
// of a classifier, 3 ball budget exceeded, 4 a recipe check failed.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <json.hpp>

#include "morselab/ball_cache.hpp"
#include "morselab/classify.hpp"
#include "morselab/divergence.hpp"
#include "morselab/errors.hpp"
#include "morselab/experiments.hpp"

using namespace morselab;

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kOutsideScope = 2, kBudget = 3, kCheckFailed = 4 };

struct Config {
  std::string graph = "c4";
  std::string kind = "racg";
  std::string subset;
  std::vector<std::string> gens;
  int n = 2;
  std::string rho = "1";
  std::string radii;
  int r_max = 0;
  std::string period;
  std::string out;
  std::size_t pair_cap = 100'000;
  std::string sources = "anchored";
  unsigned threads = 1;
  std::size_t budget = BallOptions{}.element_budget;
  std::uint64_t seed = RecipeOptions{}.seed;
  std::string word;
  std::string to;
  std::string cycle;
  int m = 0;
  int r = 0;
  std::size_t max_len = 8;
  int product_length = 4;
  std::string recipe;
};

int parse_int(const std::string& s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParseError("bad integer '" + s + "'");
  return v;
}

/// "a..b", "a,b,c" or a single value.
std::vector<int> parse_radii(const std::string& text) {
  if (text.empty()) throw ParseError("--r is required");
  std::vector<int> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw ParseError("empty radius range '" + text + "'");
    for (int r = lo; r <= hi; ++r) out.push_back(r);
    return out;
  }
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start)));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::string commas_to_spaces(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ' ';
  }
  return s;
}

Presentation presentation(const Config& c) {
  return Presentation(resolve_graph(c.graph), parse_group_kind(c.kind));
}

SubgroupSpec subgroup(const Presentation& p, const Config& c) {
  if (!c.subset.empty() && !c.gens.empty()) throw ParseError("give either --subset or --gens");
  if (!c.subset.empty()) return SpecialSubgroup{p.graph().parse_subset(c.subset)};
  if (c.gens.empty()) throw ParseError("a subgroup needs --subset or --gens");
  FinitelyGeneratedSubgroup fg;
  for (const auto& g : c.gens) fg.generators.push_back(parse_normal_word(p, g));
  return fg;
}

BallOptions ball_options(const Config& c) {
  BallOptions b;
  b.element_budget = c.budget;
  return b;
}

void write_output(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ValidationError("cannot write '" + c.out + "'");
  f << text;
}

void print_growth(const GrowthReport& g) {
  std::cout << "summary: loglog_slope=" << g.loglog_slope
            << " superlinear=" << (g.superlinear ? "true" : "false") << " rows=" << g.rows_used
            << '\n';
}

template <class Rows>
void summarize_growth(const Rows& rows) {
  try {
    print_growth(growth_diagnostic(rows));
  } catch (const InsufficientData& e) {
    std::cout << "summary: growth diagnostic unavailable (" << e.what() << ")\n";
  }
}

int cmd_classify(const Config& c) {
  const DefiningGraph g = resolve_graph(c.graph);
  const auto report = classify_special_racg(g, g.parse_subset(c.subset));
  std::cout << to_json(report) << '\n';
  return report.any_outside_scope() ? kOutsideScope : kOk;
}

int cmd_sigma(const Config& c) {
  const Presentation p = presentation(c);
  SigmaOptions o;
  o.n = c.n;
  o.rho = Rational::parse(c.rho);
  o.radii = parse_radii(c.radii);
  o.r_max = c.r_max;
  o.pair_cap = c.pair_cap;
  o.sources = c.sources == "all" ? SourceMode::kAll : SourceMode::kAnchored;
  o.threads = c.threads;
  o.ball = ball_options(c);
  o.cache_dir = cache_dir_from_env();
  const auto profile = sigma_profile(p, subgroup(p, c), o);
  write_output(c, emit_profile_csv(p, profile));
  if (profile.finite_subgroup) std::cout << "summary: subgroup is bounded in the ball; rows are inf\n";
  summarize_growth(profile);
  return kOk;
}

int cmd_geodesic(const Config& c, bool lower) {
  const Presentation p = presentation(c);
  if (c.period.empty()) throw ParseError("--period is required");
  const PeriodicGeodesic line(p, parse_word(p, commas_to_spaces(c.period)));
  GeodesicOptions o;
  o.radii = parse_radii(c.radii);
  o.r_max = c.r_max;
  o.ball = ball_options(c);
  o.cache_dir = cache_dir_from_env();
  const auto rows =
      lower ? geodesic_lower_divergence(p, line, o) : geodesic_divergence(p, line, o);
  write_output(c, emit_geodesic_csv(rows));
  summarize_growth(rows);
  return kOk;
}

int cmd_distance(const Config& c) {
  const Presentation p = presentation(c);
  const NormalWord g = parse_normal_word(p, c.word);
  if (!c.to.empty()) {
    const NormalWord h = parse_normal_word(p, c.to);
    std::cout << multiply(p, inverse(p, g), h).length() << '\n';
    return kOk;
  }
  const SubgroupSpec spec = subgroup(p, c);
  if (const auto* special = std::get_if<SpecialSubgroup>(&spec)) {
    std::cout << special_subgroup_distance(p, special->generators, g) << '\n';
    return kOk;
  }
  const int radius = c.r_max > 0 ? c.r_max : 2 * static_cast<int>(g.length()) + 4;
  const BallIndex ball = build_ball_cached(p, radius, ball_options(c), cache_dir_from_env());
  std::cout << subgroup_distance(SubgroupField(ball, spec), g) << '\n';
  return kOk;
}

int cmd_reduce(const Config& c) {
  const Presentation p = presentation(c);
  const NormalWord w = parse_normal_word(p, c.word);
  std::cout << format_word(p, w) << '\n';
  std::cout << "length " << w.length() << '\n';
  return kOk;
}

int cmd_pip1(const Config& c) {
  const DefiningGraph g = resolve_graph(c.graph);
  const VertexSet s1 = g.parse_subset(c.subset);
  std::vector<InducedCycle> candidates;
  if (!c.cycle.empty()) {
    std::vector<std::size_t> vs;
    std::string item;
    std::stringstream ss(c.cycle);
    while (std::getline(ss, item, ',')) vs.push_back(g.index(item));
    candidates.emplace_back(vs);
  } else {
    candidates = enumerate_induced_4cycles(g);
  }
  std::optional<Pip1Witness> witness;
  std::string last_error = "graph has no induced 4-cycle";
  for (const auto& sq : candidates) {
    try {
      witness = pip1_witness_path(g, s1, sq, c.n, c.r, c.m);
      break;
    } catch (const PreconditionError& e) {
      last_error = e.what();
    }
  }
  if (!witness) throw PreconditionError(last_error);
  const Presentation p(g, GroupKind::kRacg);
  nlohmann::ordered_json doc;
  doc["orientation"] = nlohmann::ordered_json::array();
  for (auto v : witness->orientation) doc["orientation"].push_back(g.name(v));
  doc["n"] = c.n;
  doc["r"] = c.r;
  doc["m"] = witness->m;
  doc["length"] = witness->length();
  if (c.n >= 2 && c.r > 1) {
    doc["bound"] = closed_form_bound(BoundKind::kPip1Upper, {.n = c.n, .r = c.r}).str();
  }
  doc["path"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < witness->path.size(); ++i) {
    doc["path"].push_back({{"word", format_word(p, witness->path[i])},
                           {"subgroup_distance", witness->distances[i]}});
  }
  write_output(c, doc.dump(2) + "\n");
  return kOk;
}

int cmd_morse_boundary(const Config& c) {
  const DefiningGraph g = resolve_graph(c.graph);
  const auto cycle = morse_boundary_witness(g, c.max_len);
  if (!cycle) {
    std::cout << "none\n";
    return kOk;
  }
  std::string text;
  for (auto v : cycle->vertices()) text += (text.empty() ? "" : ",") + g.name(v);
  std::cout << text << '\n';
  return kOk;
}

int cmd_loxodromic(const Config& c) {
  const Presentation p(resolve_graph(c.graph), GroupKind::kRaag);
  std::vector<NormalWord> words;
  for (const auto& g : c.gens) words.push_back(parse_normal_word(p, g));
  std::cout << to_json(loxodromic_report(p, words, c.product_length)) << '\n';
  return kOk;
}

int cmd_recipe(const Config& c, bool r_max_given) {
  RecipeOptions o;
  o.seed = c.seed;
  o.threads = c.threads;
  if (r_max_given) o.r_max = c.r_max;
  o.pair_cap = c.pair_cap;
  o.ball = ball_options(c);
  o.cache_dir = cache_dir_from_env();
  const auto result = run_recipe(c.recipe, o);
  std::cout << result.render();
  return result.passed() ? kOk : kCheckFailed;
}

void add_graph(CLI::App* cmd, Config& c, bool with_kind = true) {
  cmd->add_option("--graph", c.graph, "family name (c4, p4, c5, cycle:N, path:N, gamma_d:D, omega_d:D) or JSON file");
  if (with_kind) cmd->add_option("--kind", c.kind, "racg or raag");
}

void add_subgroup(CLI::App* cmd, Config& c) {
  cmd->add_option("--subset", c.subset, "comma separated vertex names of a special subgroup");
  cmd->add_option("--gens", c.gens, "comma separated generator words")->delimiter(',');
}

void add_ball(CLI::App* cmd, Config& c) {
  cmd->add_option("--rmax", c.r_max, "ball radius");
  cmd->add_option("--budget", c.budget, "maximum ball elements");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for right-angled Coxeter and Artin groups"};
  app.require_subcommand(1);
  Config c;

  auto* classify = app.add_subcommand("classify", "classify a special subgroup of a RACG");
  add_graph(classify, c, false);
  classify->add_option("--subset", c.subset)->required();

  auto* divergence = app.add_subcommand("divergence", "divergence measurements");
  divergence->require_subcommand(1);
  auto* sigma = divergence->add_subcommand("sigma", "lower relative divergence profile");
  auto* geodesic = divergence->add_subcommand("geodesic", "divergence of a periodic geodesic");
  auto* ldiv = divergence->add_subcommand("ldiv", "lower divergence of a periodic geodesic");
  for (auto* cmd : {sigma, geodesic, ldiv}) {
    add_graph(cmd, c);
    add_ball(cmd, c);
    cmd->add_option("--r", c.radii, "radii as a..b or a,b,c")->required();
    cmd->add_option("--out", c.out, "CSV output path (default stdout)");
  }
  add_subgroup(sigma, c);
  sigma->add_option("--n", c.n);
  sigma->add_option("--rho", c.rho, "rational in (0,1]");
  sigma->add_option("--pair-cap", c.pair_cap);
  sigma->add_option("--sources", c.sources, "anchored or all")
      ->check(CLI::IsMember({"anchored", "all"}));
  sigma->add_option("--threads", c.threads);
  for (auto* cmd : {geodesic, ldiv}) cmd->add_option("--period", c.period, "period letters, e.g. a2,b2")->required();

  auto* distance = app.add_subcommand("distance", "word or subgroup distance");
  add_graph(distance, c);
  add_subgroup(distance, c);
  add_ball(distance, c);
  distance->add_option("--word", c.word)->required();
  distance->add_option("--to", c.to, "second element for a word distance");

  auto* reduce_cmd = app.add_subcommand("reduce", "normal form of a word");
  add_graph(reduce_cmd, c);
  reduce_cmd->add_option("--word", c.word)->required();

  auto* witness = app.add_subcommand("witness", "witness constructions");
  witness->require_subcommand(1);
  auto* pip1 = witness->add_subcommand("pip1", "linear-length path between boundary points");
  add_graph(pip1, c, false);
  pip1->add_option("--subset", c.subset)->required();
  pip1->add_option("--n", c.n);
  pip1->add_option("--r", c.r)->required();
  pip1->add_option("--m", c.m, "flat depth, r <= m <= 2r (default r)");
  pip1->add_option("--cycle", c.cycle, "induced 4-cycle as comma separated names");
  pip1->add_option("--out", c.out);
  auto* morse = witness->add_subcommand("morse-boundary", "long induced cycle avoiding square diagonals");
  add_graph(morse, c, false);
  morse->add_option("--max-len", c.max_len);

  auto* lox = app.add_subcommand("loxodromic", "loxodromic report for RAAG elements");
  add_graph(lox, c, false);
  lox->add_option("--gens", c.gens)->delimiter(',')->required();
  lox->add_option("--k", c.product_length, "product length of the sampled check");

  auto* recipe = app.add_subcommand("recipe", "canned acceptance experiment");
  recipe->add_option("name", c.recipe, "E1..E5")->required();
  recipe->add_option("--seed", c.seed);
  auto* recipe_rmax = recipe->add_option("--rmax", c.r_max);
  recipe->add_option("--threads", c.threads);
  recipe->add_option("--pair-cap", c.pair_cap);
  recipe->add_option("--budget", c.budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (classify->parsed()) return cmd_classify(c);
    if (sigma->parsed()) return cmd_sigma(c);
    if (geodesic->parsed()) return cmd_geodesic(c, false);
    if (ldiv->parsed()) return cmd_geodesic(c, true);
    if (distance->parsed()) return cmd_distance(c);
    if (reduce_cmd->parsed()) return cmd_reduce(c);
    if (pip1->parsed()) return cmd_pip1(c);
    if (morse->parsed()) return cmd_morse_boundary(c);
    if (lox->parsed()) return cmd_loxodromic(c);
    if (recipe->parsed()) return cmd_recipe(c, recipe_rmax->count() > 0);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (completed layer " << e.completed_radius() << ", "
              << e.elements() << " elements); lower --rmax or raise --budget\n";
    return kBudget;
  } catch (const ScopeError& e) {
    std::cerr << "outside scope: " << e.what() << '\n';
    return kOutsideScope;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
