#include "morselab/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "morselab/ball_cache.hpp"
#include "morselab/errors.hpp"

namespace morselab {

namespace {

constexpr std::size_t kSourceBatch = 32;
constexpr int kUnbounded = std::numeric_limits<int>::max();

struct SourceResult {
  int value = kUnbounded;
  ElementId partner = kNoElement;
  std::size_t pairs = 0;
};

// Per-thread scratch for one pair scan.
class PairScanner {
 public:
  PairScanner(const SubgroupField& field, int r, int exclusion, std::int64_t threshold)
      : field_(field), ball_(field.ball()), search_(field.ball()), r_(r), exclusion_(exclusion),
        threshold_(threshold) {}

  SourceResult scan(ElementId x, int bound) {
    SourceResult out;
    const Presentation& p = ball_.presentation();
    x_inverse_.clear();
    const auto xl = ball_.letters(x);
    for (auto it = xl.rbegin(); it != xl.rend(); ++it) x_inverse_.push_back(p.inverse(*it));
    const int dx = ball_.depth(x);

    auto admissible = [&](ElementId v) { return field_.at_least(v, exclusion_); };
    search_.run(x, admissible, [&](std::span<const ElementId> layer, int depth) {
      if (depth >= bound) return true;
      if (depth < threshold_) return false;
      ElementId best = kNoElement;
      for (ElementId y : layer) {
        if (!field_.exact(y) || field_.upper_bound(y) != r_) continue;
        ++out.pairs;
        if (y < best && far_enough(dx, y)) best = y;
      }
      if (best == kNoElement) return false;
      out.value = depth;
      out.partner = best;
      return true;
    });
    return out;
  }

 private:
  bool far_enough(int dx, ElementId y) {
    const int dy = ball_.depth(y);
    if (dx + dy < threshold_) return false;
    if (std::abs(dx - dy) >= threshold_) return true;
    buffer_ = x_inverse_;
    for (Letter l : ball_.letters(y)) append_letter(ball_.presentation(), buffer_, l);
    return static_cast<std::int64_t>(buffer_.size()) >= threshold_;
  }

  const SubgroupField& field_;
  const BallIndex& ball_;
  BallSearch search_;
  int r_;
  int exclusion_;
  std::int64_t threshold_;
  std::vector<Letter> x_inverse_;
  std::vector<Letter> buffer_;
};

SigmaRow sigma_row(const SubgroupField& field, int r, const SigmaOptions& o) {
  const BallIndex& ball = field.ball();
  SigmaRow row;
  row.r = r;
  const int exclusion = static_cast<int>((o.rho * Rational(r)).ceil());
  const std::int64_t threshold = static_cast<std::int64_t>(o.n) * r;

  std::vector<ElementId> sources;
  const auto count = static_cast<ElementId>(ball.size());
  for (ElementId id = 0; id < count; ++id) {
    if (!field.exact(id) || field.upper_bound(id) != r) continue;
    if (o.sources == SourceMode::kAnchored && ball.depth(id) != r) continue;
    sources.push_back(id);
  }

  const unsigned threads = std::max(1U, o.threads);
  std::vector<PairScanner> scanners;
  scanners.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) scanners.emplace_back(field, r, exclusion, threshold);

  int best = kUnbounded;
  ElementId best_x = kNoElement;
  ElementId best_y = kNoElement;
  std::vector<SourceResult> results;
  for (std::size_t start = 0; start < sources.size(); start += kSourceBatch) {
    const std::size_t stop = std::min(sources.size(), start + kSourceBatch);
    results.assign(stop - start, SourceResult{});
    // Pruning uses only the bound from finished batches so that results do
    // not depend on the thread count.
    const int bound = best;
    auto work = [&](unsigned t) {
      for (std::size_t i = start + t; i < stop; i += threads) {
        results[i - start] = scanners[t].scan(sources[i], bound);
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = start; i < stop; ++i) {
      if (row.pairs_examined >= o.pair_cap) {
        row.capped = true;
        break;
      }
      const SourceResult& res = results[i - start];
      row.pairs_examined += res.pairs;
      if (res.value < best) {
        best = res.value;
        best_x = sources[i];
        best_y = res.partner;
      }
    }
    if (row.capped) break;
  }
  if (best != kUnbounded) {
    row.value = best;
    row.witness_x = ball.word(best_x);
    row.witness_y = ball.word(best_y);
  }
  return row;
}

}  // namespace

DivergenceProfile sigma_profile(const SubgroupField& field, const SigmaOptions& o) {
  if (o.n < 1) throw PreconditionError("n must be positive");
  if (o.rho <= Rational(0) || o.rho > Rational(1)) throw PreconditionError("rho must lie in (0, 1]");
  const int r_max = field.ball().radius();
  for (int r : o.radii) {
    if (r < 1) throw PreconditionError("radii must be positive");
    const std::int64_t need = static_cast<std::int64_t>(r) + static_cast<std::int64_t>(o.n) * r + o.slack;
    if (need > r_max) {
      throw PreconditionError("r = " + std::to_string(r) + " needs r + n*r + slack = " +
                              std::to_string(need) + " but the ball radius is " +
                              std::to_string(r_max));
    }
  }
  DivergenceProfile profile;
  profile.n = o.n;
  profile.rho = o.rho;
  profile.r_max = r_max;
  profile.finite_subgroup = !field.looks_infinite();
  for (int r : o.radii) {
    if (profile.finite_subgroup) {
      profile.rows.push_back(SigmaRow{.r = r});
    } else {
      profile.rows.push_back(sigma_row(field, r, o));
    }
  }
  return profile;
}

DivergenceProfile sigma_profile(const Presentation& p, const SubgroupSpec& spec,
                                const SigmaOptions& options) {
  for (int r : options.radii) {
    const std::int64_t need =
        static_cast<std::int64_t>(r) + static_cast<std::int64_t>(options.n) * r + options.slack;
    if (need > options.r_max) {
      throw PreconditionError("r = " + std::to_string(r) + " needs r + n*r + slack = " +
                              std::to_string(need) + " > r_max = " +
                              std::to_string(options.r_max));
    }
  }
  const BallIndex ball = build_ball_cached(p, options.r_max, options.ball, options.cache_dir);
  const SubgroupField field(ball, spec);
  return sigma_profile(field, options);
}

PeriodicGeodesic::PeriodicGeodesic(const Presentation& p, Word label, int horizon)
    : presentation_(p), label_(std::move(label)), horizon_(horizon) {
  if (label_.empty()) throw PreconditionError("geodesic period must be nontrivial");
  for (Letter& l : label_) {
    if (vertex_of(l) >= p.graph().size()) throw ValidationError("letter outside presentation");
    if (!p.is_raag()) l = static_cast<Letter>(l & ~1U);
  }
  Word power;
  for (int k = 1; k <= horizon_; ++k) {
    power.insert(power.end(), label_.begin(), label_.end());
    if (reduce(p, power).length() != power.size()) {
      throw PreconditionError("period '" + format_word(p, label_) + "' is not geodesic: power " +
                              std::to_string(k) + " shortens");
    }
  }
}

PeriodicGeodesic::PeriodicGeodesic(const Presentation& p, const NormalWord& period, int horizon)
    : PeriodicGeodesic(p, Word(period.letters().begin(), period.letters().end()), horizon) {}

NormalWord PeriodicGeodesic::point(long t) const {
  const std::size_t len = label_.size();
  const std::size_t steps = static_cast<std::size_t>(t < 0 ? -t : t);
  Word w;
  w.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    w.push_back(t >= 0 ? label_[i % len] : presentation_.inverse(label_[len - 1 - (i % len)]));
  }
  return reduce(presentation_, w);
}

PeriodicGeodesic PeriodicGeodesic::rotated(std::size_t k) const {
  k %= label_.size();
  Word w(label_.begin() + static_cast<std::ptrdiff_t>(k), label_.end());
  w.insert(w.end(), label_.begin(), label_.begin() + static_cast<std::ptrdiff_t>(k));
  return PeriodicGeodesic(presentation_, std::move(w), horizon_);
}

namespace {

void check_geodesic_radius(const BallIndex& ball, int r, int slack) {
  if (r < 1 || r > ball.radius() - slack) {
    throw PreconditionError("divergence radius " + std::to_string(r) + " outside [1, " +
                            std::to_string(ball.radius() - slack) + "]");
  }
}

std::optional<std::int64_t> detour_length(const BallIndex& ball, BallSearch& search,
                                          const PeriodicGeodesic& line, int r) {
  const ElementId from = ball.require(line.point(-r));
  const ElementId to = ball.require(line.point(r));
  const auto d = search.distance(from, to, [&](ElementId v) { return ball.depth(v) >= r; });
  if (!d) return std::nullopt;
  return *d;
}

}  // namespace

std::vector<GeodesicRow> geodesic_divergence(const BallIndex& ball, const PeriodicGeodesic& line,
                                             const std::vector<int>& radii, int slack) {
  for (int r : radii) check_geodesic_radius(ball, r, slack);
  BallSearch search(ball);
  std::vector<GeodesicRow> rows;
  for (int r : radii) rows.push_back({r, detour_length(ball, search, line, r)});
  return rows;
}

std::vector<GeodesicRow> geodesic_divergence(const Presentation& p, const PeriodicGeodesic& line,
                                             const GeodesicOptions& options) {
  for (int r : options.radii) {
    if (r < 1 || r > options.r_max - options.slack) {
      throw PreconditionError("divergence radius " + std::to_string(r) + " exceeds r_max - slack");
    }
  }
  const BallIndex ball = build_ball_cached(p, options.r_max, options.ball, options.cache_dir);
  return geodesic_divergence(ball, line, options.radii, options.slack);
}

std::vector<GeodesicRow> geodesic_lower_divergence(const BallIndex& ball,
                                                   const PeriodicGeodesic& line,
                                                   const std::vector<int>& radii, int slack) {
  for (int r : radii) check_geodesic_radius(ball, r, slack);
  BallSearch search(ball);
  std::vector<GeodesicRow> rows;
  for (int r : radii) {
    GeodesicRow row{r, std::nullopt};
    for (std::size_t k = 0; k < line.period_length(); ++k) {
      const auto value = detour_length(ball, search, line.rotated(k), r);
      if (value && (!row.value || *value < *row.value)) row.value = value;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<GeodesicRow> geodesic_lower_divergence(const Presentation& p,
                                                   const PeriodicGeodesic& line,
                                                   const GeodesicOptions& options) {
  for (int r : options.radii) {
    if (r < 1 || r > options.r_max - options.slack) {
      throw PreconditionError("divergence radius " + std::to_string(r) + " exceeds r_max - slack");
    }
  }
  const BallIndex ball = build_ball_cached(p, options.r_max, options.ball, options.cache_dir);
  return geodesic_lower_divergence(ball, line, options.radii, options.slack);
}

Pip1Witness pip1_witness_path(const DefiningGraph& g, VertexSet s1, const InducedCycle& square,
                              int n, int r, int m) {
  if (square.length() != 4 || !is_induced_cycle(g, square.vertices())) {
    throw PreconditionError("witness needs an induced 4-cycle of the graph");
  }
  if (n < 1 || r < 1) throw PreconditionError("witness needs n >= 1 and r >= 1");
  if (m == 0) m = r;
  if (m < r || m > 2 * r) throw PreconditionError("witness needs r <= m <= 2r");

  const auto& c = square.vertices();
  std::optional<std::array<std::size_t, 4>> orientation;
  for (std::size_t shift = 0; shift < 2 && !orientation; ++shift) {
    const std::size_t a1 = c[shift];
    const std::size_t a2 = c[shift + 2];
    if (!s1.contains(a1) || !s1.contains(a2)) continue;
    const std::size_t b = c[shift + 1];
    const std::size_t b_other = c[(shift + 3) % 4];
    if (!s1.contains(b)) {
      orientation = std::array<std::size_t, 4>{a1, b, a2, b_other};
    } else if (!s1.contains(b_other)) {
      orientation = std::array<std::size_t, 4>{a1, b_other, a2, b};
    }
  }
  if (!orientation) {
    throw PreconditionError("no side of the square has both ends in the subset with an opposite "
                            "vertex outside it");
  }

  const Presentation p(g, GroupKind::kRacg);
  const auto [a1, b1, a2, b2] = *orientation;
  Word x;
  for (int i = 0; i < m; ++i) x.push_back(p.letter(i % 2 == 0 ? b1 : b2));

  Pip1Witness out;
  out.orientation = *orientation;
  out.m = m;
  NormalWord current = reduce(p, std::span<const Letter>(x.data(), static_cast<std::size_t>(r)));
  out.path.push_back(current);
  for (int i = r; i < m; ++i) out.path.push_back(current = multiply(p, current, x[i]));
  for (long j = 0; j < 2L * m * n; ++j) {
    out.path.push_back(current = multiply(p, current, p.letter(j % 2 == 0 ? a1 : a2)));
  }
  for (int i = m - 1; i >= r; --i) out.path.push_back(current = multiply(p, current, x[i]));

  for (const auto& vertex : out.path) {
    const int d = special_subgroup_distance(p, s1, vertex);
    if (d < r) throw Error("internal: witness path enters the open r-neighbourhood");
    out.distances.push_back(d);
  }
  return out;
}

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kPip1Upper: return "pip1_upper";
    case BoundKind::kPip2Lower: return "pip2_lower";
    case BoundKind::kKmtLower: return "kmt_lower";
  }
  return "?";
}

BoundKind parse_bound_kind(std::string_view text) {
  for (BoundKind k : {BoundKind::kPip1Upper, BoundKind::kPip2Lower, BoundKind::kKmtLower}) {
    if (to_string(k) == text) return k;
  }
  throw ParseError("unknown bound '" + std::string(text) + "'");
}

Rational closed_form_bound(BoundKind kind, const BoundArgs& a) {
  if (a.rho <= Rational(0) || a.rho > Rational(1)) throw PreconditionError("rho must lie in (0, 1]");
  const Rational r(a.r);
  switch (kind) {
    case BoundKind::kPip1Upper:
      if (a.n < 2 || a.r <= 1) throw PreconditionError("pip1_upper needs n >= 2 and r > 1");
      return Rational(4L * a.n + 2) * r;
    case BoundKind::kPip2Lower:
      if (a.n < 3 || a.r <= 0) throw PreconditionError("pip2_lower needs n >= 3 and r > 0");
      return (r - Rational(1)) * (a.rho * r - Rational(1));
    case BoundKind::kKmtLower: {
      if (a.n < 9) throw PreconditionError("kmt_lower needs n >= 9");
      if (a.join_bound < 0 || a.morse_constant < 0) {
        throw PreconditionError("kmt_lower constants must be non-negative");
      }
      const Rational big_n(a.join_bound);
      const Rational floor_r = Rational(2L * a.morse_constant + 3L * a.join_bound + 2) / a.rho;
      if (!(r > floor_r)) {
        throw PreconditionError("kmt_lower needs r > (2M + 3N + 2)/rho = " + floor_r.str());
      }
      return ((r - Rational(1)) / (Rational(3) * big_n + Rational(1))) *
                 (a.rho * r - Rational(3) * big_n) -
             Rational(2) * r;
    }
  }
  throw PreconditionError("unknown bound kind");
}

GrowthReport growth_diagnostic(
    const std::vector<std::pair<int, std::optional<std::int64_t>>>& rows) {
  std::vector<std::pair<double, double>> points;
  for (const auto& [r, value] : rows) {
    if (r > 0 && value && *value > 0) points.emplace_back(r, static_cast<double>(*value));
  }
  if (points.size() < 3) {
    throw InsufficientData("growth diagnostic needs at least 3 finite rows, got " +
                           std::to_string(points.size()));
  }
  std::sort(points.begin(), points.end());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [r, v] : points) {
    const double x = std::log(r);
    const double y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(points.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0.0) throw InsufficientData("growth diagnostic needs distinct radii");
  GrowthReport report;
  report.loglog_slope = (k * sxy - sx * sy) / denom;
  report.rows_used = points.size();
  report.superlinear = true;
  for (std::size_t i = 1; i < points.size(); ++i) {
    // value_i / r_i > value_{i-1} / r_{i-1}, compared without division
    if (!(points[i].second * points[i - 1].first > points[i - 1].second * points[i].first)) {
      report.superlinear = false;
    }
  }
  return report;
}

GrowthReport growth_diagnostic(const DivergenceProfile& profile) {
  std::vector<std::pair<int, std::optional<std::int64_t>>> rows;
  for (const auto& row : profile.rows) rows.emplace_back(row.r, row.value);
  return growth_diagnostic(rows);
}

GrowthReport growth_diagnostic(const std::vector<GeodesicRow>& rows) {
  std::vector<std::pair<int, std::optional<std::int64_t>>> pairs;
  for (const auto& row : rows) pairs.emplace_back(row.r, row.value);
  return growth_diagnostic(pairs);
}

}  // namespace morselab
