#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morselab/cayley.hpp"
#include "morselab/rational.hpp"

namespace morselab {

/// Which boundary points start a pair search.
///  kAll: every point of the boundary sphere inside the ball.
///  kAnchored: boundary points whose word length equals r. Every boundary
///    point is a subgroup translate of one of these, and translation by the
///    subgroup preserves both metrics, so the group-wide infimum is unchanged.
enum class SourceMode { kAll, kAnchored };

struct SigmaOptions {
  int n = 2;
  Rational rho{1};
  std::vector<int> radii;
  int r_max = 0;
  /// Extra room demanded beyond r + n*r when checking r_max.
  int slack = 0;
  std::size_t pair_cap = 100'000;
  SourceMode sources = SourceMode::kAll;
  unsigned threads = 1;
  BallOptions ball;
  std::optional<std::string> cache_dir;
};

struct SigmaRow {
  int r = 0;
  std::optional<std::int64_t> value;  // nullopt: infinite
  std::size_t pairs_examined = 0;
  bool capped = false;
  std::optional<NormalWord> witness_x;
  std::optional<NormalWord> witness_y;

  friend bool operator==(const SigmaRow&, const SigmaRow&) = default;
};

struct DivergenceProfile {
  int n = 2;
  Rational rho{1};
  int r_max = 0;
  /// The subgroup stopped growing inside the ball; rows follow the
  /// infinite-value convention for bounded subgroups.
  bool finite_subgroup = false;
  std::vector<SigmaRow> rows;
};

/// Lower relative divergence rows measured inside the ball of `field`.
DivergenceProfile sigma_profile(const SubgroupField& field, const SigmaOptions& options);
/// Builds (or loads) the ball of radius options.r_max first.
DivergenceProfile sigma_profile(const Presentation& p, const SubgroupSpec& spec,
                                const SigmaOptions& options);

std::string emit_profile_csv(const Presentation& p, const DivergenceProfile& profile);
/// Inverse of emit_profile_csv; r_max is not part of the format and stays 0.
DivergenceProfile parse_profile_csv(const Presentation& p, std::string_view text);

/// Bi-infinite geodesic through the identity reading ...www... with the
/// identity between two copies of the label w.
class PeriodicGeodesic {
 public:
  /// Throws PreconditionError unless |w^k| = k|w| for k = 1..horizon.
  PeriodicGeodesic(const Presentation& p, Word label, int horizon = 8);
  PeriodicGeodesic(const Presentation& p, const NormalWord& period, int horizon = 8);

  const Word& label() const { return label_; }
  std::size_t period_length() const { return label_.size(); }
  /// The point at signed arc length t.
  NormalWord point(long t) const;
  /// The same line re-centred at point(k).
  PeriodicGeodesic rotated(std::size_t k) const;

 private:
  Presentation presentation_;
  Word label_;
  int horizon_;
};

struct GeodesicRow {
  int r = 0;
  std::optional<std::int64_t> value;
};

struct GeodesicOptions {
  std::vector<int> radii;
  int r_max = 0;
  int slack = 0;
  BallOptions ball;
  std::optional<std::string> cache_dir;
};

std::vector<GeodesicRow> geodesic_divergence(const BallIndex& ball, const PeriodicGeodesic& line,
                                             const std::vector<int>& radii, int slack = 0);
std::vector<GeodesicRow> geodesic_divergence(const Presentation& p, const PeriodicGeodesic& line,
                                             const GeodesicOptions& options);
/// Minimum of the divergence over the centres inside one period.
std::vector<GeodesicRow> geodesic_lower_divergence(const BallIndex& ball,
                                                   const PeriodicGeodesic& line,
                                                   const std::vector<int>& radii, int slack = 0);
std::vector<GeodesicRow> geodesic_lower_divergence(const Presentation& p,
                                                   const PeriodicGeodesic& line,
                                                   const GeodesicOptions& options);

std::string emit_geodesic_csv(const std::vector<GeodesicRow>& rows);

/// Path between two boundary points of the r-neighbourhood of a special
/// subgroup, running along a flat spanned by an induced square.
struct Pip1Witness {
  /// Square vertices in the order (a1, b1, a2, b2): a1, a2 in the subset, b1 not.
  std::array<std::size_t, 4> orientation{};
  int m = 0;
  std::vector<NormalWord> path;
  /// Subgroup distance of every path vertex.
  std::vector<int> distances;
  int length() const { return static_cast<int>(path.size()) - 1; }
};

/// `m` of 0 selects m = r; otherwise r <= m <= 2r.
Pip1Witness pip1_witness_path(const DefiningGraph& g, VertexSet s1, const InducedCycle& square,
                              int n, int r, int m = 0);

enum class BoundKind { kPip1Upper, kPip2Lower, kKmtLower };

std::string_view to_string(BoundKind kind);
BoundKind parse_bound_kind(std::string_view text);

struct BoundArgs {
  int n = 0;
  int r = 0;
  Rational rho{1};
  /// Bound on join subword length.
  int join_bound = 0;
  /// Morse gauge constant of the subgroup.
  int morse_constant = 0;
};

/// Exact closed forms:
///   pip1_upper (4n+2)r                          n >= 2, r > 1
///   pip2_lower (r-1)(rho r - 1)                 n >= 3, r > 0
///   kmt_lower  ((r-1)/(3N+1))(rho r - 3N) - 2r  n >= 9, r > (2M+3N+2)/rho
Rational closed_form_bound(BoundKind kind, const BoundArgs& args);

struct GrowthReport {
  double loglog_slope = 0.0;
  bool superlinear = false;
  std::size_t rows_used = 0;
};

/// Least-squares slope of log(value) against log(r) over finite positive rows,
/// and whether value/r strictly increases with r. Needs at least three rows.
GrowthReport growth_diagnostic(const std::vector<std::pair<int, std::optional<std::int64_t>>>& rows);
GrowthReport growth_diagnostic(const DivergenceProfile& profile);
GrowthReport growth_diagnostic(const std::vector<GeodesicRow>& rows);

}  // namespace morselab
