#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "morselab/words.hpp"

namespace morselab {

using ElementId = std::uint32_t;
inline constexpr ElementId kNoElement = 0xFFFFFFFFU;

struct BallOptions {
  /// Hard cap on enumerated elements; exceeding it throws BudgetExceeded.
  std::size_t element_budget = 8'000'000;
};

/// All elements of word length <= R, numbered in BFS order: ids of length d
/// form the contiguous range [layer_begin(d), layer_begin(d + 1)).
class BallIndex {
 public:
  const Presentation& presentation() const { return presentation_; }
  int radius() const { return radius_; }
  std::size_t size() const { return layer_begin_.back(); }
  /// Number of generator letters, i.e. out-degree of every vertex.
  std::size_t degree() const { return presentation_.alphabet().size(); }

  std::span<const Letter> letters(ElementId id) const;
  NormalWord word(ElementId id) const;
  int depth(ElementId id) const;

  std::optional<ElementId> find(std::span<const Letter> normal_letters) const;
  std::optional<ElementId> find(const NormalWord& w) const { return find(w.letters()); }
  /// Like find() but throws PreconditionError outside the ball.
  ElementId require(const NormalWord& w) const;

  /// id * alphabet()[k], or kNoElement when that lies outside the ball.
  ElementId neighbour(ElementId id, std::size_t k) const { return adjacency_[id * degree() + k]; }
  std::span<const ElementId> neighbours(ElementId id) const {
    return {adjacency_.data() + id * degree(), degree()};
  }

  ElementId layer_begin(int d) const { return layer_begin_[static_cast<std::size_t>(d)]; }
  std::vector<std::size_t> sphere_sizes() const;

 private:
  friend BallIndex build_ball(const Presentation& p, int radius, const BallOptions& options);
  friend struct BallCodec;

  explicit BallIndex(Presentation p) : presentation_(std::move(p)) {}

  std::uint64_t offset(ElementId id) const;
  std::uint64_t hash_letters(std::span<const Letter> letters) const;
  void rebuild_table(std::size_t capacity);
  ElementId lookup_or_insert(std::span<const Letter> letters, int layer, bool& inserted);

  Presentation presentation_;
  int radius_ = 0;
  std::vector<Letter> arena_;
  std::vector<std::uint64_t> layer_offset_;  // arena position of each layer
  std::vector<ElementId> layer_begin_;       // radius + 2 entries
  std::vector<ElementId> adjacency_;
  std::vector<ElementId> table_;  // open addressing over ids
};

/// Throws BudgetExceeded(last complete layer, elements) when the budget is hit.
BallIndex build_ball(const Presentation& p, int radius, const BallOptions& options = {});

struct SpecialSubgroup {
  VertexSet generators;
};

struct FinitelyGeneratedSubgroup {
  std::vector<NormalWord> generators;
};

using SubgroupSpec = std::variant<SpecialSubgroup, FinitelyGeneratedSubgroup>;

/// Distance to a special subgroup via greedy right descent; no ball needed.
int special_subgroup_distance(const Presentation& p, VertexSet s1, const NormalWord& g);

/// Subgroup distances for every element of a ball.
///
/// Special subgroups are exact everywhere. For finitely generated subgroups the
/// members are the multiplicative closure of the generators inside the ball,
/// and a value is exact when the nearest member found lies within
/// R - |g| of g (then every geodesic to a nearer member would stay inside).
class SubgroupField {
 public:
  static constexpr int kUnreached = -1;

  SubgroupField(const BallIndex& ball, const SubgroupSpec& spec);

  const BallIndex& ball() const { return *ball_; }
  const SubgroupSpec& spec() const { return spec_; }

  /// In-ball distance to the nearest member; an upper bound, kUnreached if none.
  int upper_bound(ElementId id) const { return distance_[id]; }
  bool exact(ElementId id) const { return exact_[id] != 0; }
  std::optional<int> distance(ElementId id) const;
  /// Certified to lie at subgroup distance >= r.
  bool at_least(ElementId id, int r) const { return exact_[id] != 0 && distance_[id] >= r; }

  /// Subgroup elements inside the ball, in id order.
  const std::vector<ElementId>& members() const { return members_; }
  /// Members occur in both of the two outermost windows of width equal to the
  /// longest generator (one layer each for special subgroups).
  bool looks_infinite() const;

 private:
  const BallIndex* ball_;
  SubgroupSpec spec_;
  std::vector<std::int16_t> distance_;
  std::vector<std::uint8_t> exact_;
  std::vector<ElementId> members_;
};

/// |g^-1 h|. Both must lie in the ball.
int distance(const BallIndex& b, const NormalWord& g, const NormalWord& h);

/// Special: greedy descent. Finitely generated: nearest enumerated member,
/// throwing Unresolved without an exactness certificate.
int subgroup_distance(const BallIndex& b, const SubgroupSpec& spec, const NormalWord& g);
int subgroup_distance(const SubgroupField& field, const NormalWord& g);

/// Ids at certified subgroup distance exactly r. Requires r <= R - margin.
std::vector<ElementId> boundary_sphere(const SubgroupField& field, int r, int margin = 0);
std::vector<ElementId> boundary_sphere(const BallIndex& b, const SubgroupSpec& spec, int r,
                                       int margin = 0);

/// Shortest in-ball path from x to y through elements at subgroup distance
/// >= r; nullopt if none exists. Endpoints must be admissible.
std::optional<int> complement_distance(const SubgroupField& field, int r, ElementId x, ElementId y);
std::optional<int> complement_distance(const BallIndex& b, const SubgroupSpec& spec, int r,
                                       ElementId x, ElementId y);

/// Breadth-first search over a ball with reusable scratch space.
class BallSearch {
 public:
  explicit BallSearch(const BallIndex& ball);

  /// Expands layers from `source` through ids accepted by `admissible`.
  /// `on_layer(ids, depth)` returning true stops the search. Layers deeper
  /// than `max_depth` are not produced.
  template <class Admissible, class OnLayer>
  void run(ElementId source, Admissible&& admissible, OnLayer&& on_layer,
           int max_depth = 1 << 30) {
    begin(source);
    int depth = 0;
    while (!current_.empty()) {
      if (on_layer(std::span<const ElementId>(current_), depth)) return;
      if (depth == max_depth) return;
      next_.clear();
      for (ElementId u : current_) {
        for (ElementId v : ball_->neighbours(u)) {
          if (v == kNoElement || stamp_[v] == epoch_ || !admissible(v)) continue;
          stamp_[v] = epoch_;
          next_.push_back(v);
        }
      }
      current_.swap(next_);
      ++depth;
    }
  }

  /// Distance from source to target through admissible ids.
  template <class Admissible>
  std::optional<int> distance(ElementId source, ElementId target, Admissible&& admissible) {
    std::optional<int> found;
    run(source, admissible, [&](std::span<const ElementId> layer, int depth) {
      for (ElementId id : layer) {
        if (id == target) {
          found = depth;
          return true;
        }
      }
      return false;
    });
    return found;
  }

 private:
  void begin(ElementId source);

  const BallIndex* ball_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<ElementId> current_;
  std::vector<ElementId> next_;
};

}  // namespace morselab
