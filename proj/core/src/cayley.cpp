#include "morselab/cayley.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string_view>

#include "morselab/errors.hpp"

namespace morselab {

namespace {

constexpr std::size_t kPairwiseClosureLimit = 4096;

std::vector<std::size_t> inverse_indices(const Presentation& p) {
  const auto& alphabet = p.alphabet();
  std::vector<std::size_t> inv(alphabet.size());
  for (std::size_t k = 0; k < alphabet.size(); ++k) {
    const auto it = std::find(alphabet.begin(), alphabet.end(), p.inverse(alphabet[k]));
    inv[k] = static_cast<std::size_t>(it - alphabet.begin());
  }
  return inv;
}

}  // namespace

std::uint64_t BallIndex::hash_letters(std::span<const Letter> letters) const {
  const std::string_view bytes(reinterpret_cast<const char*>(letters.data()), letters.size());
  return std::hash<std::string_view>{}(bytes);
}

int BallIndex::depth(ElementId id) const {
  const auto it = std::upper_bound(layer_begin_.begin(), layer_begin_.end(), id);
  return static_cast<int>(it - layer_begin_.begin()) - 1;
}

std::uint64_t BallIndex::offset(ElementId id) const {
  const int d = depth(id);
  return layer_offset_[static_cast<std::size_t>(d)] +
         std::uint64_t{id - layer_begin_[static_cast<std::size_t>(d)]} * static_cast<std::uint64_t>(d);
}

std::span<const Letter> BallIndex::letters(ElementId id) const {
  return {arena_.data() + offset(id), static_cast<std::size_t>(depth(id))};
}

NormalWord BallIndex::word(ElementId id) const {
  const auto l = letters(id);
  return NormalWordAccess::adopt(std::vector<Letter>(l.begin(), l.end()));
}

std::optional<ElementId> BallIndex::find(std::span<const Letter> normal_letters) const {
  const std::size_t len = normal_letters.size();
  if (len + 1 >= layer_begin_.size()) return std::nullopt;
  const ElementId lo = layer_begin_[len];
  const ElementId hi = layer_begin_[len + 1];
  const std::size_t mask = table_.size() - 1;
  for (std::size_t slot = hash_letters(normal_letters) & mask;; slot = (slot + 1) & mask) {
    const ElementId id = table_[slot];
    if (id == kNoElement) return std::nullopt;
    if (id < lo || id >= hi) continue;
    const auto stored = letters(id);
    if (std::equal(stored.begin(), stored.end(), normal_letters.begin())) return id;
  }
}

ElementId BallIndex::require(const NormalWord& w) const {
  const auto id = find(w);
  if (!id) throw PreconditionError("element outside the ball of radius " + std::to_string(radius_));
  return *id;
}

std::vector<std::size_t> BallIndex::sphere_sizes() const {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d + 1 < layer_begin_.size(); ++d) {
    out.push_back(layer_begin_[d + 1] - layer_begin_[d]);
  }
  return out;
}

void BallIndex::rebuild_table(std::size_t capacity) {
  table_.assign(capacity, kNoElement);
  const std::size_t mask = capacity - 1;
  const ElementId count = layer_begin_.back();
  for (ElementId id = 0; id < count; ++id) {
    std::size_t slot = hash_letters(letters(id)) & mask;
    while (table_[slot] != kNoElement) slot = (slot + 1) & mask;
    table_[slot] = id;
  }
}

ElementId BallIndex::lookup_or_insert(std::span<const Letter> word, int layer, bool& inserted) {
  inserted = false;
  const ElementId lo = layer_begin_[static_cast<std::size_t>(layer)];
  const std::size_t mask = table_.size() - 1;
  std::size_t slot = hash_letters(word) & mask;
  for (;; slot = (slot + 1) & mask) {
    const ElementId id = table_[slot];
    if (id == kNoElement) break;
    if (id < lo) continue;
    const auto stored = letters(id);
    if (std::equal(stored.begin(), stored.end(), word.begin(), word.end())) return id;
  }
  const ElementId id = layer_begin_.back();
  arena_.insert(arena_.end(), word.begin(), word.end());
  adjacency_.resize(adjacency_.size() + degree(), kNoElement);
  table_[slot] = id;
  layer_begin_.back() = id + 1;
  inserted = true;
  if (2 * (std::size_t{id} + 1) > table_.size()) rebuild_table(table_.size() * 2);
  return id;
}

BallIndex build_ball(const Presentation& p, int radius, const BallOptions& options) {
  if (radius < 0) throw PreconditionError("ball radius must be non-negative");
  BallIndex b(p);
  b.radius_ = radius;
  b.layer_offset_ = {0};
  b.layer_begin_ = {0, 1};
  b.adjacency_.assign(b.degree(), kNoElement);
  b.rebuild_table(1024);

  const auto& alphabet = p.alphabet();
  const auto inv = inverse_indices(p);
  const std::size_t deg = b.degree();
  std::vector<Letter> buffer;
  for (int d = 0; d < radius; ++d) {
    const ElementId begin = b.layer_begin_[static_cast<std::size_t>(d)];
    const ElementId end = b.layer_begin_.back();
    b.layer_offset_.push_back(b.arena_.size());
    b.layer_begin_.push_back(end);
    for (ElementId id = begin; id < end; ++id) {
      for (std::size_t k = 0; k < deg; ++k) {
        if (b.adjacency_[id * deg + k] != kNoElement) continue;
        const auto current = b.letters(id);
        buffer.assign(current.begin(), current.end());
        append_letter(p, buffer, alphabet[k]);
        ElementId target = kNoElement;
        if (buffer.size() == static_cast<std::size_t>(d) + 1) {
          if (b.layer_begin_.back() >= options.element_budget) {
            throw BudgetExceeded(d, b.layer_begin_.back(),
                                 "ball budget of " + std::to_string(options.element_budget) +
                                     " elements exhausted while building layer " +
                                     std::to_string(d + 1) + " of " + std::to_string(radius));
          }
          bool inserted = false;
          target = b.lookup_or_insert(buffer, d + 1, inserted);
        } else {
          const auto found = b.find(buffer);
          if (!found) throw Error("internal: ball neighbour missing");
          target = *found;
        }
        b.adjacency_[id * deg + k] = target;
        b.adjacency_[target * deg + inv[k]] = id;
      }
    }
  }
  return b;
}

int special_subgroup_distance(const Presentation& p, VertexSet s1, const NormalWord& g) {
  if (!s1.is_subset_of(p.graph().all())) throw ValidationError("subset outside the graph");
  std::vector<Letter> moves;
  for (Letter x : p.alphabet()) {
    if (s1.contains(vertex_of(x))) moves.push_back(x);
  }
  NormalWord w = inverse(p, g);
  bool shortened = true;
  while (shortened) {
    shortened = false;
    for (Letter x : moves) {
      NormalWord candidate = multiply(p, w, x);
      if (candidate.length() < w.length()) {
        w = std::move(candidate);
        shortened = true;
        break;
      }
    }
  }
  return static_cast<int>(w.length());
}

SubgroupField::SubgroupField(const BallIndex& ball, const SubgroupSpec& spec)
    : ball_(&ball),
      spec_(spec),
      distance_(ball.size(), static_cast<std::int16_t>(kUnreached)),
      exact_(ball.size(), 0) {
  const Presentation& p = ball.presentation();
  const auto count = static_cast<ElementId>(ball.size());
  std::vector<std::uint8_t> member(ball.size(), 0);
  bool certify_all = false;

  if (const auto* special = std::get_if<SpecialSubgroup>(&spec)) {
    if (!special->generators.is_subset_of(p.graph().all())) {
      throw ValidationError("subset outside the graph");
    }
    for (ElementId id = 0; id < count; ++id) {
      bool inside = true;
      for (Letter l : ball.letters(id)) inside = inside && special->generators.contains(vertex_of(l));
      if (inside) member[id] = 1;
    }
    certify_all = true;
  } else {
    const auto& gens = std::get<FinitelyGeneratedSubgroup>(spec).generators;
    if (gens.empty()) throw ValidationError("finitely generated subgroup needs generators");
    std::vector<NormalWord> moves;
    for (const auto& gen : gens) {
      moves.push_back(gen);
      moves.push_back(inverse(p, gen));
    }
    std::vector<ElementId> found;
    std::deque<ElementId> work;
    auto add = [&](const NormalWord& w) {
      const auto id = ball.find(w);
      if (!id || member[*id]) return;
      member[*id] = 1;
      found.push_back(*id);
      work.push_back(*id);
    };
    add(NormalWord{});
    for (const auto& m : moves) add(m);
    while (!work.empty()) {
      const ElementId id = work.front();
      work.pop_front();
      const NormalWord w = ball.word(id);
      for (const auto& m : moves) add(multiply(p, w, m));
      if (found.size() <= kPairwiseClosureLimit) {
        const std::size_t known = found.size();
        for (std::size_t i = 0; i < known; ++i) {
          const NormalWord other = ball.word(found[i]);
          add(multiply(p, w, other));
          add(multiply(p, other, w));
        }
      }
    }
  }

  std::vector<ElementId> frontier;
  for (ElementId id = 0; id < count; ++id) {
    if (!member[id]) continue;
    members_.push_back(id);
    distance_[id] = 0;
    frontier.push_back(id);
  }
  std::vector<ElementId> next;
  for (std::int16_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (ElementId u : frontier) {
      for (ElementId v : ball.neighbours(u)) {
        if (v == kNoElement || distance_[v] != kUnreached) continue;
        distance_[v] = d;
        next.push_back(v);
      }
    }
    frontier.swap(next);
  }
  for (ElementId id = 0; id < count; ++id) {
    if (distance_[id] == kUnreached) continue;
    exact_[id] = certify_all || distance_[id] <= ball.radius() - ball.depth(id);
  }
}

std::optional<int> SubgroupField::distance(ElementId id) const {
  if (!exact_[id]) return std::nullopt;
  return distance_[id];
}

bool SubgroupField::looks_infinite() const {
  // Window width: the longest generator, so members spaced by whole
  // generator lengths still show up in both windows.
  int width = 1;
  if (const auto* fg = std::get_if<FinitelyGeneratedSubgroup>(&spec_)) {
    for (const auto& g : fg->generators) width = std::max(width, static_cast<int>(g.length()));
  }
  const int r = ball_->radius();
  if (r < 2 * width - 1) return false;
  bool outer = false;
  bool inner = false;
  for (ElementId id : members_) {
    const int d = ball_->depth(id);
    outer = outer || d > r - width;
    inner = inner || (d > r - 2 * width && d <= r - width);
  }
  return outer && inner;
}

int distance(const BallIndex& b, const NormalWord& g, const NormalWord& h) {
  b.require(g);
  b.require(h);
  const Presentation& p = b.presentation();
  return static_cast<int>(multiply(p, inverse(p, g), h).length());
}

int subgroup_distance(const BallIndex& b, const SubgroupSpec& spec, const NormalWord& g) {
  b.require(g);
  if (const auto* special = std::get_if<SpecialSubgroup>(&spec)) {
    return special_subgroup_distance(b.presentation(), special->generators, g);
  }
  return subgroup_distance(SubgroupField(b, spec), g);
}

int subgroup_distance(const SubgroupField& field, const NormalWord& g) {
  const ElementId id = field.ball().require(g);
  if (const auto d = field.distance(id)) return *d;
  throw Unresolved("subgroup distance of '" + format_word(field.ball().presentation(), g) +
                   "' is not certified inside the ball of radius " +
                   std::to_string(field.ball().radius()));
}

std::vector<ElementId> boundary_sphere(const SubgroupField& field, int r, int margin) {
  if (r < 0 || r > field.ball().radius() - margin) {
    throw PreconditionError("boundary radius " + std::to_string(r) + " exceeds ball radius " +
                            std::to_string(field.ball().radius()) + " minus margin " +
                            std::to_string(margin));
  }
  std::vector<ElementId> out;
  const auto count = static_cast<ElementId>(field.ball().size());
  for (ElementId id = 0; id < count; ++id) {
    if (field.exact(id) && field.upper_bound(id) == r) out.push_back(id);
  }
  return out;
}

std::vector<ElementId> boundary_sphere(const BallIndex& b, const SubgroupSpec& spec, int r,
                                       int margin) {
  return boundary_sphere(SubgroupField(b, spec), r, margin);
}

std::optional<int> complement_distance(const SubgroupField& field, int r, ElementId x, ElementId y) {
  if (!field.at_least(x, r) || !field.at_least(y, r)) {
    throw PreconditionError("complement distance endpoint lies inside the open " +
                            std::to_string(r) + "-neighbourhood");
  }
  BallSearch search(field.ball());
  return search.distance(x, y, [&](ElementId id) { return field.at_least(id, r); });
}

std::optional<int> complement_distance(const BallIndex& b, const SubgroupSpec& spec, int r,
                                       ElementId x, ElementId y) {
  return complement_distance(SubgroupField(b, spec), r, x, y);
}

BallSearch::BallSearch(const BallIndex& ball) : ball_(&ball), stamp_(ball.size(), 0) {}

void BallSearch::begin(ElementId source) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  stamp_[source] = epoch_;
  current_.assign(1, source);
  next_.clear();
}

}  // namespace morselab
