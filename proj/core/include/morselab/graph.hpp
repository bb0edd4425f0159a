#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace morselab {

inline constexpr std::size_t kMaxVertices = 64;

/// Subset of the vertices of a DefiningGraph, stored as a bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet single(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }
  /// The set {0, ..., n-1}.
  static VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t v) const { return (bits_ >> v) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }

  /// Members in increasing index order.
  std::vector<std::size_t> members() const;

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite simplicial graph with named vertices. Vertex order is fixed at
/// construction and doubles as the generator order for normal forms.
class DefiningGraph {
 public:
  DefiningGraph() = default;

  /// Throws ValidationError on duplicate or malformed names, unknown
  /// endpoints, self-loops, or more than kMaxVertices vertices.
  DefiningGraph(std::vector<std::string> names,
                const std::vector<std::pair<std::string, std::string>>& edges);

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find() but throws ValidationError for unknown names.
  std::size_t index(std::string_view name) const;

  bool adjacent(std::size_t u, std::size_t v) const { return (adjacency_[u] >> v) & 1U; }
  /// Link lk(v).
  VertexSet neighbours(std::size_t v) const { return VertexSet(adjacency_[v]); }
  /// Star st(v) = {v} plus lk(v).
  VertexSet star(std::size_t v) const { return neighbours(v) | VertexSet::single(v); }
  VertexSet all() const { return VertexSet::range(size()); }

  /// Edges as index pairs (u < v), lexicographically sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Parses a comma separated list of vertex names.
  VertexSet parse_subset(std::string_view csv) const;
  std::string format_subset(VertexSet s) const;

  /// Stable 64-bit fingerprint of names and adjacency.
  std::uint64_t fingerprint() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> adjacency_;
};

/// Induced cycle stored in canonical form: the lexicographically least
/// rotation/reflection of its vertex index sequence.
class InducedCycle {
 public:
  InducedCycle() = default;
  /// Canonicalises `vertices`; does not check inducedness.
  explicit InducedCycle(std::vector<std::size_t> vertices);

  const std::vector<std::size_t>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  VertexSet vertex_set() const;

  friend bool operator==(const InducedCycle&, const InducedCycle&) = default;
  friend auto operator<=>(const InducedCycle& a, const InducedCycle& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<std::size_t> vertices_;
};

/// Checks length >= 4, consecutive adjacency and absence of chords.
bool is_induced_cycle(const DefiningGraph& g, const std::vector<std::size_t>& cycle);

/// Parses {"vertices": [...], "edges": [[u, v], ...]}.
DefiningGraph load_graph(std::string_view json_text);
DefiningGraph load_graph_file(const std::string& path);
std::string graph_to_json(const DefiningGraph& g);

bool is_triangle_free(const DefiningGraph& g);
bool is_connected(const DefiningGraph& g);

std::vector<InducedCycle> enumerate_induced_4cycles(const DefiningGraph& g);

/// All induced cycles with min_len <= length <= max_len, sorted by
/// (length, canonical sequence). Requires 4 <= min_len <= max_len <= |V|.
std::vector<InducedCycle> enumerate_induced_cycles(const DefiningGraph& g, std::size_t min_len,
                                                   std::size_t max_len);

/// True iff the subgraph induced on `s` is a nontrivial join, i.e. its
/// complement graph is disconnected. Requires `s` nonempty.
bool is_join(const DefiningGraph& g, VertexSet s);

/// Adds a vertex `t` adjacent to exactly u and v. Requires u, v non-adjacent.
DefiningGraph cone_off(const DefiningGraph& g, std::string_view u, std::string_view v,
                       std::string_view t);

DefiningGraph build_gamma_d(int d);
DefiningGraph build_omega_d(int d);
DefiningGraph build_cycle(std::size_t n);
DefiningGraph build_path(std::size_t n);

/// "c4", "p4", "c5", "cycle:<n>", "path:<n>", "gamma_d:<d>", "omega_d:<d>".
std::optional<DefiningGraph> graph_family(std::string_view name);

/// Family name or path to a JSON graph file.
DefiningGraph resolve_graph(const std::string& ref);

}  // namespace morselab
