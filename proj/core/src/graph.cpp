#include "morselab/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "morselab/errors.hpp"

namespace morselab {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::size_t VertexSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

DefiningGraph::DefiningGraph(std::vector<std::string> names,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(names)), adjacency_(names_.size(), 0) {
  if (names_.size() > kMaxVertices) {
    throw ValidationError("graph has " + std::to_string(names_.size()) +
                          " vertices; at most " + std::to_string(kMaxVertices) + " are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) throw ValidationError("invalid vertex name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ValidationError("duplicate vertex '" + names_[i] + "'");
    }
  }
  for (const auto& [a, b] : edges) {
    const std::size_t u = index(a);
    const std::size_t v = index(b);
    if (u == v) throw ValidationError("self-loop at vertex '" + a + "'");
    adjacency_[u] |= std::uint64_t{1} << v;
    adjacency_[v] |= std::uint64_t{1} << u;
  }
}

std::size_t DefiningGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto m : adjacency_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::optional<std::size_t> DefiningGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t DefiningGraph::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ValidationError("unknown vertex '" + std::string(name) + "'");
}

std::vector<std::pair<std::size_t, std::size_t>> DefiningGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

VertexSet DefiningGraph::parse_subset(std::string_view csv) const {
  VertexSet s;
  while (!csv.empty()) {
    const auto comma = csv.find(',');
    const auto token = trim(csv.substr(0, comma));
    if (!token.empty()) s.insert(index(token));
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return s;
}

std::string DefiningGraph::format_subset(VertexSet s) const {
  std::string out;
  for (auto v : s.members()) {
    if (!out.empty()) out += ',';
    out += names_.at(v);
  }
  return out;
}

std::uint64_t DefiningGraph::fingerprint() const {
  // FNV-1a over names and adjacency rows.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(names_.size());
  for (const auto& n : names_) {
    for (char c : n) mix(static_cast<unsigned char>(c));
    mix(0xFF);
  }
  for (auto row : adjacency_) mix(row);
  return h;
}

InducedCycle::InducedCycle(std::vector<std::size_t> vertices) {
  const std::size_t n = vertices.size();
  if (n == 0) return;
  std::vector<std::size_t> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<std::size_t> candidate(n);
      for (std::size_t k = 0; k < n; ++k) {
        candidate[k] = dir == 0 ? vertices[(start + k) % n] : vertices[(start + n - k) % n];
      }
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  vertices_ = std::move(best);
}

VertexSet InducedCycle::vertex_set() const {
  VertexSet s;
  for (auto v : vertices_) s.insert(v);
  return s;
}

bool is_induced_cycle(const DefiningGraph& g, const std::vector<std::size_t>& cycle) {
  const std::size_t n = cycle.size();
  if (n < 4) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (cycle[i] >= g.size()) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cycle[i] == cycle[j]) return false;
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

DefiningGraph load_graph(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw ParseError("graph JSON must be an object with array fields \"vertices\" and \"edges\"");
  }
  std::vector<std::string> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("each edge must be a 2-element list of vertex names");
    }
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return DefiningGraph(std::move(names), edges);
}

DefiningGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_graph(buffer.str());
}

std::string graph_to_json(const DefiningGraph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.names();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({g.name(u), g.name(v)});
  return doc.dump();
}

bool is_triangle_free(const DefiningGraph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (auto v : g.neighbours(u).members()) {
      if (v <= u) continue;
      if (!(g.neighbours(u) & g.neighbours(v)).empty()) return false;
    }
  }
  return true;
}

bool is_connected(const DefiningGraph& g) {
  if (g.size() == 0) return true;
  VertexSet seen = VertexSet::single(0);
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t u = frontier.back();
    frontier.pop_back();
    for (auto v : g.neighbours(u).members()) {
      if (seen.contains(v)) continue;
      seen.insert(v);
      frontier.push_back(v);
    }
  }
  return seen == g.all();
}

std::vector<InducedCycle> enumerate_induced_4cycles(const DefiningGraph& g) {
  // An induced 4-cycle is a non-adjacent pair {u, v} together with two
  // non-adjacent common neighbours.
  std::vector<InducedCycle> out;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) continue;
      const auto common = (g.neighbours(u) & g.neighbours(v)).members();
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (g.adjacent(common[i], common[j])) continue;
          out.emplace_back(std::vector<std::size_t>{u, common[i], v, common[j]});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct CycleSearch {
  const DefiningGraph& g;
  std::size_t min_len;
  std::size_t max_len;
  std::vector<std::size_t> path;
  VertexSet on_path;
  std::vector<InducedCycle> found;

  void extend() {
    const std::size_t start = path.front();
    const std::size_t last = path.back();
    for (auto w : g.neighbours(last).members()) {
      if (w <= start || on_path.contains(w)) continue;
      // w may touch only the last vertex and, when closing, the start.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(path[i], w)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      const std::size_t len = path.size() + 1;
      if (path.size() > 1 && g.adjacent(start, w)) {
        // Closing vertex; orientation fixed by path[1] < w.
        if (len >= min_len && len <= max_len && path[1] < w) {
          std::vector<std::size_t> cyc = path;
          cyc.push_back(w);
          found.emplace_back(std::move(cyc));
        }
        continue;
      }
      if (len >= max_len) continue;
      path.push_back(w);
      on_path.insert(w);
      extend();
      on_path.erase(w);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<InducedCycle> enumerate_induced_cycles(const DefiningGraph& g, std::size_t min_len,
                                                   std::size_t max_len) {
  if (min_len < 4 || min_len > max_len || max_len > g.size()) {
    throw PreconditionError("enumerate_induced_cycles requires 4 <= min_len <= max_len <= |V|");
  }
  CycleSearch search{g, min_len, max_len, {}, {}, {}};
  for (std::size_t s = 0; s < g.size(); ++s) {
    // `s` is the least vertex of every cycle found from here.
    search.path = {s};
    search.on_path = VertexSet::single(s);
    search.extend();
  }
  auto out = std::move(search.found);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_join(const DefiningGraph& g, VertexSet s) {
  if (s.empty()) throw PreconditionError("is_join requires a nonempty vertex set");
  if (s.size() == 1) return false;
  // BFS in the complement of the induced subgraph.
  const auto members = s.members();
  VertexSet seen = VertexSet::single(members.front());
  std::vector<std::size_t> frontier{members.front()};
  while (!frontier.empty()) {
    const std::size_t u = frontier.back();
    frontier.pop_back();
    for (auto v : members) {
      if (v == u || seen.contains(v) || g.adjacent(u, v)) continue;
      seen.insert(v);
      frontier.push_back(v);
    }
  }
  return seen != s;
}

DefiningGraph cone_off(const DefiningGraph& g, std::string_view u, std::string_view v,
                       std::string_view t) {
  const std::size_t ui = g.index(u);
  const std::size_t vi = g.index(v);
  if (ui == vi || g.adjacent(ui, vi)) {
    throw PreconditionError("cone_off requires two distinct non-adjacent vertices");
  }
  if (g.find(t)) throw PreconditionError("cone vertex name '" + std::string(t) + "' already exists");
  if (g.size() + 1 > kMaxVertices) throw PreconditionError("cone_off would exceed the vertex limit");
  auto names = g.names();
  names.emplace_back(t);
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(g.name(a), g.name(b));
  edges.emplace_back(std::string(t), std::string(u));
  edges.emplace_back(std::string(t), std::string(v));
  return DefiningGraph(std::move(names), edges);
}

DefiningGraph build_gamma_d(int d) {
  if (d < 2) throw PreconditionError("build_gamma_d requires d >= 2");
  std::vector<std::string> names;
  for (int i = 0; i <= d; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 0; i <= d; ++i) names.push_back("b" + std::to_string(i));
  auto a = [](int i) { return "a" + std::to_string(i); };
  auto b = [](int i) { return "b" + std::to_string(i); };
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 1; i <= d; ++i) {
    edges.emplace_back(a(0), a(i));
    edges.emplace_back(b(0), a(i));
  }
  edges.emplace_back(a(0), b(1));
  edges.emplace_back(b(0), b(1));
  for (int i = 1; i <= d - 1; ++i) {
    edges.emplace_back(b(i), b(i + 1));
    edges.emplace_back(a(i), b(i + 1));
  }
  return DefiningGraph(std::move(names), edges);
}

DefiningGraph build_omega_d(int d) {
  const auto gamma = build_gamma_d(d);
  return cone_off(gamma, "a" + std::to_string(d), "b" + std::to_string(d), "t");
}

DefiningGraph build_cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("build_cycle requires n >= 3");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return DefiningGraph(std::move(names), edges);
}

DefiningGraph build_path(std::size_t n) {
  if (n < 1) throw PreconditionError("build_path requires n >= 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return DefiningGraph(std::move(names), edges);
}

std::optional<DefiningGraph> graph_family(std::string_view name) {
  if (name == "c4") {
    return DefiningGraph({"a1", "b1", "a2", "b2"},
                         {{"a1", "b1"}, {"b1", "a2"}, {"a2", "b2"}, {"b2", "a1"}});
  }
  if (name == "p4") return DefiningGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  if (name == "c5") return build_cycle(5);
  auto parameter = [&](std::string_view prefix) -> std::optional<int> {
    if (!name.starts_with(prefix)) return std::nullopt;
    auto value = parse_int(name.substr(prefix.size()));
    if (!value) throw ParseError("bad family parameter in '" + std::string(name) + "'");
    return value;
  };
  if (auto d = parameter("gamma_d:")) return build_gamma_d(*d);
  if (auto d = parameter("omega_d:")) return build_omega_d(*d);
  if (auto n = parameter("cycle:")) {
    if (*n < 3) throw PreconditionError("cycle:<n> requires n >= 3");
    return build_cycle(static_cast<std::size_t>(*n));
  }
  if (auto n = parameter("path:")) {
    if (*n < 1) throw PreconditionError("path:<n> requires n >= 1");
    return build_path(static_cast<std::size_t>(*n));
  }
  return std::nullopt;
}

DefiningGraph resolve_graph(const std::string& ref) {
  if (auto g = graph_family(ref)) return *std::move(g);
  return load_graph_file(ref);
}

}  // namespace morselab
