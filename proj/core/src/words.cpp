#include "morselab/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "morselab/errors.hpp"

namespace morselab {

std::string_view to_string(GroupKind kind) {
  return kind == GroupKind::kRacg ? "racg" : "raag";
}

GroupKind parse_group_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "racg") return GroupKind::kRacg;
  if (lower == "raag") return GroupKind::kRaag;
  throw ParseError("unknown group kind '" + std::string(text) + "' (expected racg or raag)");
}

Presentation::Presentation(DefiningGraph graph, GroupKind kind)
    : graph_(std::make_shared<const DefiningGraph>(std::move(graph))), kind_(kind) {
  for (std::size_t v = 0; v < graph_->size(); ++v) {
    alphabet_.push_back(static_cast<Letter>(2 * v));
    if (is_raag()) alphabet_.push_back(static_cast<Letter>(2 * v + 1));
  }
}

Letter Presentation::letter(std::size_t vertex, int exponent) const {
  if (vertex >= graph_->size()) throw ValidationError("vertex index out of range");
  if (exponent != 1 && exponent != -1) throw ValidationError("letter exponent must be +1 or -1");
  const bool negative = is_raag() && exponent < 0;
  return static_cast<Letter>(2 * vertex + (negative ? 1 : 0));
}

std::size_t NormalWordHash::operator()(const NormalWord& w) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Letter l : w.letters()) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  h ^= w.length();
  return static_cast<std::size_t>(h);
}

// The normal form is built greedily: the lex-least reduced word picks, at each
// step, the smallest letter that can be moved to the front of what remains.
// Appending x therefore only touches the tail of letters x commutes past.
void append_letter(const Presentation& p, std::vector<Letter>& normal, Letter x) {
  const std::size_t vx = vertex_of(x);
  const std::uint64_t link = p.graph().neighbours(vx).bits();
  std::size_t q = normal.size();
  while (q > 0) {
    const Letter y = normal[q - 1];
    const std::size_t vy = vertex_of(y);
    if (vy == vx) {
      if (y == p.inverse(x)) {
        normal.erase(normal.begin() + static_cast<std::ptrdiff_t>(q - 1));
        return;
      }
      break;
    }
    if (((link >> vy) & 1U) == 0) break;
    --q;
  }
  std::size_t pos = q;
  while (pos < normal.size() && normal[pos] < x) ++pos;
  normal.insert(normal.begin() + static_cast<std::ptrdiff_t>(pos), x);
}

Word parse_word(const Presentation& p, std::string_view text) {
  Word out;
  std::size_t i = 0;
  bool saw_identity = false;
  std::size_t tokens = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view token = text.substr(i, j - i);
    i = j;
    ++tokens;
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    std::string_view name = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view digits = token.substr(caret + 1);
      if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw ParseError("bad exponent in token '" + std::string(token) + "'");
      }
    }
    const auto v = p.graph().find(name);
    if (!v) throw ParseError("unknown generator '" + std::string(name) + "'");
    const Letter l = p.letter(*v, exponent < 0 ? -1 : 1);
    const int count = exponent < 0 ? -exponent : exponent;
    for (int k = 0; k < count; ++k) out.push_back(l);
  }
  if (saw_identity && tokens > 1) throw ParseError("identity token '1' must stand alone");
  return out;
}

std::string format_word(const Presentation& p, std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (Letter l : letters) {
    if (!out.empty()) out += ' ';
    out += p.graph().name(vertex_of(l));
    if (exponent_of(l) < 0) out += "^-1";
  }
  return out;
}

std::string format_word(const Presentation& p, const NormalWord& w) {
  return format_word(p, w.letters());
}

NormalWord reduce(const Presentation& p, std::span<const Letter> word) {
  std::vector<Letter> normal;
  normal.reserve(word.size());
  for (Letter l : word) {
    if (vertex_of(l) >= p.graph().size()) throw ValidationError("letter outside presentation");
    append_letter(p, normal, p.is_raag() ? l : static_cast<Letter>(l & ~1U));
  }
  return NormalWordAccess::adopt(std::move(normal));
}

NormalWord parse_normal_word(const Presentation& p, std::string_view text) {
  return reduce(p, parse_word(p, text));
}

NormalWord multiply(const Presentation& p, const NormalWord& u, const NormalWord& v) {
  std::vector<Letter> normal(u.letters().begin(), u.letters().end());
  for (Letter l : v.letters()) append_letter(p, normal, l);
  return NormalWordAccess::adopt(std::move(normal));
}

NormalWord multiply(const Presentation& p, const NormalWord& u, Letter x) {
  std::vector<Letter> normal(u.letters().begin(), u.letters().end());
  append_letter(p, normal, x);
  return NormalWordAccess::adopt(std::move(normal));
}

NormalWord inverse(const Presentation& p, const NormalWord& u) {
  Word w;
  w.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) w.push_back(p.inverse(*it));
  return reduce(p, w);
}

NormalWord power(const Presentation& p, const NormalWord& u, int k) {
  const NormalWord base = k < 0 ? inverse(p, u) : u;
  NormalWord out;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(p, out, base);
  return out;
}

bool is_normal_form(const Presentation& p, std::span<const Letter> letters) {
  const NormalWord w = reduce(p, letters);
  return std::equal(w.letters().begin(), w.letters().end(), letters.begin(), letters.end());
}

VertexSet support(const NormalWord& u) {
  VertexSet s;
  for (Letter l : u.letters()) s.insert(vertex_of(l));
  return s;
}

CyclicReduction cyclically_reduce(const Presentation& p, const NormalWord& u) {
  CyclicReduction out{NormalWord{}, u};
  bool shortened = true;
  while (shortened) {
    shortened = false;
    for (Letter x : p.alphabet()) {
      std::vector<Letter> w{p.inverse(x)};
      w.insert(w.end(), out.core.letters().begin(), out.core.letters().end());
      w.push_back(x);
      NormalWord candidate = reduce(p, w);
      if (candidate.length() < out.core.length()) {
        out.core = std::move(candidate);
        out.conjugator = multiply(p, out.conjugator, x);
        shortened = true;
        break;
      }
    }
  }
  return out;
}

bool extends_to_join(const DefiningGraph& g, VertexSet s) {
  if (s.empty()) return true;
  if (is_join(g, s)) return true;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (!g.neighbours(v).empty() && s.is_subset_of(g.star(v))) return true;
  }
  return false;
}

namespace {

void require_loxodromic_scope(const Presentation& p) {
  if (!p.is_raag()) throw PreconditionError("loxodromic analysis needs a RAAG presentation");
  const DefiningGraph& g = p.graph();
  if (g.size() == 0 || !is_connected(g)) throw PreconditionError("defining graph is disconnected");
  if (is_join(g, g.all())) throw PreconditionError("defining graph is a join");
}

}  // namespace

bool is_loxodromic(const Presentation& p, const NormalWord& u) {
  require_loxodromic_scope(p);
  if (u.empty()) throw PreconditionError("the identity is not loxodromic or elliptic");
  const VertexSet s = support(cyclically_reduce(p, u).core);
  return !extends_to_join(p.graph(), s);
}

std::size_t max_join_subword_length(const Presentation& p, const NormalWord& u) {
  // Supersets of a non-extendable support stay non-extendable, so each scan
  // from a start position stops at the first failure.
  std::size_t best = 0;
  const auto letters = u.letters();
  for (std::size_t i = 0; i < letters.size() && letters.size() - i > best; ++i) {
    VertexSet s;
    for (std::size_t j = i; j < letters.size(); ++j) {
      s.insert(vertex_of(letters[j]));
      if (!extends_to_join(p.graph(), s)) break;
      best = std::max(best, j - i + 1);
    }
  }
  return best;
}

bool special_subgroup_member(const Presentation& p, const NormalWord& u, VertexSet s1) {
  if (!s1.is_subset_of(p.graph().all())) throw ValidationError("subset outside the graph");
  return support(u).is_subset_of(s1);
}

}  // namespace morselab
