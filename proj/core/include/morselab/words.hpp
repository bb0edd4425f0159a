#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morselab/graph.hpp"

namespace morselab {

enum class GroupKind { kRacg, kRaag };

std::string_view to_string(GroupKind kind);
/// "racg" or "raag" (case-insensitive).
GroupKind parse_group_kind(std::string_view text);

/// Generator letter code: 2 * vertex + (exponent < 0). RACG letters always
/// carry exponent +1, so only even codes occur there. Code order is the
/// letter order used for shortlex normal forms.
using Letter = std::uint8_t;

inline constexpr std::size_t vertex_of(Letter l) { return l >> 1; }
inline constexpr int exponent_of(Letter l) { return (l & 1U) ? -1 : 1; }

/// A right-angled Coxeter or Artin group given by its defining graph.
/// Cheap to copy; the graph is shared.
class Presentation {
 public:
  Presentation(DefiningGraph graph, GroupKind kind);

  const DefiningGraph& graph() const { return *graph_; }
  GroupKind kind() const { return kind_; }
  bool is_raag() const { return kind_ == GroupKind::kRaag; }

  /// Generators in letter order: RACG s_0, s_1, ...; RAAG s_0, s_0^-1, s_1, ...
  const std::vector<Letter>& alphabet() const { return alphabet_; }

  /// RACG exponents are normalised to +1.
  Letter letter(std::size_t vertex, int exponent = 1) const;
  Letter inverse(Letter l) const { return is_raag() ? static_cast<Letter>(l ^ 1U) : l; }
  /// Letters on distinct adjacent vertices commute.
  bool commute(Letter a, Letter b) const {
    return graph_->adjacent(vertex_of(a), vertex_of(b));
  }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.kind_ == b.kind_ && *a.graph_ == *b.graph_;
  }

 private:
  std::shared_ptr<const DefiningGraph> graph_;
  GroupKind kind_;
  std::vector<Letter> alphabet_;
};

/// Unreduced word over a presentation's letters.
using Word = std::vector<Letter>;

/// Canonical representative of a group element: the shortlex-least reduced
/// word under the letter order. Equal elements have identical NormalWords.
/// Only produced by the word engine.
class NormalWord {
 public:
  NormalWord() = default;

  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(const NormalWord&, const NormalWord&) = default;
  /// Shortlex order.
  friend std::strong_ordering operator<=>(const NormalWord& a, const NormalWord& b) {
    if (a.length() != b.length()) return a.length() <=> b.length();
    return a.letters_ <=> b.letters_;
  }

 private:
  friend struct NormalWordAccess;
  explicit NormalWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

struct NormalWordHash {
  std::size_t operator()(const NormalWord& w) const noexcept;
};

/// Engine internals shared with the Cayley ball code. `normal` must hold a
/// normal form; afterwards it holds the normal form of normal * x.
void append_letter(const Presentation& p, std::vector<Letter>& normal, Letter x);

struct NormalWordAccess {
  /// Wraps letters already known to be a normal form.
  static NormalWord adopt(std::vector<Letter> letters) { return NormalWord(std::move(letters)); }
};

/// Whitespace separated tokens "a1 b2^-1"; "^k" repeats a letter |k| times.
/// The single token "1" denotes the identity.
Word parse_word(const Presentation& p, std::string_view text);
std::string format_word(const Presentation& p, std::span<const Letter> letters);
std::string format_word(const Presentation& p, const NormalWord& w);

NormalWord reduce(const Presentation& p, std::span<const Letter> word);
NormalWord parse_normal_word(const Presentation& p, std::string_view text);

NormalWord multiply(const Presentation& p, const NormalWord& u, const NormalWord& v);
/// u * x for a single generator letter.
NormalWord multiply(const Presentation& p, const NormalWord& u, Letter x);
NormalWord inverse(const Presentation& p, const NormalWord& u);
/// u^k for any integer k.
NormalWord power(const Presentation& p, const NormalWord& u, int k);

/// True iff `letters` is exactly the normal form of the element it spells.
bool is_normal_form(const Presentation& p, std::span<const Letter> letters);

VertexSet support(const NormalWord& u);

struct CyclicReduction {
  NormalWord conjugator;
  NormalWord core;
};

/// Repeatedly conjugates by single letters while that shortens the word.
/// Afterwards u = conjugator * core * conjugator^-1.
CyclicReduction cyclically_reduce(const Presentation& p, const NormalWord& u);

/// s lies inside the vertex set of some induced subgraph that is a
/// nontrivial join: either s itself is a join, or some vertex star contains s.
bool extends_to_join(const DefiningGraph& g, VertexSet s);

/// RAAG element not conjugate into a join subgroup. Requires a connected
/// defining graph that is not a join, and u nontrivial.
bool is_loxodromic(const Presentation& p, const NormalWord& u);

/// Longest contiguous subword of u whose support extends to a join; 0 for the
/// identity.
std::size_t max_join_subword_length(const Presentation& p, const NormalWord& u);

/// Membership in the special subgroup generated by s1.
bool special_subgroup_member(const Presentation& p, const NormalWord& u, VertexSet s1);

}  // namespace morselab
