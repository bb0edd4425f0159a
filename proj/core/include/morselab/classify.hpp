#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morselab/graph.hpp"
#include "morselab/words.hpp"

namespace morselab {

enum class Verdict { kTrue, kFalse, kOutsideScope };

std::string_view to_string(Verdict v);

/// Evidence attached to a verdict: a structure in the graph or a word, or a
/// note that a finite search came back empty.
struct Witness {
  std::string property;
  /// "induced_4cycle", "induced_cycle", "triangle", "non_adjacent_pair",
  /// "clique", "exhaustion", "word".
  std::string kind;
  std::vector<std::string> vertices;
  std::string note;
};

struct ClassificationReport {
  std::string subject;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::vector<Witness> witnesses;

  /// Throws std::out_of_range for an unknown property.
  Verdict verdict(std::string_view property) const;
  bool any_outside_scope() const;
};

std::string to_json(const ClassificationReport& report);

/// Verdicts strongly_quasiconvex, stable and finite for the special subgroup
/// generated by s1. Triangles put every verdict outside scope.
ClassificationReport classify_special_racg(const DefiningGraph& g, VertexSet s1);

/// s contains both ends of a diagonal of some induced square.
bool contains_square_diagonal(const DefiningGraph& g, VertexSet s);

/// First induced cycle, in canonical order, of length 5..max_len whose vertex
/// set contains no diagonal of an induced square. Throws ScopeError when the
/// graph has a triangle.
std::optional<InducedCycle> morse_boundary_witness(const DefiningGraph& g, std::size_t max_len);

/// Per-word loxodromic verdicts ("loxodromic[i]") and the sampled property
/// "no_counterexample_up_to_k": every nontrivial product of at most k
/// generators and inverses is loxodromic. The sample is evidence, not proof.
ClassificationReport loxodromic_report(const Presentation& p, const std::vector<NormalWord>& words,
                                       int max_product_length = 4);

}  // namespace morselab
