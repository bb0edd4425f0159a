#include "morselab/classify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include <json.hpp>

#include "morselab/errors.hpp"

namespace morselab {

namespace {

std::vector<std::string> names_of(const DefiningGraph& g, const std::vector<std::size_t>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.name(v));
  return out;
}

std::optional<std::array<std::size_t, 3>> find_triangle(const DefiningGraph& g) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (auto v : g.neighbours(u).members()) {
      if (v <= u) continue;
      const VertexSet common = g.neighbours(u) & g.neighbours(v);
      for (auto w : common.members()) {
        if (w > v) return std::array<std::size_t, 3>{u, v, w};
      }
    }
  }
  return std::nullopt;
}

bool has_diagonal_in(const InducedCycle& square, VertexSet s) {
  const auto& c = square.vertices();
  return (s.contains(c[0]) && s.contains(c[2])) || (s.contains(c[1]) && s.contains(c[3]));
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kOutsideScope: return "outside_scope";
  }
  return "?";
}

Verdict ClassificationReport::verdict(std::string_view property) const {
  for (const auto& [name, v] : verdicts) {
    if (name == property) return v;
  }
  throw std::out_of_range("no verdict for '" + std::string(property) + "'");
}

bool ClassificationReport::any_outside_scope() const {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const auto& kv) { return kv.second == Verdict::kOutsideScope; });
}

std::string to_json(const ClassificationReport& report) {
  nlohmann::ordered_json doc;
  doc["subject"] = report.subject;
  doc["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [name, v] : report.verdicts) doc["verdicts"][name] = std::string(to_string(v));
  doc["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.witnesses) {
    nlohmann::ordered_json item;
    item["property"] = w.property;
    item["kind"] = w.kind;
    item["vertices"] = w.vertices;
    if (!w.note.empty()) item["note"] = w.note;
    doc["witnesses"].push_back(std::move(item));
  }
  return doc.dump(2);
}

bool contains_square_diagonal(const DefiningGraph& g, VertexSet s) {
  const auto squares = enumerate_induced_4cycles(g);
  return std::any_of(squares.begin(), squares.end(),
                     [&](const InducedCycle& sq) { return has_diagonal_in(sq, s); });
}

ClassificationReport classify_special_racg(const DefiningGraph& g, VertexSet s1) {
  if (!s1.is_subset_of(g.all())) throw ValidationError("subset outside the graph");
  ClassificationReport report;
  report.subject = "special subgroup <" + g.format_subset(s1) + "> of the right-angled Coxeter group";

  if (const auto tri = find_triangle(g)) {
    for (const char* prop : {"strongly_quasiconvex", "stable", "finite"}) {
      report.verdicts.emplace_back(prop, Verdict::kOutsideScope);
    }
    report.witnesses.push_back(
        {"scope", "triangle", names_of(g, {(*tri)[0], (*tri)[1], (*tri)[2]}),
         "classification is only established for triangle-free graphs"});
    return report;
  }

  const auto squares = enumerate_induced_4cycles(g);
  const std::string searched = std::to_string(squares.size()) + " induced 4-cycles checked";

  const InducedCycle* sqc_breaker = nullptr;
  const InducedCycle* stable_breaker = nullptr;
  for (const auto& sq : squares) {
    if (!has_diagonal_in(sq, s1)) continue;
    if (!stable_breaker) stable_breaker = &sq;
    if (!sq.vertex_set().is_subset_of(s1) && !sqc_breaker) sqc_breaker = &sq;
  }

  report.verdicts.emplace_back("strongly_quasiconvex",
                               sqc_breaker ? Verdict::kFalse : Verdict::kTrue);
  if (sqc_breaker) {
    report.witnesses.push_back({"strongly_quasiconvex", "induced_4cycle",
                                names_of(g, sqc_breaker->vertices()),
                                "subset holds a diagonal but not the whole cycle"});
  } else {
    report.witnesses.push_back({"strongly_quasiconvex", "exhaustion", {}, searched});
  }

  report.verdicts.emplace_back("stable", stable_breaker ? Verdict::kFalse : Verdict::kTrue);
  if (stable_breaker) {
    report.witnesses.push_back({"stable", "induced_4cycle", names_of(g, stable_breaker->vertices()),
                                "subset holds a diagonal of this cycle"});
  } else {
    report.witnesses.push_back({"stable", "exhaustion", {}, searched});
  }

  std::optional<std::pair<std::size_t, std::size_t>> gap;
  const auto members = s1.members();
  for (std::size_t i = 0; i < members.size() && !gap; ++i) {
    for (std::size_t j = i + 1; j < members.size() && !gap; ++j) {
      if (!g.adjacent(members[i], members[j])) gap = std::make_pair(members[i], members[j]);
    }
  }
  report.verdicts.emplace_back("finite", gap ? Verdict::kFalse : Verdict::kTrue);
  if (gap) {
    report.witnesses.push_back({"finite", "non_adjacent_pair", names_of(g, {gap->first, gap->second}),
                                "two non-commuting involutions generate an infinite dihedral group"});
  } else {
    report.witnesses.push_back({"finite", "clique", names_of(g, members), ""});
  }
  return report;
}

std::optional<InducedCycle> morse_boundary_witness(const DefiningGraph& g, std::size_t max_len) {
  if (const auto tri = find_triangle(g)) {
    throw ScopeError("graph has the triangle " + g.name((*tri)[0]) + "," + g.name((*tri)[1]) + "," +
                     g.name((*tri)[2]));
  }
  max_len = std::min(max_len, g.size());
  if (max_len < 5) return std::nullopt;
  const auto squares = enumerate_induced_4cycles(g);
  for (const auto& cycle : enumerate_induced_cycles(g, 5, max_len)) {
    const VertexSet s = cycle.vertex_set();
    const bool clean = std::none_of(squares.begin(), squares.end(),
                                    [&](const InducedCycle& sq) { return has_diagonal_in(sq, s); });
    if (clean) return cycle;
  }
  return std::nullopt;
}

ClassificationReport loxodromic_report(const Presentation& p, const std::vector<NormalWord>& words,
                                       int max_product_length) {
  if (!p.is_raag()) throw PreconditionError("loxodromic report needs a RAAG presentation");
  if (words.empty()) throw PreconditionError("loxodromic report needs at least one word");
  if (max_product_length < 1) throw PreconditionError("product length must be positive");
  ClassificationReport report;
  report.subject = "subgroup of the right-angled Artin group generated by";
  for (std::size_t i = 0; i < words.size(); ++i) {
    report.subject += (i == 0 ? " " : ", ") + format_word(p, words[i]);
  }

  for (std::size_t i = 0; i < words.size(); ++i) {
    const bool lox = is_loxodromic(p, words[i]);
    const std::string prop = "loxodromic[" + std::to_string(i) + "]";
    report.verdicts.emplace_back(prop, lox ? Verdict::kTrue : Verdict::kFalse);
    const VertexSet s = support(cyclically_reduce(p, words[i]).core);
    report.witnesses.push_back(
        {prop, "word", names_of(p.graph(), s.members()),
         "cyclic core support; longest join subword " +
             std::to_string(max_join_subword_length(p, words[i]))});
  }

  std::vector<NormalWord> moves;
  for (const auto& w : words) {
    moves.push_back(w);
    moves.push_back(inverse(p, w));
  }
  std::vector<NormalWord> layer{NormalWord{}};
  std::optional<NormalWord> counterexample;
  std::size_t tested = 0;
  for (int len = 1; len <= max_product_length && !counterexample; ++len) {
    std::vector<NormalWord> next;
    next.reserve(layer.size() * moves.size());
    for (const auto& prefix : layer) {
      for (const auto& m : moves) {
        NormalWord product = multiply(p, prefix, m);
        if (!product.empty()) {
          ++tested;
          if (!counterexample && !is_loxodromic(p, product)) counterexample = product;
        }
        next.push_back(std::move(product));
      }
    }
    layer = std::move(next);
  }
  const std::string prop = "no_counterexample_up_to_" + std::to_string(max_product_length);
  report.verdicts.emplace_back(prop, counterexample ? Verdict::kFalse : Verdict::kTrue);
  if (counterexample) {
    report.witnesses.push_back({prop, "word", {}, format_word(p, *counterexample) + " is not loxodromic"});
  } else {
    report.witnesses.push_back(
        {prop, "exhaustion", {}, std::to_string(tested) + " nontrivial products checked"});
  }
  return report;
}

}  // namespace morselab
