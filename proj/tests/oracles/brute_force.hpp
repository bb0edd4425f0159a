#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "morselab/graph.hpp"
#include "oracles/trace_form.hpp"

namespace oracle {

/// Join test by trying every bipartition of s.
bool is_join_by_bipartition(const morselab::DefiningGraph& g, morselab::VertexSet s);

/// Some induced join subgraph contains s; found by scanning all supersets.
bool join_superset_exists(const morselab::DefiningGraph& g, morselab::VertexSet s);

bool has_triangle(const morselab::DefiningGraph& g);

/// Vertex sets of size `len` inducing a cycle, by scanning all subsets.
std::set<std::uint64_t> induced_cycle_sets(const morselab::DefiningGraph& g, std::size_t len);

/// min |h^-1 g| over words h in the letters of s1 of length <= max_h_len.
std::size_t coset_distance_scan(const TraceForm& tf, const std::vector<Syllable>& g,
                                morselab::VertexSet s1, bool raag, std::size_t max_h_len);

}  // namespace oracle
