#pragma once

#include <cstddef>
#include <vector>

#include "acdaa/classification.hpp"
#include "acdaa/dichotomy.hpp"
#include "acdaa/graph.hpp"
#include "acdaa/matrix.hpp"

namespace acdaa {

enum class EntryKind { essential, adjoint };

// One classification of a run, tagged C_size^level: `level` is the class
// count of the essential classification it derives from, `size` its own.
struct FamilyEntry {
  int level = 0;
  int size = 0;
  EntryKind kind = EntryKind::essential;
  Classification classification;
};

// Output of one divisive-agglomerative run with `dichotomies` splits:
// (k+1)k/2 entries ordered C_2^2; C_2^3, C_3^3; ...; C_2^{k+1}, ..., C_{k+1}^{k+1}.
struct RunFamily {
  int dichotomies = 0;
  std::vector<FamilyEntry> entries;
  // Set when no class could be split before reaching `dichotomies`; the
  // missing entries repeat the last essential classification.
  bool padded = false;
};

inline constexpr std::size_t family_size(int dichotomies) {
  return static_cast<std::size_t>(dichotomies + 1) * static_cast<std::size_t>(dichotomies) / 2;
}

// Index of the largest class; the first in canonical order on ties.
std::size_t select_class_to_split(const Classification& c);

// Agglomerative chain from an essential classification with j classes:
// repeatedly merges the two classes joined by the most edges of g until two
// remain. Returns the j-2 results in decreasing class count (empty for j < 3).
// Ties go to the lexicographically smallest pair of canonical class indices.
std::vector<Classification> agglomerate_chain(const Classification& essential,
                                              const FrequencyGraph& g);

// Replaces class `split_class` by the two parts of `cut` (in object ids).
// Throws InvalidInput unless the cut covers exactly that class.
Classification splice_dichotomy(const Classification& current, std::size_t split_class,
                                const Cut& cut);

// One run over a connected neighborhood graph g. Before each dichotomy the
// largest class's induced subgraph is made connected with closest-pair edges
// from d (kept for later splits); edge counts for agglomeration always use g.
// Throws InvalidInput if g is disconnected, dichotomies < 1 or paths < 1.
RunFamily run_daa(const FrequencyGraph& g, const DissimilarityMatrix& d, int dichotomies,
                  int paths, Rng& rng);

// First (k+1)k/2 entries: the family a run with k dichotomies would have produced.
RunFamily truncate_family(const RunFamily& family, int dichotomies);

}  // namespace acdaa
