#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "acdaa/graph.hpp"

namespace acdaa {

using Rng = std::mt19937_64;

// Default number of accumulated paths; 1500-2000 suffices up to ~1000 objects.
inline constexpr int kDefaultPaths = 2000;

// Bottleneck (minimax) path search where an edge's length is its current
// frequency. Reuses its buffers across calls; not thread-safe.
class MinimaxSearch {
 public:
  // Edge ids of a path from s to t whose largest frequency is minimal.
  // Among equally good paths the result is fixed by settling vertices in
  // (bottleneck, vertex id) order. Throws InvalidInput if s == t or t is
  // unreachable from s.
  const std::vector<EdgeId>& find(const FrequencyGraph& g, Vertex s, Vertex t);

 private:
  std::vector<Frequency> bottleneck_;
  std::vector<EdgeId> parent_;
  std::vector<char> settled_;
  std::vector<std::pair<Frequency, Vertex>> heap_;
  std::vector<EdgeId> path_;
};

std::vector<EdgeId> minimax_path(const FrequencyGraph& g, Vertex s, Vertex t);

struct DichotomyResult {
  Cut cut;  // part_a is the first part: the largest component after removal
  Frequency f_max = 0;
  std::size_t paths_built = 0;     // paths kept: accumulation plus final stage, excluding the undone one
  std::size_t final_iterations = 0;  // final-stage paths including the undone one
  Frequency max_before_removal = 0;
  std::size_t components_after_removal = 0;
  bool last_path_undone = false;  // path frequencies restored exactly before removal
};

// Frequency minimax dichotomy of a connected graph. Frequencies of g are
// reset, accumulated over `paths` random minimax paths, then driven through
// the final stage until some path would exceed the saved maximum. Every edge
// at the maximum is removed; the largest component (smallest vertex id on a
// size tie) is the first part, all other components form the second.
// On return g holds the final frequencies and all edges; the cut's
// crossing edges are the ones the dichotomy removes for good.
//
// Throws InvalidInput if g is disconnected, has < 2 vertices, or paths < 1.
// Throws InvariantViolation if the maximum-frequency edges do not separate
// the graph or the final stage exceeds 10 * paths iterations.
DichotomyResult frequency_dichotomy(FrequencyGraph& g, int paths, Rng& rng);

// |A| * |B| / d(A, B). Throws InvalidInput if the cut has no edges.
double decomposition_value(const Cut& cut);
// d(A, B) * (1/|A| + 1/|B|). Throws InvalidInput if a part is empty.
double ratio_cut_value(const Cut& cut);

inline constexpr std::size_t kBruteForceMaxVertices = 20;

// Exhaustive maximizer of decomposition_value over all 2^(N-1) - 1 cuts of a
// connected graph. part_a is the side holding vertex 0; ties go to the
// lexicographically smallest part_a.
Cut brute_force_best_cut(const FrequencyGraph& g);

}  // namespace acdaa
