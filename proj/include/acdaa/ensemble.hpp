#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "acdaa/classification.hpp"
#include "acdaa/daa.hpp"
#include "acdaa/graph.hpp"
#include "acdaa/matrix.hpp"

namespace acdaa {

struct RunOptions {
  int dichotomies = 3;  // k
  int runs = 1;         // r
  int paths = kDefaultPaths;
  std::uint64_t seed = 0;
  int neighbors = kDefaultNeighbors;
};

// Seed of run `index` under `master`: splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15).
// Depends only on (master, index), so runs can execute in any order.
std::uint64_t run_seed(std::uint64_t master, std::size_t index);

// Neighborhood graph of d, made connected with closest-pair edges.
FrequencyGraph prepare_graph(const DissimilarityMatrix& d, int neighbors = kDefaultNeighbors);

// opts.runs independent runs on the prepared graph g; result i uses run_seed(opts.seed, i).
// run_families distributes runs over OpenMP threads; run_families_serial is the reference.
std::vector<RunFamily> run_families(const FrequencyGraph& g, const DissimilarityMatrix& d,
                                    const RunOptions& opts);
std::vector<RunFamily> run_families_serial(const FrequencyGraph& g, const DissimilarityMatrix& d,
                                           const RunOptions& opts);

struct DistinctClassification {
  Classification classification;
  std::size_t multiplicity = 0;     // occurrences across all families
  std::size_t essential_count = 0;  // of which as an essential entry
  std::size_t runs_present = 0;     // families containing it at least once
  double stability = 0.0;
};

struct SolutionSet {
  int dichotomies = 0;
  int runs = 0;
  int paths = 0;
  std::uint64_t seed = 0;
  double complexity = 0.0;
  // In order of first appearance (run-major, family order within a run).
  std::vector<DistinctClassification> distinct;
  // members[run][entry] indexes `distinct`.
  std::vector<std::vector<std::size_t>> members;
  bool padded = false;
};

// Distinct count over (k+1)k/2 * r. Throws InvalidInput if distinct_count
// is 0 or exceeds that denominator.
double complexity(std::size_t distinct_count, int dichotomies, int runs);
std::size_t max_classifications(int dichotomies, int runs);

// Deduplicates the families and scores every distinct classification.
// All families must have the same dichotomy count.
SolutionSet summarize(std::span<const RunFamily> families, int paths = 0, std::uint64_t seed = 0);

// Builds the graph once, runs r families in parallel, summarizes.
SolutionSet run_external(const DissimilarityMatrix& d, const RunOptions& opts);

// Greedy stability of distinct item `target`: starting from {target}, visit
// the other runs in order and add the member that keeps the family's
// minimum pairwise RAND index highest (first in family order on ties).
// `run_members` lists candidate item ids per run, `table` is the item RAND
// table. Runs with no candidates are skipped. Throws InvalidInput if no run
// contains target.
double greedy_stability(std::size_t target, const std::vector<std::vector<std::size_t>>& run_members,
                        std::span<const double> table, std::size_t item_count);

// Stability of `a` against the given run families.
double stability(const Classification& a, std::span<const RunFamily> runs);

// Complexity for each (runs, dichotomies) pair, rows indexed by runs.
// Cell (r, k) uses the first r families, each truncated to k dichotomies,
// so every family needs at least max(k_values) dichotomies.
struct SweepGrid {
  std::vector<int> run_values;
  std::vector<int> dichotomy_values;
  std::vector<std::vector<double>> cells;
  std::vector<std::vector<std::size_t>> distinct_counts;
};
SweepGrid complexity_sweep(std::span<const RunFamily> families, std::span<const int> run_values,
                           std::span<const int> dichotomy_values);

}  // namespace acdaa
