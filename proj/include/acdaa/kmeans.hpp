#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acdaa/classification.hpp"
#include "acdaa/dichotomy.hpp"
#include "acdaa/ensemble.hpp"
#include "acdaa/matrix.hpp"

namespace acdaa {

inline constexpr int kDefaultKMeansIterations = 1000;

struct KMeansResult {
  Classification classification;
  VertexSet initial_centroids;  // object ids drawn as starting centroids
  int iterations = 0;
  bool converged = false;
};

// Lloyd iteration from `clusters` distinct random objects as centroids:
// assign each object to its nearest centroid (lowest index on ties), move
// centroids to class means, stop when assignments repeat or after
// max_iterations. An emptied cluster is reseeded with the object farthest
// from its own centroid. Throws InvalidInput unless 1 <= clusters <= N.
KMeansResult kmeans(const PointSet& points, int clusters, int max_iterations, Rng& rng);

struct KMeansComparison {
  int clusters = 0;
  std::vector<Classification> kmeans_results;  // one per restart
  double kmeans_concordance = 1.0;
  SolutionSet solution;
  // Most stable distinct classification with exactly `clusters` classes,
  // with stability taken over same-size candidates only; empty if none.
  std::optional<std::size_t> best_distinct;
  std::optional<double> main_concordance;
};

// Runs k-means `restarts` times (restart i seeded with run_seed(opts.seed ^ 0x6B6D65616E73, i))
// and the main pipeline once with opts.runs = restarts and at least clusters - 1 dichotomies.
KMeansComparison compare_with_kmeans(const PointSet& vectors, const DissimilarityMatrix& d,
                                     int clusters, int restarts, RunOptions opts);

// Class sizes in decreasing order.
std::vector<std::size_t> size_profile(const Classification& c);

}  // namespace acdaa
