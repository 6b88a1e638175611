#include "acdaa/kmeans.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "acdaa/errors.hpp"
#include "acdaa/metrics.hpp"
#include "acdaa/parallel.hpp"

namespace acdaa {
namespace {

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double diff = a[c] - b[c];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

KMeansResult kmeans(const PointSet& points, int clusters, int max_iterations, Rng& rng) {
  const std::size_t n = points.size();
  const std::size_t dim = points.dim();
  if (clusters < 1) throw InvalidInput("cluster count must be at least 1");
  if (static_cast<std::size_t>(clusters) > n) throw InvalidInput("more clusters than objects");
  if (max_iterations < 1) throw InvalidInput("iteration cap must be at least 1");
  const auto k = static_cast<std::size_t>(clusters);

  KMeansResult result;
  VertexSet ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::sample(ids.begin(), ids.end(), std::back_inserter(result.initial_centroids),
              static_cast<std::ptrdiff_t>(k), rng);
  std::shuffle(result.initial_centroids.begin(), result.initial_centroids.end(), rng);

  std::vector<double> centroids(k * dim);
  for (std::size_t c = 0; c < k; ++c) {
    const auto p = points.point(static_cast<std::size_t>(result.initial_centroids[c]));
    std::copy(p.begin(), p.end(), centroids.begin() + static_cast<std::ptrdiff_t>(c * dim));
  }
  auto centroid = [&](std::size_t c) {
    return std::span<const double>(centroids.data() + c * dim, dim);
  };

  std::vector<int> assign(n, -1);
  std::vector<int> next(n);
  std::vector<double> own_dist(n);
  std::vector<std::size_t> counts(k);
  while (result.iterations < max_iterations) {
    ++result.iterations;
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
      const auto p = points.point(static_cast<std::size_t>(i));
      double best = std::numeric_limits<double>::infinity();
      int pick = 0;
      for (std::size_t c = 0; c < k; ++c) {
        const double dist = squared_distance(p, centroid(c));
        if (dist < best) {
          best = dist;
          pick = static_cast<int>(c);
        }
      }
      next[static_cast<std::size_t>(i)] = pick;
      own_dist[static_cast<std::size_t>(i)] = best;
    }
    if (next == assign) {
      result.converged = true;
      break;
    }
    assign = next;

    std::fill(centroids.begin(), centroids.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<std::size_t>(assign[i]);
      const auto p = points.point(i);
      for (std::size_t j = 0; j < dim; ++j) centroids[c * dim + j] += p[j];
      ++counts[c];
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) centroids[c * dim + j] /= static_cast<double>(counts[c]);
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] != 0) continue;
      // farthest object from its own centroid; skip objects that would empty their cluster
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (counts[static_cast<std::size_t>(assign[i])] < 2 || own_dist[i] <= 0.0) continue;
        if (far == n || own_dist[i] > own_dist[far]) far = i;
      }
      if (far == n) continue;
      --counts[static_cast<std::size_t>(assign[far])];
      assign[far] = static_cast<int>(c);
      own_dist[far] = 0.0;
      counts[c] = 1;
      const auto p = points.point(far);
      std::copy(p.begin(), p.end(), centroids.begin() + static_cast<std::ptrdiff_t>(c * dim));
    }
  }
  result.classification = Classification::from_labels(assign);
  return result;
}

std::vector<std::size_t> size_profile(const Classification& c) {
  auto sizes = c.class_sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

KMeansComparison compare_with_kmeans(const PointSet& vectors, const DissimilarityMatrix& d,
                                     int clusters, int restarts, RunOptions opts) {
  if (restarts < 1) throw InvalidInput("restart count must be at least 1");
  if (vectors.size() != d.size()) throw InvalidInput("vectors and matrix sizes differ");
  KMeansComparison out;
  out.clusters = clusters;
  for (int i = 0; i < restarts; ++i) {
    Rng rng(run_seed(opts.seed ^ 0x6B6D65616E73ull, static_cast<std::size_t>(i)));
    out.kmeans_results.push_back(
        kmeans(vectors, clusters, kDefaultKMeansIterations, rng).classification);
  }
  out.kmeans_concordance = concordance(out.kmeans_results);

  opts.runs = restarts;
  opts.dichotomies = std::max(opts.dichotomies, clusters - 1);
  out.solution = run_external(d, opts);

  std::vector<Classification> items;
  for (const auto& item : out.solution.distinct) items.push_back(item.classification);
  std::vector<std::vector<std::size_t>> same_size;
  for (const auto& run : out.solution.members) {
    auto& ids = same_size.emplace_back();
    for (std::size_t id : run) {
      if (items[id].num_classes() == static_cast<std::size_t>(clusters) &&
          std::find(ids.begin(), ids.end(), id) == ids.end()) {
        ids.push_back(id);
      }
    }
  }
  const auto table = rand_table(items);
  for (std::size_t id = 0; id < items.size(); ++id) {
    if (items[id].num_classes() != static_cast<std::size_t>(clusters)) continue;
    const double s = greedy_stability(id, same_size, table, items.size());
    if (!out.main_concordance || s > *out.main_concordance) {
      out.main_concordance = s;
      out.best_distinct = id;
    }
  }
  return out;
}

}  // namespace acdaa
