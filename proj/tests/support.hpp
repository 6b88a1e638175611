#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "acdaa/classification.hpp"
#include "acdaa/graph.hpp"
#include "acdaa/matrix.hpp"

namespace acdaa::testing {

inline FrequencyGraph graph_from(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  FrequencyGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline FrequencyGraph complete_graph(std::size_t n) {
  FrequencyGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return g;
}

// Cliques on {0..size-1} and {size..2size-1} joined by the edge (size-1, size).
inline FrequencyGraph two_cliques_with_bridge(int size) {
  FrequencyGraph g(static_cast<std::size_t>(2 * size));
  for (int base : {0, size}) {
    for (int a = 0; a < size; ++a) {
      for (int b = a + 1; b < size; ++b) g.add_edge(base + a, base + b);
    }
  }
  g.add_edge(size - 1, size);
  return g;
}

// Random spanning tree plus extra edges with probability p.
template <typename Engine>
FrequencyGraph random_connected_graph(std::size_t n, double p, Engine& rng) {
  FrequencyGraph g(n);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution extra(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto u = static_cast<Vertex>(a);
      const auto v = static_cast<Vertex>(b);
      if (!g.has_edge(u, v) && extra(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

template <typename Engine>
Classification random_partition(std::size_t n, int max_classes, Engine& rng) {
  std::uniform_int_distribution<int> label(0, max_classes - 1);
  std::vector<int> labels(n);
  for (auto& l : labels) l = label(rng);
  return Classification::from_labels(labels);
}

template <typename Engine>
DissimilarityMatrix random_points_matrix(std::size_t n, Engine& rng) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  PointSet pts(2);
  for (std::size_t i = 0; i < n; ++i) {
    const double p[] = {coord(rng), coord(rng)};
    pts.add(p);
  }
  return points_to_dissimilarity(pts);
}

// Pair-by-pair agreement count, straight from the definition.
inline double rand_by_pairs(const Classification& a, const Classification& b) {
  const auto la = a.labels();
  const auto lb = b.labels();
  const std::size_t n = la.size();
  std::size_t agree = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++pairs;
      if ((la[i] == la[j]) == (lb[i] == lb[j])) ++agree;
    }
  }
  return pairs == 0 ? 1.0 : static_cast<double>(agree) / static_cast<double>(pairs);
}

}  // namespace acdaa::testing
