#include "acdaa/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "acdaa/errors.hpp"
#include "acdaa/parallel.hpp"

namespace acdaa {

FrequencyGraph::FrequencyGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

std::uint64_t FrequencyGraph::key(Vertex a, Vertex b) const {
  const auto lo = static_cast<std::uint64_t>(std::min(a, b));
  const auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return lo * adjacency_.size() + hi;
}

EdgeId FrequencyGraph::add_edge(Vertex a, Vertex b, Frequency freq) {
  const auto n = static_cast<Vertex>(adjacency_.size());
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw InvalidInput("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") out of range");
  }
  if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
  if (freq < 0) throw InvalidInput("negative edge frequency");
  if (!keys_.insert(key(a, b)).second) {
    throw InvalidInput("duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({std::min(a, b), std::max(a, b), freq});
  adjacency_[static_cast<std::size_t>(a)].push_back({b, id});
  adjacency_[static_cast<std::size_t>(b)].push_back({a, id});
  return id;
}

bool FrequencyGraph::has_edge(Vertex a, Vertex b) const {
  const auto n = static_cast<Vertex>(adjacency_.size());
  if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
  return keys_.count(key(a, b)) != 0;
}

void FrequencyGraph::reset_frequencies() {
  for (auto& e : edges_) e.freq = 0;
}

Frequency FrequencyGraph::max_frequency() const {
  Frequency best = 0;
  for (const auto& e : edges_) best = std::max(best, e.freq);
  return best;
}

Subgraph induced_subgraph(const FrequencyGraph& g, std::span<const Vertex> vertices) {
  Subgraph sub{FrequencyGraph(vertices.size()), VertexSet(vertices.begin(), vertices.end())};
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    local[static_cast<std::size_t>(sub.to_parent[i])] = static_cast<Vertex>(i);
  }
  for (const auto& e : g.edges()) {
    const Vertex lu = local[static_cast<std::size_t>(e.u)];
    const Vertex lv = local[static_cast<std::size_t>(e.v)];
    if (lu >= 0 && lv >= 0) sub.graph.add_edge(lu, lv, e.freq);
  }
  return sub;
}

Subgraph whole_graph(FrequencyGraph g) {
  VertexSet ids(g.vertex_count());
  std::iota(ids.begin(), ids.end(), 0);
  return Subgraph{std::move(g), std::move(ids)};
}

namespace {

// Objects within the `neighbors` nearest of `a`, ties at the boundary included.
VertexSet select_neighbors(const DissimilarityMatrix& d, std::size_t a, std::size_t neighbors,
                           std::vector<double>& scratch) {
  const std::size_t n = d.size();
  const auto row = d.row(a);
  scratch.clear();
  for (std::size_t j = 0; j < n; ++j) {
    if (j != a) scratch.push_back(row[j]);
  }
  const std::size_t take = std::min(neighbors, n - 1);
  std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(take - 1),
                   scratch.end());
  const double threshold = scratch[take - 1];
  VertexSet out;
  for (std::size_t j = 0; j < n; ++j) {
    if (j != a && row[j] <= threshold) out.push_back(static_cast<Vertex>(j));
  }
  return out;
}

FrequencyGraph assemble(std::size_t n, const std::vector<VertexSet>& selections) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    for (Vertex b : selections[a]) {
      const auto va = static_cast<Vertex>(a);
      pairs.emplace_back(std::min(va, b), std::max(va, b));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  FrequencyGraph g(n);
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  return g;
}

void check_neighborhood_args(const DissimilarityMatrix& d, int neighbors) {
  if (d.size() < 2) throw InvalidInput("neighborhood graph needs at least 2 objects");
  if (neighbors < 1) throw InvalidInput("neighbor count must be positive");
}

}  // namespace

FrequencyGraph build_neighborhood_graph_serial(const DissimilarityMatrix& d, int neighbors) {
  check_neighborhood_args(d, neighbors);
  const std::size_t n = d.size();
  std::vector<VertexSet> selections(n);
  std::vector<double> scratch;
  for (std::size_t a = 0; a < n; ++a) {
    selections[a] = select_neighbors(d, a, static_cast<std::size_t>(neighbors), scratch);
  }
  return assemble(n, selections);
}

FrequencyGraph build_neighborhood_graph(const DissimilarityMatrix& d, int neighbors) {
  check_neighborhood_args(d, neighbors);
  const std::size_t n = d.size();
  std::vector<VertexSet> selections(n);
#pragma omp parallel num_threads(thread_count())
  {
    std::vector<double> scratch;
#pragma omp for schedule(static)
    for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(n); ++a) {
      selections[static_cast<std::size_t>(a)] =
          select_neighbors(d, static_cast<std::size_t>(a), static_cast<std::size_t>(neighbors),
                           scratch);
    }
  }
  return assemble(n, selections);
}

namespace {

template <typename EdgeFilter>
std::vector<VertexSet> components_impl(const FrequencyGraph& g, std::span<const char> allowed,
                                       EdgeFilter use_edge) {
  const std::size_t n = g.vertex_count();
  std::vector<char> visited(n, 0);
  std::vector<VertexSet> out;
  VertexSet stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start] || !allowed[start]) continue;
    VertexSet comp;
    visited[start] = 1;
    stack.push_back(static_cast<Vertex>(start));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& inc : g.incident(v)) {
        const auto w = static_cast<std::size_t>(inc.neighbor);
        if (!visited[w] && allowed[w] && use_edge(inc.edge)) {
          visited[w] = 1;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;  // starts scanned ascending, so already ordered by smallest member
}

}  // namespace

std::vector<VertexSet> connected_components(const FrequencyGraph& g,
                                            std::optional<std::span<const Vertex>> restrict_to) {
  std::vector<char> allowed(g.vertex_count(), restrict_to ? 0 : 1);
  if (restrict_to) {
    for (Vertex v : *restrict_to) {
      if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
        throw InvalidInput("restrict_to vertex out of range");
      }
      allowed[static_cast<std::size_t>(v)] = 1;
    }
  }
  return components_impl(g, allowed, [](EdgeId) { return true; });
}

std::vector<VertexSet> connected_components(const FrequencyGraph& g,
                                            std::span<const char> edge_active) {
  if (edge_active.size() != g.edge_count()) throw InvalidInput("edge mask size mismatch");
  const std::vector<char> allowed(g.vertex_count(), 1);
  return components_impl(g, allowed, [&](EdgeId e) {
    return edge_active[static_cast<std::size_t>(e)] != 0;
  });
}

std::size_t repair_connectivity(Subgraph& sub, const DissimilarityMatrix& d) {
  auto& g = sub.graph;
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidInput("cannot repair an empty vertex set");
  std::size_t added = 0;
  std::vector<int> comp_of(n);
  for (;;) {
    const auto comps = connected_components(g);
    if (comps.size() <= 1) break;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
    double best = std::numeric_limits<double>::infinity();
    Vertex bi = -1;
    Vertex bj = -1;
    // Ascending scan with strict comparison keeps the lexicographically smallest pair.
    for (std::size_t i = 0; i < n; ++i) {
      const auto pi = static_cast<std::size_t>(sub.to_parent[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (comp_of[i] == comp_of[j]) continue;
        const double dist = d(pi, static_cast<std::size_t>(sub.to_parent[j]));
        if (dist < best) {
          best = dist;
          bi = static_cast<Vertex>(i);
          bj = static_cast<Vertex>(j);
        }
      }
    }
    g.add_edge(bi, bj, 0);
    ++added;
  }
  return added;
}

Cut cut_edges(const FrequencyGraph& g, std::span<const Vertex> part_a) {
  const std::size_t n = g.vertex_count();
  std::vector<char> in_a(n, 0);
  std::size_t count = 0;
  for (Vertex v : part_a) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw InvalidInput("cut vertex out of range");
    if (!in_a[static_cast<std::size_t>(v)]) ++count;
    in_a[static_cast<std::size_t>(v)] = 1;
  }
  if (count == 0) throw InvalidInput("cut part is empty");
  if (count == n) throw InvalidInput("cut part covers the whole graph");
  Cut cut;
  for (std::size_t v = 0; v < n; ++v) {
    (in_a[v] ? cut.part_a : cut.part_b).push_back(static_cast<Vertex>(v));
  }
  for (const auto& e : g.edges()) {
    if (in_a[static_cast<std::size_t>(e.u)] != in_a[static_cast<std::size_t>(e.v)]) {
      cut.crossing_edges.emplace_back(e.u, e.v);
    }
  }
  std::sort(cut.crossing_edges.begin(), cut.crossing_edges.end());
  return cut;
}

}  // namespace acdaa
