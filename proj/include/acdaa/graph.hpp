#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "acdaa/classification.hpp"
#include "acdaa/matrix.hpp"

namespace acdaa {

using EdgeId = int;
using Frequency = std::int64_t;

// Undirected simple graph with an integer path-frequency counter per edge.
// Edges are stored with u < v; edge ids are dense and stable.
class FrequencyGraph {
 public:
  struct Edge {
    Vertex u;
    Vertex v;
    Frequency freq;
  };
  struct Incidence {
    Vertex neighbor;
    EdgeId edge;
  };

  FrequencyGraph() = default;
  explicit FrequencyGraph(std::size_t vertex_count);

  // Throws InvalidInput on self-loops, duplicates, out-of-range ids or negative freq.
  EdgeId add_edge(Vertex a, Vertex b, Frequency freq = 0);
  bool has_edge(Vertex a, Vertex b) const;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Incidence> incident(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  std::size_t degree(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  Frequency freq(EdgeId e) const { return edges_[static_cast<std::size_t>(e)].freq; }
  void add_freq(EdgeId e, Frequency delta) { edges_[static_cast<std::size_t>(e)].freq += delta; }
  void reset_frequencies();
  Frequency max_frequency() const;

 private:
  std::uint64_t key(Vertex a, Vertex b) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::unordered_set<std::uint64_t> keys_;
};

// A graph on a subset of a parent graph's vertices. Local vertex i is
// parent vertex to_parent[i]; to_parent is ascending.
struct Subgraph {
  FrequencyGraph graph;
  VertexSet to_parent;
};

Subgraph induced_subgraph(const FrequencyGraph& g, std::span<const Vertex> vertices);
// The whole graph viewed as a subgraph of itself.
Subgraph whole_graph(FrequencyGraph g);

// Each object is joined to its `neighbors` nearest others plus every object
// tied with the last of them. Selections are united into undirected edges;
// the result does not depend on how ties are ordered. All frequencies are 0.
// OpenMP-parallel over objects; build_neighborhood_graph_serial is the reference.
inline constexpr int kDefaultNeighbors = 4;
FrequencyGraph build_neighborhood_graph(const DissimilarityMatrix& d,
                                        int neighbors = kDefaultNeighbors);
FrequencyGraph build_neighborhood_graph_serial(const DissimilarityMatrix& d,
                                               int neighbors = kDefaultNeighbors);

// Components ordered by smallest member, each sorted ascending. With
// restrict_to, only those vertices and the edges among them are considered.
std::vector<VertexSet> connected_components(const FrequencyGraph& g,
                                            std::optional<std::span<const Vertex>> restrict_to = {});
// Components using only edges whose active flag is nonzero.
std::vector<VertexSet> connected_components(const FrequencyGraph& g,
                                            std::span<const char> edge_active);

// Adds zero-frequency edges until the subgraph is connected. Each edge joins
// the closest pair (by d, in parent ids) lying in different components;
// ties go to the lexicographically smallest pair. Returns edges added, which
// is always (initial component count - 1).
std::size_t repair_connectivity(Subgraph& sub, const DissimilarityMatrix& d);

struct Cut {
  VertexSet part_a;
  VertexSet part_b;
  std::vector<std::pair<Vertex, Vertex>> crossing_edges;  // (u, v) with u < v, ascending

  std::size_t size() const noexcept { return crossing_edges.size(); }
  std::size_t vertex_count() const noexcept { return part_a.size() + part_b.size(); }
};

// part_a must be a nonempty proper subset of g's vertices.
Cut cut_edges(const FrequencyGraph& g, std::span<const Vertex> part_a);

}  // namespace acdaa
