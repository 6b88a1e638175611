#include "acdaa/dichotomy.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "acdaa/errors.hpp"

namespace acdaa {

const std::vector<EdgeId>& MinimaxSearch::find(const FrequencyGraph& g, Vertex s, Vertex t) {
  const std::size_t n = g.vertex_count();
  if (s < 0 || t < 0 || static_cast<std::size_t>(s) >= n || static_cast<std::size_t>(t) >= n) {
    throw InvalidInput("minimax path endpoint out of range");
  }
  if (s == t) throw InvalidInput("minimax path endpoints must differ");

  constexpr Frequency kUnreached = std::numeric_limits<Frequency>::max();
  bottleneck_.assign(n, kUnreached);
  parent_.assign(n, -1);
  settled_.assign(n, 0);
  heap_.clear();
  const auto cmp = std::greater<>{};

  bottleneck_[static_cast<std::size_t>(s)] = 0;
  heap_.emplace_back(0, s);
  bool found = false;
  while (!heap_.empty()) {
    std::pop_heap(heap_.begin(), heap_.end(), cmp);
    const auto [cost, v] = heap_.back();
    heap_.pop_back();
    const auto vi = static_cast<std::size_t>(v);
    if (settled_[vi]) continue;
    settled_[vi] = 1;
    if (v == t) {
      found = true;
      break;
    }
    for (const auto& inc : g.incident(v)) {
      const auto w = static_cast<std::size_t>(inc.neighbor);
      if (settled_[w]) continue;
      const Frequency through = std::max(cost, g.freq(inc.edge));
      if (through < bottleneck_[w]) {
        bottleneck_[w] = through;
        parent_[w] = inc.edge;
        heap_.emplace_back(through, inc.neighbor);
        std::push_heap(heap_.begin(), heap_.end(), cmp);
      }
    }
  }
  if (!found) {
    throw InvalidInput("no path between " + std::to_string(s) + " and " + std::to_string(t));
  }

  path_.clear();
  for (Vertex v = t; v != s;) {
    const EdgeId e = parent_[static_cast<std::size_t>(v)];
    path_.push_back(e);
    const auto& edge = g.edge(e);
    v = edge.u == v ? edge.v : edge.u;
  }
  std::reverse(path_.begin(), path_.end());
  return path_;
}

std::vector<EdgeId> minimax_path(const FrequencyGraph& g, Vertex s, Vertex t) {
  MinimaxSearch search;
  return search.find(g, s, t);
}

namespace {

class PathSampler {
 public:
  PathSampler(FrequencyGraph& g, Rng& rng)
      : g_(g), rng_(rng), first_(0, static_cast<Vertex>(g.vertex_count()) - 1),
        second_(0, static_cast<Vertex>(g.vertex_count()) - 2) {}

  // Draws a uniform unordered pair of distinct vertices, adds 1 along its
  // minimax path and returns the path.
  const std::vector<EdgeId>& step() {
    const Vertex a = first_(rng_);
    Vertex b = second_(rng_);
    if (b >= a) ++b;
    const auto& path = search_.find(g_, a, b);
    for (EdgeId e : path) g_.add_freq(e, 1);
    return path;
  }

 private:
  FrequencyGraph& g_;
  Rng& rng_;
  std::uniform_int_distribution<Vertex> first_;
  std::uniform_int_distribution<Vertex> second_;
  MinimaxSearch search_;
};

}  // namespace

DichotomyResult frequency_dichotomy(FrequencyGraph& g, int paths, Rng& rng) {
  if (paths < 1) throw InvalidInput("path count must be at least 1");
  if (g.vertex_count() < 2) throw InvalidInput("dichotomy needs at least 2 vertices");
  if (connected_components(g).size() != 1) throw InvalidInput("dichotomy input is disconnected");

  DichotomyResult result;
  g.reset_frequencies();
  PathSampler sampler(g, rng);

  for (int i = 0; i < paths; ++i) sampler.step();
  result.paths_built = static_cast<std::size_t>(paths);
  result.f_max = g.max_frequency();

  // All frequencies stay <= f_max until a path is forced over an f_max edge.
  const std::size_t cap = 10 * static_cast<std::size_t>(paths);
  std::vector<Frequency> before;
  std::vector<EdgeId> last;
  for (;;) {
    if (result.final_iterations == cap) {
      throw InvariantViolation("final stage exceeded " + std::to_string(cap) + " iterations");
    }
    const auto& path = sampler.step();
    ++result.final_iterations;
    Frequency f_mod = result.f_max;
    for (EdgeId e : path) f_mod = std::max(f_mod, g.freq(e));
    if (f_mod != result.f_max) {
      last = path;
      break;
    }
    ++result.paths_built;
  }

  before.reserve(last.size());
  for (EdgeId e : last) before.push_back(g.freq(e) - 1);
  for (EdgeId e : last) g.add_freq(e, -1);
  result.last_path_undone = true;
  for (std::size_t i = 0; i < last.size(); ++i) {
    if (g.freq(last[i]) != before[i]) result.last_path_undone = false;
  }

  result.max_before_removal = g.max_frequency();
  if (result.max_before_removal != result.f_max) {
    throw InvariantViolation("maximum frequency " + std::to_string(result.max_before_removal) +
                             " differs from saved " + std::to_string(result.f_max));
  }

  std::vector<char> active(g.edge_count(), 1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.freq(static_cast<EdgeId>(e)) == result.f_max) active[e] = 0;
  }
  const auto comps = connected_components(g, active);
  result.components_after_removal = comps.size();
  if (comps.size() < 2) {
    throw InvariantViolation("removing maximum-frequency edges left the graph connected");
  }

  std::size_t largest = 0;
  for (std::size_t c = 1; c < comps.size(); ++c) {
    if (comps[c].size() > comps[largest].size()) largest = c;
  }
  result.cut = cut_edges(g, comps[largest]);
  return result;
}

double decomposition_value(const Cut& cut) {
  if (cut.size() == 0) throw InvalidInput("decomposition value undefined for an empty cut");
  return static_cast<double>(cut.part_a.size()) * static_cast<double>(cut.part_b.size()) /
         static_cast<double>(cut.size());
}

double ratio_cut_value(const Cut& cut) {
  if (cut.part_a.empty() || cut.part_b.empty()) throw InvalidInput("cut has an empty part");
  return static_cast<double>(cut.size()) * (1.0 / static_cast<double>(cut.part_a.size()) +
                                            1.0 / static_cast<double>(cut.part_b.size()));
}

Cut brute_force_best_cut(const FrequencyGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InvalidInput("brute-force cut needs at least 2 vertices");
  if (n > kBruteForceMaxVertices) {
    throw InvalidInput("brute-force cut limited to " + std::to_string(kBruteForceMaxVertices) +
                       " vertices");
  }
  // Bit v of a mask set means v is on vertex 0's side.
  auto part_of = [n](std::uint32_t mask) {
    VertexSet part;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1u) part.push_back(static_cast<Vertex>(v));
    }
    return part;
  };
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
  std::uint32_t best = 0;
  std::uint64_t best_num = 0;  // |A||B|
  std::uint64_t best_den = 1;  // d(A, B)
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const std::uint32_t mask = (rest << 1) | 1u;
    if (mask == full) continue;
    std::uint64_t d = 0;
    for (const auto& e : g.edges()) {
      if ((mask >> e.u & 1u) != (mask >> e.v & 1u)) ++d;
    }
    if (d == 0) throw InvalidInput("brute-force cut requires a connected graph");
    const auto a = static_cast<std::uint64_t>(std::popcount(mask));
    const std::uint64_t num = a * (n - a);
    if (best == 0 || num * best_den > best_num * d ||
        (num * best_den == best_num * d && part_of(mask) < part_of(best))) {
      best = mask;
      best_num = num;
      best_den = d;
    }
  }
  return cut_edges(g, part_of(best));
}

}  // namespace acdaa
