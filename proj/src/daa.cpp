#include "acdaa/daa.hpp"

#include <algorithm>
#include <string>

#include "acdaa/errors.hpp"

namespace acdaa {

std::size_t select_class_to_split(const Classification& c) {
  if (c.num_classes() == 0) throw InvalidInput("classification has no classes");
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.num_classes(); ++i) {
    if (c[i].size() > c[best].size()) best = i;
  }
  return best;
}

namespace {

// counts[a * m + b] = edges of g between classes a and b (a != b).
std::vector<std::size_t> inter_class_edges(const std::vector<int>& labels, std::size_t m,
                                           const FrequencyGraph& g) {
  std::vector<std::size_t> counts(m * m, 0);
  for (const auto& e : g.edges()) {
    const auto a = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.u)]);
    const auto b = static_cast<std::size_t>(labels[static_cast<std::size_t>(e.v)]);
    if (a != b) {
      ++counts[a * m + b];
      ++counts[b * m + a];
    }
  }
  return counts;
}

}  // namespace

std::vector<Classification> agglomerate_chain(const Classification& essential,
                                              const FrequencyGraph& g) {
  if (g.vertex_count() != essential.object_count()) {
    throw InvalidInput("graph and classification sizes differ");
  }
  std::vector<Classification> chain;
  Classification current = essential;
  while (current.num_classes() > 2) {
    const std::size_t m = current.num_classes();
    const auto counts = inter_class_edges(current.labels(), m, g);
    std::size_t ba = 0;
    std::size_t bb = 1;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (counts[a * m + b] > counts[ba * m + bb]) {
          ba = a;
          bb = b;
        }
      }
    }
    std::vector<VertexSet> classes;
    classes.reserve(m - 1);
    for (std::size_t c = 0; c < m; ++c) {
      if (c == bb) continue;
      classes.push_back(current[c]);
      if (c == ba) classes.back().insert(classes.back().end(), current[bb].begin(), current[bb].end());
    }
    current = Classification(std::move(classes), current.object_count());
    chain.push_back(current);
  }
  return chain;
}

Classification splice_dichotomy(const Classification& current, std::size_t split_class,
                                const Cut& cut) {
  if (split_class >= current.num_classes()) throw InvalidInput("split class index out of range");
  VertexSet cut_vertices = cut.part_a;
  cut_vertices.insert(cut_vertices.end(), cut.part_b.begin(), cut.part_b.end());
  std::sort(cut_vertices.begin(), cut_vertices.end());
  if (cut.part_a.empty() || cut.part_b.empty() || cut_vertices != current[split_class]) {
    throw InvalidInput("cut does not partition class " + std::to_string(split_class));
  }
  std::vector<VertexSet> classes;
  classes.reserve(current.num_classes() + 1);
  for (std::size_t c = 0; c < current.num_classes(); ++c) {
    if (c != split_class) classes.push_back(current[c]);
  }
  classes.push_back(cut.part_a);
  classes.push_back(cut.part_b);
  return Classification(std::move(classes), current.object_count());
}

namespace {

Cut lift_cut(const Cut& local, const VertexSet& to_parent) {
  auto lift = [&](Vertex v) { return to_parent[static_cast<std::size_t>(v)]; };
  Cut out;
  for (Vertex v : local.part_a) out.part_a.push_back(lift(v));
  for (Vertex v : local.part_b) out.part_b.push_back(lift(v));
  for (const auto& [u, v] : local.crossing_edges) out.crossing_edges.emplace_back(lift(u), lift(v));
  return out;
}

void append_level(RunFamily& family, const Classification& essential,
                  const std::vector<Classification>& chain) {
  const int level = static_cast<int>(essential.num_classes());
  // chain runs from level-1 classes down to 2; the family lists 2 up to level-1
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    family.entries.push_back(
        {level, static_cast<int>(it->num_classes()), EntryKind::adjoint, *it});
  }
  family.entries.push_back({level, level, EntryKind::essential, essential});
}

}  // namespace

RunFamily run_daa(const FrequencyGraph& g, const DissimilarityMatrix& d, int dichotomies,
                  int paths, Rng& rng) {
  if (dichotomies < 1) throw InvalidInput("dichotomy count must be at least 1");
  if (paths < 1) throw InvalidInput("path count must be at least 1");
  if (d.size() != g.vertex_count()) throw InvalidInput("graph and matrix sizes differ");
  if (g.vertex_count() < 2) throw InvalidInput("run needs at least 2 objects");
  if (connected_components(g).size() != 1) throw InvalidInput("neighborhood graph is disconnected");

  RunFamily family;
  family.dichotomies = dichotomies;
  family.entries.reserve(family_size(dichotomies));

  FrequencyGraph working = g;
  Classification current = Classification::single_class(g.vertex_count());
  for (int step = 0; step < dichotomies; ++step) {
    const std::size_t idx = select_class_to_split(current);
    if (current[idx].size() < 2) {
      family.padded = true;
      break;
    }
    Subgraph sub = induced_subgraph(working, current[idx]);
    const std::size_t before = sub.graph.edge_count();
    repair_connectivity(sub, d);
    for (std::size_t e = before; e < sub.graph.edge_count(); ++e) {
      const auto& edge = sub.graph.edges()[e];
      working.add_edge(sub.to_parent[static_cast<std::size_t>(edge.u)],
                       sub.to_parent[static_cast<std::size_t>(edge.v)]);
    }
    const DichotomyResult split = frequency_dichotomy(sub.graph, paths, rng);
    current = splice_dichotomy(current, idx, lift_cut(split.cut, sub.to_parent));
    append_level(family, current, agglomerate_chain(current, g));
  }

  while (family.entries.size() < family_size(dichotomies)) {
    const int level = static_cast<int>(family.entries.size() == 0
                                           ? 2
                                           : family.entries.back().level + 1);
    for (int size = 2; size <= level; ++size) {
      family.entries.push_back({level, size,
                                size == level ? EntryKind::essential : EntryKind::adjoint,
                                current});
    }
  }
  return family;
}

RunFamily truncate_family(const RunFamily& family, int dichotomies) {
  if (dichotomies < 1 || dichotomies > family.dichotomies) {
    throw InvalidInput("cannot truncate a " + std::to_string(family.dichotomies) +
                       "-dichotomy family to " + std::to_string(dichotomies));
  }
  RunFamily out;
  out.dichotomies = dichotomies;
  const auto n = family_size(dichotomies);
  out.entries.assign(family.entries.begin(), family.entries.begin() + static_cast<std::ptrdiff_t>(n));
  out.padded = std::any_of(out.entries.begin(), out.entries.end(), [](const FamilyEntry& e) {
    return static_cast<int>(e.classification.num_classes()) != e.size;
  });
  return out;
}

}  // namespace acdaa
