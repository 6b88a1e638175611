#include "acdaa/ensemble.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <string>

#include "acdaa/errors.hpp"
#include "acdaa/metrics.hpp"
#include "acdaa/parallel.hpp"

namespace acdaa {

std::uint64_t run_seed(std::uint64_t master, std::size_t index) {
  std::uint64_t z = master + (static_cast<std::uint64_t>(index) + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FrequencyGraph prepare_graph(const DissimilarityMatrix& d, int neighbors) {
  Subgraph sub = whole_graph(build_neighborhood_graph(d, neighbors));
  repair_connectivity(sub, d);
  return std::move(sub.graph);
}

namespace {

void check_run_options(const RunOptions& opts) {
  if (opts.runs < 1) throw InvalidInput("run count must be at least 1");
  if (opts.dichotomies < 1) throw InvalidInput("dichotomy count must be at least 1");
  if (opts.paths < 1) throw InvalidInput("path count must be at least 1");
}

RunFamily one_run(const FrequencyGraph& g, const DissimilarityMatrix& d, const RunOptions& opts,
                  std::size_t index) {
  Rng rng(run_seed(opts.seed, index));
  return run_daa(g, d, opts.dichotomies, opts.paths, rng);
}

}  // namespace

std::vector<RunFamily> run_families_serial(const FrequencyGraph& g, const DissimilarityMatrix& d,
                                           const RunOptions& opts) {
  check_run_options(opts);
  std::vector<RunFamily> out;
  out.reserve(static_cast<std::size_t>(opts.runs));
  for (int i = 0; i < opts.runs; ++i) out.push_back(one_run(g, d, opts, static_cast<std::size_t>(i)));
  return out;
}

std::vector<RunFamily> run_families(const FrequencyGraph& g, const DissimilarityMatrix& d,
                                    const RunOptions& opts) {
  check_run_options(opts);
  std::vector<RunFamily> out(static_cast<std::size_t>(opts.runs));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count())
  for (int i = 0; i < opts.runs; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = one_run(g, d, opts, static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(acdaa_run_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::size_t max_classifications(int dichotomies, int runs) {
  if (dichotomies < 1 || runs < 1) throw InvalidInput("dichotomies and runs must be positive");
  return family_size(dichotomies) * static_cast<std::size_t>(runs);
}

double complexity(std::size_t distinct_count, int dichotomies, int runs) {
  const std::size_t denom = max_classifications(dichotomies, runs);
  if (distinct_count == 0) throw InvalidInput("distinct count must be positive");
  if (distinct_count > denom) {
    throw InvalidInput(std::to_string(distinct_count) + " distinct classifications exceed " +
                       std::to_string(denom) + " possible");
  }
  return static_cast<double>(distinct_count) / static_cast<double>(denom);
}

double greedy_stability(std::size_t target, const std::vector<std::vector<std::size_t>>& run_members,
                        std::span<const double> table, std::size_t item_count) {
  if (table.size() != item_count * item_count) throw InvalidInput("RAND table size mismatch");
  const auto home = std::find_if(run_members.begin(), run_members.end(), [&](const auto& run) {
    return std::find(run.begin(), run.end(), target) != run.end();
  });
  if (home == run_members.end()) throw InvalidInput("classification absent from every run");

  std::vector<std::size_t> chosen{target};
  double current = 1.0;
  for (auto run = run_members.begin(); run != run_members.end(); ++run) {
    if (run == home || run->empty()) continue;
    double best = -1.0;
    std::size_t pick = 0;
    for (std::size_t cand : *run) {
      double with = current;
      for (std::size_t c : chosen) with = std::min(with, table[cand * item_count + c]);
      if (with > best) {
        best = with;
        pick = cand;
      }
    }
    chosen.push_back(pick);
    current = best;
  }
  return current;
}

SolutionSet summarize(std::span<const RunFamily> families, int paths, std::uint64_t seed) {
  if (families.empty()) throw InvalidInput("no run families to summarize");
  SolutionSet out;
  out.dichotomies = families.front().dichotomies;
  out.runs = static_cast<int>(families.size());
  out.paths = paths;
  out.seed = seed;

  std::map<Classification, std::size_t> index;
  for (const auto& family : families) {
    if (family.dichotomies != out.dichotomies) throw InvalidInput("families differ in dichotomy count");
    if (family.entries.size() != family_size(family.dichotomies)) {
      throw InvalidInput("family has " + std::to_string(family.entries.size()) + " entries");
    }
    out.padded = out.padded || family.padded;
    auto& ids = out.members.emplace_back();
    for (const auto& entry : family.entries) {
      auto [it, inserted] = index.try_emplace(entry.classification, out.distinct.size());
      if (inserted) out.distinct.push_back({entry.classification});
      auto& item = out.distinct[it->second];
      ++item.multiplicity;
      if (entry.kind == EntryKind::essential) ++item.essential_count;
      ids.push_back(it->second);
    }
    std::vector<std::size_t> seen = ids;
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (std::size_t id : seen) ++out.distinct[id].runs_present;
  }

  out.complexity = complexity(out.distinct.size(), out.dichotomies, out.runs);

  std::vector<Classification> items;
  items.reserve(out.distinct.size());
  for (const auto& d : out.distinct) items.push_back(d.classification);
  const auto table = rand_table(items);
  for (std::size_t i = 0; i < items.size(); ++i) {
    out.distinct[i].stability = greedy_stability(i, out.members, table, items.size());
  }
  return out;
}

SolutionSet run_external(const DissimilarityMatrix& d, const RunOptions& opts) {
  check_run_options(opts);
  const FrequencyGraph g = prepare_graph(d, opts.neighbors);
  const auto families = run_families(g, d, opts);
  return summarize(families, opts.paths, opts.seed);
}

double stability(const Classification& a, std::span<const RunFamily> runs) {
  std::map<Classification, std::size_t> index;
  std::vector<Classification> items;
  auto id_of = [&](const Classification& c) {
    auto [it, inserted] = index.try_emplace(c, items.size());
    if (inserted) items.push_back(c);
    return it->second;
  };
  std::vector<std::vector<std::size_t>> members;
  for (const auto& family : runs) {
    auto& ids = members.emplace_back();
    for (const auto& entry : family.entries) ids.push_back(id_of(entry.classification));
  }
  const auto found = index.find(a);
  if (found == index.end()) throw InvalidInput("classification absent from every run");
  return greedy_stability(found->second, members, rand_table(items), items.size());
}

SweepGrid complexity_sweep(std::span<const RunFamily> families, std::span<const int> run_values,
                           std::span<const int> dichotomy_values) {
  if (run_values.empty() || dichotomy_values.empty()) throw InvalidInput("sweep ranges must be nonempty");
  SweepGrid grid;
  grid.run_values.assign(run_values.begin(), run_values.end());
  grid.dichotomy_values.assign(dichotomy_values.begin(), dichotomy_values.end());
  for (int r : run_values) {
    if (r < 1 || static_cast<std::size_t>(r) > families.size()) {
      throw InvalidInput("sweep needs " + std::to_string(r) + " runs, have " +
                         std::to_string(families.size()));
    }
    auto& row = grid.cells.emplace_back();
    auto& counts = grid.distinct_counts.emplace_back();
    for (int k : dichotomy_values) {
      std::map<Classification, char> seen;
      for (int i = 0; i < r; ++i) {
        const auto truncated = truncate_family(families[static_cast<std::size_t>(i)], k);
        for (const auto& entry : truncated.entries) seen.try_emplace(entry.classification, 0);
      }
      counts.push_back(seen.size());
      row.push_back(complexity(seen.size(), k, r));
    }
  }
  return grid;
}

}  // namespace acdaa
