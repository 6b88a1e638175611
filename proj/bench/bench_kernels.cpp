// Parallel kernels against their serial references.
//
//   ACDAA_THREADS=4 ./acdaa_bench --benchmark_filter=Rand

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "acdaa/ensemble.hpp"
#include "acdaa/graph.hpp"
#include "acdaa/matrix.hpp"
#include "acdaa/metrics.hpp"
#include "acdaa/synthetic.hpp"

namespace {

using namespace acdaa;

std::vector<double> random_rows(std::size_t count, std::size_t dim) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> coord;
  std::vector<double> rows(count * dim);
  for (auto& x : rows) x = coord(rng);
  return rows;
}

const DissimilarityMatrix& votes_matrix() {
  static const DissimilarityMatrix d = [] {
    const auto data = generate_synthetic(PlantedVotes{450, 250, 4, 0.05}, 1);
    return votes_to_dissimilarity(std::get<VoteMatrix>(data.data));
  }();
  return d;
}

void BM_Euclidean(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rows = random_rows(n, 250);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_euclidean(rows, n, 250));
}

void BM_EuclideanSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto rows = random_rows(n, 250);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_euclidean_serial(rows, n, 250));
}

void BM_Neighborhood(benchmark::State& state) {
  const auto& d = votes_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(build_neighborhood_graph(d));
}

void BM_NeighborhoodSerial(benchmark::State& state) {
  const auto& d = votes_matrix();
  for (auto _ : state) benchmark::DoNotOptimize(build_neighborhood_graph_serial(d));
}

std::vector<Classification> partitions(std::size_t count) {
  std::mt19937_64 rng(2);
  std::vector<Classification> items;
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> label(0, static_cast<int>(2 + i % 9));
    std::vector<int> labels(450);
    for (auto& l : labels) l = label(rng);
    items.push_back(Classification::from_labels(labels));
  }
  return items;
}

void BM_RandTable(benchmark::State& state) {
  const auto items = partitions(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rand_table(items));
}

void BM_RandTableSerial(benchmark::State& state) {
  const auto items = partitions(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rand_table_serial(items));
}

RunOptions run_options() {
  RunOptions opts;
  opts.dichotomies = 5;
  opts.runs = 8;
  opts.paths = 1000;
  opts.seed = 3;
  return opts;
}

void BM_Runs(benchmark::State& state) {
  const auto& d = votes_matrix();
  const auto g = prepare_graph(d);
  for (auto _ : state) benchmark::DoNotOptimize(run_families(g, d, run_options()));
}

void BM_RunsSerial(benchmark::State& state) {
  const auto& d = votes_matrix();
  const auto g = prepare_graph(d);
  for (auto _ : state) benchmark::DoNotOptimize(run_families_serial(g, d, run_options()));
}

}  // namespace

BENCHMARK(BM_Euclidean)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EuclideanSerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Neighborhood)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NeighborhoodSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandTable)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandTableSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Runs)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_RunsSerial)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
