#include "acdaa/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "acdaa/errors.hpp"
#include "acdaa/parallel.hpp"

namespace acdaa {
namespace {

std::uint64_t pairs_within(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

double rand_index(const Classification& a, const Classification& b) {
  const std::size_t n = a.object_count();
  if (n != b.object_count()) throw InvalidInput("classifications cover different object sets");
  if (n < 2) return 1.0;

  const auto la = a.labels();
  const auto lb = b.labels();
  std::uint64_t together_both = 0;
  const std::size_t ma = a.num_classes();
  const std::size_t mb = b.num_classes();
  if (ma * mb <= 4 * n) {
    // dense contingency table
    std::vector<std::uint32_t> table(ma * mb, 0);
    for (std::size_t v = 0; v < n; ++v) {
      ++table[static_cast<std::size_t>(la[v]) * mb + static_cast<std::size_t>(lb[v])];
    }
    for (std::uint32_t c : table) together_both += pairs_within(c);
  } else {
    std::vector<std::pair<int, int>> cells(n);
    for (std::size_t v = 0; v < n; ++v) cells[v] = {la[v], lb[v]};
    std::sort(cells.begin(), cells.end());
    for (std::size_t i = 0; i < n;) {
      std::size_t j = i;
      while (j < n && cells[j] == cells[i]) ++j;
      together_both += pairs_within(j - i);
      i = j;
    }
  }
  std::uint64_t together_a = 0;
  for (const auto& cls : a.classes()) together_a += pairs_within(cls.size());
  std::uint64_t together_b = 0;
  for (const auto& cls : b.classes()) together_b += pairs_within(cls.size());

  const std::uint64_t total = pairs_within(n);
  const std::uint64_t disagree = together_a + together_b - 2 * together_both;
  return static_cast<double>(total - disagree) / static_cast<double>(total);
}

double concordance(std::span<const Classification> family) {
  if (family.empty()) throw InvalidInput("concordance of an empty family");
  double worst = 1.0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      worst = std::min(worst, rand_index(family[i], family[j]));
    }
  }
  return worst;
}

std::vector<double> rand_table_serial(std::span<const Classification> items) {
  const std::size_t m = items.size();
  std::vector<double> table(m * m, 1.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double r = rand_index(items[i], items[j]);
      table[i * m + j] = r;
      table[j * m + i] = r;
    }
  }
  return table;
}

std::vector<double> rand_table(std::span<const Classification> items) {
  const std::size_t m = items.size();
  std::vector<double> table(m * m, 1.0);
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (std::size_t j = ui + 1; j < m; ++j) {
      const double r = rand_index(items[ui], items[j]);
      table[ui * m + j] = r;
      table[j * m + ui] = r;
    }
  }
  return table;
}

bool is_degenerate(const Classification& c) {
  return std::any_of(c.classes().begin(), c.classes().end(),
                     [](const VertexSet& cls) { return cls.size() <= 2; });
}

double uniformity(const Classification& c) {
  if (c.num_classes() == 0) return 1.0;
  const auto sizes = c.class_sizes();
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  return static_cast<double>(*hi) / static_cast<double>(*lo);
}

}  // namespace acdaa
