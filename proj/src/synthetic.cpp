#include "acdaa/synthetic.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "acdaa/errors.hpp"

namespace acdaa {
namespace {

using Engine = std::mt19937_64;

void require_positive(int value, const char* what) {
  if (value <= 0) throw InvalidInput(std::string(what) + " must be positive");
}

// Jittered sunflower layout: near-uniform density, so the 4-nearest-neighbor
// graph of a disk is connected.
void add_disk(PointSet& pts, int count, double cx, double cy, double radius, Engine& rng) {
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double spacing = radius * std::sqrt(std::numbers::pi / count);
  std::uniform_real_distribution<double> jitter(-0.15 * spacing, 0.15 * spacing);
  for (int i = 0; i < count; ++i) {
    const double r = radius * std::sqrt((i + 0.5) / count);
    const double theta = i * golden;
    const double x = cx + r * std::cos(theta) + jitter(rng);
    const double y = cy + r * std::sin(theta) + jitter(rng);
    const double p[] = {x, y};
    pts.add(p);
  }
}

void add_ring(PointSet& pts, int count, double radius, Engine& rng) {
  std::uniform_real_distribution<double> angle_jitter(-0.1, 0.1);
  std::uniform_real_distribution<double> radial_jitter(-0.02, 0.02);
  for (int i = 0; i < count; ++i) {
    const double theta = 2.0 * std::numbers::pi * (i + angle_jitter(rng)) / count;
    const double r = radius + radial_jitter(rng);
    const double p[] = {r * std::cos(theta), r * std::sin(theta)};
    pts.add(p);
  }
}

void append_labels(std::vector<int>& labels, int count, int label) {
  labels.insert(labels.end(), static_cast<std::size_t>(count), label);
}

SyntheticData make(const TwoBlobs& s, Engine& rng) {
  require_positive(s.first, "blob size");
  require_positive(s.second, "blob size");
  if (!(s.separation > 0.0)) throw InvalidInput("separation must be positive");
  SyntheticData out{PointSet(2), {}};
  auto& pts = std::get<PointSet>(out.data);
  add_disk(pts, s.first, 0.0, 0.0, 1.0, rng);
  add_disk(pts, s.second, s.separation, 0.0, 1.0, rng);
  append_labels(out.labels, s.first, 0);
  append_labels(out.labels, s.second, 1);
  return out;
}

SyntheticData make(const BlobPlusRing& s, Engine& rng) {
  require_positive(s.blob, "blob size");
  require_positive(s.ring, "ring size");
  if (!(s.ring_radius > 1.0)) throw InvalidInput("ring radius must exceed the blob radius 1");
  SyntheticData out{PointSet(2), {}};
  auto& pts = std::get<PointSet>(out.data);
  add_disk(pts, s.blob, 0.0, 0.0, 1.0, rng);
  add_ring(pts, s.ring, s.ring_radius, rng);
  append_labels(out.labels, s.blob, 0);
  append_labels(out.labels, s.ring, 1);
  return out;
}

SyntheticData make(const TwoRingsPlusBlob& s, Engine& rng) {
  require_positive(s.inner, "inner ring size");
  require_positive(s.blob, "blob size");
  require_positive(s.outer, "outer ring size");
  SyntheticData out{PointSet(2), {}};
  auto& pts = std::get<PointSet>(out.data);
  add_ring(pts, s.inner, 3.0, rng);
  add_disk(pts, s.blob, 0.4, 0.0, 0.8, rng);
  add_ring(pts, s.outer, 6.0, rng);
  append_labels(out.labels, s.inner, 0);
  append_labels(out.labels, s.blob, 1);
  append_labels(out.labels, s.outer, 2);
  return out;
}

SyntheticData make(const PlantedVotes& s, Engine& rng) {
  require_positive(s.votes, "vote count");
  require_positive(s.factions, "faction count");
  if (s.deputies < 2) throw InvalidInput("need at least 2 deputies");
  if (!(s.noise >= 0.0 && s.noise <= 1.0)) throw InvalidInput("noise must lie in [0, 1]");

  const auto m = static_cast<std::size_t>(s.deputies);
  const auto n = static_cast<std::size_t>(s.votes);
  const auto f = static_cast<std::size_t>(s.factions);

  std::vector<double> weight(f);
  for (std::size_t i = 0; i < f; ++i) weight[i] = 1.0 / (1.0 + static_cast<double>(i) / 4.0);
  const double total = std::accumulate(weight.begin(), weight.end(), 0.0);
  std::vector<std::size_t> sizes(f);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < f; ++i) {
    sizes[i] = static_cast<std::size_t>(std::floor(static_cast<double>(m) * weight[i] / total));
    if (sizes[i] == 0) throw InvalidInput("too many factions for the number of deputies");
    assigned += sizes[i];
  }
  sizes[0] += m - assigned;

  std::discrete_distribution<int> stance({45.0, 10.0, 45.0});  // against, abstain, for
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution flip(s.noise);
  std::uniform_int_distribution<int> other(0, 1);

  std::vector<std::int8_t> base(n);
  for (auto& v : base) v = static_cast<std::int8_t>(stance(rng) - 1);
  std::vector<std::vector<std::int8_t>> line(f, base);
  for (auto& proto : line) {
    for (auto& v : proto) {
      if (coin(rng)) v = static_cast<std::int8_t>(stance(rng) - 1);
    }
  }

  std::vector<int> faction_of;
  for (std::size_t i = 0; i < f; ++i) append_labels(faction_of, static_cast<int>(sizes[i]), static_cast<int>(i));
  std::shuffle(faction_of.begin(), faction_of.end(), rng);

  std::vector<std::int8_t> entries;
  entries.reserve(m * n);
  for (std::size_t row = 0; row < m; ++row) {
    const auto& proto = line[static_cast<std::size_t>(faction_of[row])];
    for (std::size_t col = 0; col < n; ++col) {
      std::int8_t v = proto[col];
      if (flip(rng)) {
        // one of the two other values
        const int shift = other(rng) + 1;
        v = static_cast<std::int8_t>((v + 1 + shift) % 3 - 1);
      }
      entries.push_back(v);
    }
  }
  return SyntheticData{VoteMatrix(m, n, std::move(entries)), std::move(faction_of)};
}

template <typename T>
T parse_number(std::string_view token, std::string_view shape) {
  T value{};
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw InvalidInput("bad parameter '" + std::string(token) + "' for " + std::string(shape));
  }
  return value;
}

}  // namespace

SyntheticData generate_synthetic(const ShapeSpec& spec, std::uint64_t seed) {
  Engine rng(seed);
  return std::visit([&](const auto& s) { return make(s, rng); }, spec);
}

ShapeSpec parse_shape(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::vector<std::string_view> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      params.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  auto check_count = [&](std::size_t max) {
    if (params.size() > max) throw InvalidInput("too many parameters for " + std::string(name));
  };
  auto int_at = [&](std::size_t i, int& slot) {
    if (i < params.size()) slot = parse_number<int>(params[i], name);
  };
  auto real_at = [&](std::size_t i, double& slot) {
    if (i < params.size()) slot = parse_number<double>(params[i], name);
  };

  if (name == "two-blobs") {
    check_count(3);
    TwoBlobs s;
    int_at(0, s.first);
    int_at(1, s.second);
    real_at(2, s.separation);
    return s;
  }
  if (name == "blob-plus-ring") {
    check_count(3);
    BlobPlusRing s;
    int_at(0, s.blob);
    int_at(1, s.ring);
    real_at(2, s.ring_radius);
    return s;
  }
  if (name == "two-rings-plus-blob") {
    check_count(3);
    TwoRingsPlusBlob s;
    int_at(0, s.inner);
    int_at(1, s.blob);
    int_at(2, s.outer);
    return s;
  }
  if (name == "planted-votes") {
    check_count(4);
    PlantedVotes s;
    int_at(0, s.deputies);
    int_at(1, s.votes);
    int_at(2, s.factions);
    real_at(3, s.noise);
    return s;
  }
  throw InvalidInput("unknown shape '" + std::string(name) + "'");
}

}  // namespace acdaa
