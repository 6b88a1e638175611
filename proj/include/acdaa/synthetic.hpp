#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "acdaa/matrix.hpp"

namespace acdaa {

// Two uniform disks of radius 1 whose centers are `separation` apart.
struct TwoBlobs {
  int first = 50;
  int second = 50;
  double separation = 10.0;
};

// A uniform disk of radius 1 inside a concentric ring.
struct BlobPlusRing {
  int blob = 50;
  int ring = 100;
  double ring_radius = 5.0;
};

// Inner ring (radius 3), a small disk slightly off its center, and an outer
// ring (radius 6). Objects are ordered inner ring, disk, outer ring.
struct TwoRingsPlusBlob {
  int inner = 80;
  int blob = 35;
  int outer = 120;
};

// Factions of decreasing size (weights 1/(1 + i/4)), each voting along
// its own line; `noise` is the probability that a member departs from it.
struct PlantedVotes {
  int deputies = 450;
  int votes = 250;
  int factions = 4;
  double noise = 0.05;
};

using ShapeSpec = std::variant<TwoBlobs, BlobPlusRing, TwoRingsPlusBlob, PlantedVotes>;

struct SyntheticData {
  std::variant<PointSet, VoteMatrix> data;
  std::vector<int> labels;  // planted class of every object
};

// Deterministic for a fixed (spec, seed). Throws InvalidInput on nonpositive
// counts or parameters outside their domain.
SyntheticData generate_synthetic(const ShapeSpec& spec, std::uint64_t seed);

// Parses "two-blobs:50,50,10", "blob-plus-ring:50,100,5",
// "two-rings-plus-blob:80,35,120", "planted-votes:450,250,4,0.05".
// Parameters may be omitted to take the defaults above.
ShapeSpec parse_shape(std::string_view text);

}  // namespace acdaa
