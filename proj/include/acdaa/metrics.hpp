#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acdaa/classification.hpp"

namespace acdaa {

// Fraction of unordered object pairs on which a and b agree (together in
// both or apart in both). 1.0 when there are fewer than two objects.
// Throws InvalidInput if the object counts differ.
double rand_index(const Classification& a, const Classification& b);

// Minimum pairwise RAND index; 1.0 for a single classification.
// Throws InvalidInput for an empty family.
double concordance(std::span<const Classification> family);

// Symmetric table of rand_index over all pairs of `items`, row-major.
// OpenMP-parallel over rows; rand_table_serial is the reference kernel.
std::vector<double> rand_table(std::span<const Classification> items);
std::vector<double> rand_table_serial(std::span<const Classification> items);

// True iff some class has at most two members.
bool is_degenerate(const Classification& c);

// Largest class size over smallest class size.
double uniformity(const Classification& c);

}  // namespace acdaa
