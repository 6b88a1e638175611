#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace acdaa {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

// A partition of {0, ..., N-1} held in canonical form: each class sorted
// ascending, classes ordered by their smallest member. Two classifications
// are the same partition iff they compare equal.
class Classification {
 public:
  Classification() = default;
  // Canonicalizes; throws InvalidInput unless the classes are nonempty,
  // disjoint and cover exactly {0, ..., object_count-1}.
  Classification(std::vector<VertexSet> classes, std::size_t object_count);

  static Classification from_labels(std::span<const int> labels);
  static Classification single_class(std::size_t object_count);

  std::size_t object_count() const noexcept { return object_count_; }
  std::size_t num_classes() const noexcept { return classes_.size(); }
  const std::vector<VertexSet>& classes() const noexcept { return classes_; }
  const VertexSet& operator[](std::size_t i) const { return classes_[i]; }

  // labels()[v] is the index of v's class in canonical order.
  std::vector<int> labels() const;
  std::vector<std::size_t> class_sizes() const;

  friend bool operator==(const Classification&, const Classification&) = default;
  friend auto operator<=>(const Classification&, const Classification&) = default;

 private:
  std::size_t object_count_ = 0;
  std::vector<VertexSet> classes_;
};

}  // namespace acdaa
