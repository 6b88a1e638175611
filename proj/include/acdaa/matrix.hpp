#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace acdaa {

// Roll-call matrix: one row per deputy, one column per vote, entries in {-1, 0, +1}.
class VoteMatrix {
 public:
  VoteMatrix() = default;
  // Throws InvalidInput unless rows >= 2, cols >= 1 and every entry is -1, 0 or 1.
  VoteMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int8_t operator()(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
  std::span<const std::int8_t> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<std::int8_t>& entries() const noexcept { return entries_; }

  friend bool operator==(const VoteMatrix&, const VoteMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int8_t> entries_;
};

// Symmetric, zero-diagonal, nonnegative N x N matrix. The triangle inequality is not required.
class DissimilarityMatrix {
 public:
  DissimilarityMatrix() = default;
  // Validates all invariants; throws InvalidInput with the offending (i, j) on failure.
  DissimilarityMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
  const std::vector<double>& entries() const noexcept { return entries_; }

  friend bool operator==(const DissimilarityMatrix&, const DissimilarityMatrix&) = default;

 private:
  struct Trusted {};
  DissimilarityMatrix(Trusted, std::size_t n, std::vector<double> entries)
      : n_(n), entries_(std::move(entries)) {}

  friend DissimilarityMatrix pairwise_euclidean(std::span<const double>, std::size_t, std::size_t);
  friend DissimilarityMatrix pairwise_euclidean_serial(std::span<const double>, std::size_t,
                                                       std::size_t);

  std::size_t n_ = 0;
  std::vector<double> entries_;
};

// Points of a common dimension, stored row-major.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim) : dim_(dim) {}
  // Throws InvalidInput if dim == 0 or coords.size() is not a multiple of dim.
  PointSet(std::size_t dim, std::vector<double> coords);

  // Throws InvalidInput on dimension mismatch.
  void add(std::span<const double> point);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
  const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

// Euclidean distance between every pair of rows of a rows x dim row-major array.
// OpenMP-parallel over rows; pairwise_euclidean_serial is the reference kernel.
DissimilarityMatrix pairwise_euclidean(std::span<const double> rows, std::size_t count,
                                       std::size_t dim);
DissimilarityMatrix pairwise_euclidean_serial(std::span<const double> rows, std::size_t count,
                                              std::size_t dim);

DissimilarityMatrix votes_to_dissimilarity(const VoteMatrix& votes);
// Requires at least two points.
DissimilarityMatrix points_to_dissimilarity(const PointSet& points);

// Vote rows widened to doubles, for vector-space methods such as k-means.
PointSet votes_as_points(const VoteMatrix& votes);

}  // namespace acdaa
