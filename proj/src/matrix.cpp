#include "acdaa/matrix.hpp"

#include <cmath>
#include <string>

#include "acdaa/errors.hpp"
#include "acdaa/parallel.hpp"

namespace acdaa {

VoteMatrix::VoteMatrix(std::size_t rows, std::size_t cols, std::vector<std::int8_t> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ < 2) throw InvalidInput("vote matrix needs at least 2 rows");
  if (cols_ < 1) throw InvalidInput("vote matrix needs at least 1 column");
  if (entries_.size() != rows_ * cols_) throw InvalidInput("vote matrix entry count mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const int v = entries_[i];
    if (v != -1 && v != 0 && v != 1) {
      throw InvalidInput("vote entry at (" + std::to_string(i / cols_) + ", " +
                         std::to_string(i % cols_) + ") is " + std::to_string(v) +
                         ", expected -1, 0 or 1");
    }
  }
}

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw InvalidInput("dissimilarity matrix is not square");
  auto where = [](std::size_t i, std::size_t j) {
    return " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
  };
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) throw InvalidInput("nonzero diagonal" + where(i, i));
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v)) throw InvalidInput("non-finite entry" + where(i, j));
      if (v < 0.0) throw InvalidInput("negative entry" + where(i, j));
      if (v != (*this)(j, i)) throw InvalidInput("asymmetric entry" + where(i, j));
    }
  }
}

PointSet::PointSet(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw InvalidInput("point dimension must be positive");
  if (coords_.size() % dim_ != 0) throw InvalidInput("coordinate count not a multiple of dim");
}

void PointSet::add(std::span<const double> point) {
  if (dim_ == 0) dim_ = point.size();
  if (point.size() != dim_ || dim_ == 0) {
    throw InvalidInput("point has dimension " + std::to_string(point.size()) + ", expected " +
                       std::to_string(dim_));
  }
  coords_.insert(coords_.end(), point.begin(), point.end());
}

namespace {

double row_distance(std::span<const double> rows, std::size_t dim, std::size_t i,
                    std::size_t j) {
  double sum = 0.0;
  const double* a = rows.data() + i * dim;
  const double* b = rows.data() + j * dim;
  for (std::size_t c = 0; c < dim; ++c) {
    const double diff = a[c] - b[c];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

void check_rows(std::span<const double> rows, std::size_t count, std::size_t dim) {
  if (count < 2) throw InvalidInput("need at least 2 objects");
  if (rows.size() != count * dim) throw InvalidInput("row data size mismatch");
}

}  // namespace

DissimilarityMatrix pairwise_euclidean_serial(std::span<const double> rows, std::size_t count,
                                              std::size_t dim) {
  check_rows(rows, count, dim);
  std::vector<double> d(count * count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const double v = row_distance(rows, dim, i, j);
      d[i * count + j] = v;
      d[j * count + i] = v;
    }
  }
  return DissimilarityMatrix(DissimilarityMatrix::Trusted{}, count, std::move(d));
}

DissimilarityMatrix pairwise_euclidean(std::span<const double> rows, std::size_t count,
                                       std::size_t dim) {
  check_rows(rows, count, dim);
  std::vector<double> d(count * count, 0.0);
  const auto n = static_cast<std::ptrdiff_t>(count);
  // Each (i, j) is computed once with the same arithmetic as the serial kernel.
#pragma omp parallel for schedule(dynamic, 8) num_threads(thread_count())
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < count; ++j) {
      const double v = row_distance(rows, dim, static_cast<std::size_t>(i), j);
      d[static_cast<std::size_t>(i) * count + j] = v;
      d[j * count + static_cast<std::size_t>(i)] = v;
    }
  }
  return DissimilarityMatrix(DissimilarityMatrix::Trusted{}, count, std::move(d));
}

PointSet votes_as_points(const VoteMatrix& votes) {
  std::vector<double> coords(votes.entries().begin(), votes.entries().end());
  return PointSet(votes.cols(), std::move(coords));
}

DissimilarityMatrix votes_to_dissimilarity(const VoteMatrix& votes) {
  if (votes.rows() < 2) throw InvalidInput("vote matrix needs at least 2 rows");
  const PointSet pts = votes_as_points(votes);
  return pairwise_euclidean(pts.coords(), pts.size(), pts.dim());
}

DissimilarityMatrix points_to_dissimilarity(const PointSet& points) {
  if (points.size() < 2) throw InvalidInput("need at least 2 points");
  return pairwise_euclidean(points.coords(), points.size(), points.dim());
}

}  // namespace acdaa
