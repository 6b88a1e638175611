#include "acdaa/classification.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "acdaa/errors.hpp"

namespace acdaa {

Classification::Classification(std::vector<VertexSet> classes, std::size_t object_count)
    : object_count_(object_count), classes_(std::move(classes)) {
  std::vector<char> seen(object_count_, 0);
  std::size_t covered = 0;
  for (auto& cls : classes_) {
    if (cls.empty()) throw InvalidInput("classification contains an empty class");
    std::sort(cls.begin(), cls.end());
    for (Vertex v : cls) {
      if (v < 0 || static_cast<std::size_t>(v) >= object_count_) {
        throw InvalidInput("object " + std::to_string(v) + " out of range");
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw InvalidInput("object " + std::to_string(v) + " appears in two classes");
      }
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
    }
  }
  if (covered != object_count_) throw InvalidInput("classification does not cover all objects");
  std::sort(classes_.begin(), classes_.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
}

Classification Classification::from_labels(std::span<const int> labels) {
  std::vector<VertexSet> classes;
  std::map<int, std::size_t> slot;  // label -> class index
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = slot.try_emplace(labels[v], classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(static_cast<Vertex>(v));
  }
  return Classification(std::move(classes), labels.size());
}

Classification Classification::single_class(std::size_t object_count) {
  VertexSet all(object_count);
  for (std::size_t v = 0; v < object_count; ++v) all[v] = static_cast<Vertex>(v);
  return Classification({std::move(all)}, object_count);
}

std::vector<int> Classification::labels() const {
  std::vector<int> out(object_count_, -1);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    for (Vertex v : classes_[c]) out[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  return out;
}

std::vector<std::size_t> Classification::class_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(classes_.size());
  for (const auto& cls : classes_) out.push_back(cls.size());
  return out;
}

}  // namespace acdaa
