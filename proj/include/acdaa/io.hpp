#pragma once

#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "acdaa/classification.hpp"
#include "acdaa/ensemble.hpp"
#include "acdaa/graph.hpp"
#include "acdaa/matrix.hpp"

namespace acdaa {

// Comma-separated text, one row per line, no header. Reals are written with
// enough digits to round-trip exactly. Readers throw ParseError (with the
// 1-based line) on malformed text and InvalidInput on invariant violations.

DissimilarityMatrix read_dissimilarity_csv(std::istream& in);
void write_dissimilarity_csv(std::ostream& out, const DissimilarityMatrix& d);

// Entries must be exactly -1, 0 or 1. With skip_header the first line is ignored.
VoteMatrix read_votes_csv(std::istream& in, bool skip_header = false);
void write_votes_csv(std::ostream& out, const VoteMatrix& votes);

PointSet read_points_csv(std::istream& in);
void write_points_csv(std::ostream& out, const PointSet& points);

// One integer label per line.
std::vector<int> read_labels_csv(std::istream& in);
void write_labels_csv(std::ostream& out, const std::vector<int>& labels);

// "u,v,freq" per edge, ascending edge id.
void write_edge_list_csv(std::ostream& out, const FrequencyGraph& g);

// A classification is an array of classes, each an ascending array of
// 0-based object ids, classes ordered by smallest member.
nlohmann::json classification_to_json(const Classification& c);
Classification classification_from_json(const nlohmann::json& j, std::size_t object_count);
nlohmann::json classifications_to_json(const std::vector<Classification>& list);
std::vector<Classification> classifications_from_json(const nlohmann::json& j,
                                                      std::size_t object_count);

// {k, r, T, seed, complexity, distinct: [{classes, multiplicity, stability,
// degenerate, uniformity, num_classes}]}
nlohmann::ordered_json solution_to_json(const SolutionSet& s);

// File wrappers; throw std::runtime_error when the file cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace acdaa
