#include "acdaa/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "acdaa/errors.hpp"
#include "acdaa/metrics.hpp"

namespace acdaa {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_field(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  T value{};
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError(line, "cannot parse '" + std::string(token) + "'");
  }
  return value;
}

// Calls on_row(fields, line_number) for every nonblank line. Blank lines are
// only accepted at the end of the input.
template <typename OnRow>
void for_each_row(std::istream& in, bool skip_header, OnRow on_row) {
  std::string line;
  std::size_t number = 0;
  std::size_t blank_at = 0;
  std::vector<std::string_view> fields;
  while (std::getline(in, line)) {
    ++number;
    if (skip_header && number == 1) continue;
    const std::string_view text = trim(line);
    if (text.empty()) {
      if (blank_at == 0) blank_at = number;
      continue;
    }
    if (blank_at != 0) throw ParseError(blank_at, "blank line inside data");
    fields.clear();
    std::string_view rest = text;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    on_row(fields, number);
  }
}

void write_real(std::ostream& out, double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, ptr - buf);
}

}  // namespace

DissimilarityMatrix read_dissimilarity_csv(std::istream& in) {
  std::vector<double> values;
  std::size_t width = 0;
  std::size_t rows = 0;
  for_each_row(in, false, [&](const auto& fields, std::size_t line) {
    if (rows == 0) width = fields.size();
    if (fields.size() != width) {
      throw ParseError(line, "expected " + std::to_string(width) + " fields, found " +
                                 std::to_string(fields.size()));
    }
    for (auto f : fields) values.push_back(parse_field<double>(f, line));
    ++rows;
  });
  if (rows == 0) throw ParseError(0, "empty dissimilarity matrix");
  if (rows != width) {
    throw ParseError(0, "matrix has " + std::to_string(rows) + " rows and " +
                            std::to_string(width) + " columns");
  }
  return DissimilarityMatrix(rows, std::move(values));
}

void write_dissimilarity_csv(std::ostream& out, const DissimilarityMatrix& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j) out << ',';
      write_real(out, d(i, j));
    }
    out << '\n';
  }
}

VoteMatrix read_votes_csv(std::istream& in, bool skip_header) {
  std::vector<std::int8_t> values;
  std::size_t width = 0;
  std::size_t rows = 0;
  for_each_row(in, skip_header, [&](const auto& fields, std::size_t line) {
    if (rows == 0) width = fields.size();
    if (fields.size() != width) {
      throw ParseError(line, "expected " + std::to_string(width) + " votes, found " +
                                 std::to_string(fields.size()));
    }
    for (auto f : fields) {
      const std::string_view token = trim(f);
      if (token == "1" || token == "+1") {
        values.push_back(1);
      } else if (token == "0") {
        values.push_back(0);
      } else if (token == "-1") {
        values.push_back(-1);
      } else {
        throw ParseError(line, "vote '" + std::string(token) + "' is not -1, 0 or 1");
      }
    }
    ++rows;
  });
  return VoteMatrix(rows, width, std::move(values));
}

void write_votes_csv(std::ostream& out, const VoteMatrix& votes) {
  for (std::size_t i = 0; i < votes.rows(); ++i) {
    for (std::size_t j = 0; j < votes.cols(); ++j) {
      if (j) out << ',';
      out << static_cast<int>(votes(i, j));
    }
    out << '\n';
  }
}

PointSet read_points_csv(std::istream& in) {
  PointSet pts;
  std::vector<double> row;
  for_each_row(in, false, [&](const auto& fields, std::size_t line) {
    row.clear();
    for (auto f : fields) row.push_back(parse_field<double>(f, line));
    if (pts.size() > 0 && row.size() != pts.dim()) {
      throw ParseError(line, "point has " + std::to_string(row.size()) + " coordinates, expected " +
                                 std::to_string(pts.dim()));
    }
    pts.add(row);
  });
  return pts;
}

void write_points_csv(std::ostream& out, const PointSet& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.point(i);
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c) out << ',';
      write_real(out, p[c]);
    }
    out << '\n';
  }
}

std::vector<int> read_labels_csv(std::istream& in) {
  std::vector<int> labels;
  for_each_row(in, false, [&](const auto& fields, std::size_t line) {
    if (fields.size() != 1) throw ParseError(line, "expected one label per line");
    labels.push_back(parse_field<int>(fields[0], line));
  });
  return labels;
}

void write_labels_csv(std::ostream& out, const std::vector<int>& labels) {
  for (int l : labels) out << l << '\n';
}

void write_edge_list_csv(std::ostream& out, const FrequencyGraph& g) {
  for (const auto& e : g.edges()) out << e.u << ',' << e.v << ',' << e.freq << '\n';
}

nlohmann::json classification_to_json(const Classification& c) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& cls : c.classes()) j.push_back(cls);
  return j;
}

Classification classification_from_json(const nlohmann::json& j, std::size_t object_count) {
  if (!j.is_array()) throw ParseError(0, "classification must be an array of classes");
  std::vector<VertexSet> classes;
  for (const auto& cls : j) {
    if (!cls.is_array()) throw ParseError(0, "class must be an array of object ids");
    auto& out = classes.emplace_back();
    for (const auto& v : cls) {
      if (!v.is_number_integer()) throw ParseError(0, "object id must be an integer");
      out.push_back(v.get<Vertex>());
    }
  }
  return Classification(std::move(classes), object_count);
}

nlohmann::json classifications_to_json(const std::vector<Classification>& list) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : list) j.push_back(classification_to_json(c));
  return j;
}

std::vector<Classification> classifications_from_json(const nlohmann::json& j,
                                                      std::size_t object_count) {
  if (!j.is_array()) throw ParseError(0, "expected an array of classifications");
  std::vector<Classification> out;
  for (const auto& c : j) out.push_back(classification_from_json(c, object_count));
  return out;
}

nlohmann::ordered_json solution_to_json(const SolutionSet& s) {
  nlohmann::ordered_json j;
  j["k"] = s.dichotomies;
  j["r"] = s.runs;
  j["T"] = s.paths;
  j["seed"] = s.seed;
  j["complexity"] = s.complexity;
  j["distinct"] = nlohmann::ordered_json::array();
  for (const auto& d : s.distinct) {
    nlohmann::ordered_json item;
    item["classes"] = d.classification.classes();
    item["multiplicity"] = d.multiplicity;
    item["stability"] = d.stability;
    item["degenerate"] = is_degenerate(d.classification);
    item["uniformity"] = uniformity(d.classification);
    item["num_classes"] = d.classification.num_classes();
    j["distinct"].push_back(std::move(item));
  }
  return j;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace acdaa
