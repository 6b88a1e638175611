// acdaa: automatic classification of a dissimilarity matrix by repeated
// divisive-agglomerative runs over a neighborhood graph.
//
//   acdaa classify --input votes.csv --format votes -k 10 -r 10 --seed 7
//   acdaa sweep --input votes.csv --format votes --k-range 5:10 --r-range 5:10
//   acdaa compare-kmeans --input votes.csv --format votes --clusters 4 --restarts 5
//   acdaa gen --shape planted-votes:450,250,4,0.05 --seed 1 --out duma

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "acdaa/ensemble.hpp"
#include "acdaa/errors.hpp"
#include "acdaa/io.hpp"
#include "acdaa/kmeans.hpp"
#include "acdaa/metrics.hpp"
#include "acdaa/synthetic.hpp"

namespace {

using namespace acdaa;

struct InputArgs {
  std::string path;
  std::string format = "dissimilarity";
  bool header = false;
};

struct Loaded {
  DissimilarityMatrix dissimilarity;
  std::optional<PointSet> vectors;
};

Loaded load_input(const InputArgs& args) {
  auto in = open_input(args.path);
  if (args.format == "votes") {
    const VoteMatrix votes = read_votes_csv(in, args.header);
    return {votes_to_dissimilarity(votes), votes_as_points(votes)};
  }
  if (args.format == "points") {
    PointSet pts = read_points_csv(in);
    return {points_to_dissimilarity(pts), std::move(pts)};
  }
  return {read_dissimilarity_csv(in), std::nullopt};
}

void add_input_options(CLI::App* cmd, InputArgs& args) {
  cmd->add_option("--input", args.path, "Input CSV file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--format", args.format, "Input format")
      ->check(CLI::IsMember({"dissimilarity", "votes", "points"}))
      ->capture_default_str();
  cmd->add_flag("--header", args.header, "Skip the first line of a vote CSV");
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device entropy;
  const std::uint64_t s = (static_cast<std::uint64_t>(entropy()) << 32) ^ entropy();
  std::cerr << "seed: " << s << '\n';
  return s;
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string profile_text(const Classification& c) {
  std::string out;
  for (std::size_t s : size_profile(c)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s);
  }
  return out;
}

struct SummaryFilter {
  bool non_degenerate = false;
  std::size_t min_classes = 0;
  std::size_t max_classes = 0;
  double max_uniformity = 0.0;
};

void print_summary(std::ostream& out, const SolutionSet& s, const SummaryFilter& filter) {
  out << "objects " << (s.distinct.empty() ? 0 : s.distinct.front().classification.object_count())
      << "  k " << s.dichotomies << "  r " << s.runs << "  T " << s.paths << '\n';
  out << "complexity " << fixed6(s.complexity) << "  (" << s.distinct.size() << " distinct of "
      << max_classifications(s.dichotomies, s.runs) << ")\n";
  if (s.padded) out << "note: some runs ran out of splittable classes; entries were padded\n";
  out << std::setw(4) << "id" << std::setw(9) << "classes" << std::setw(7) << "mult"
      << std::setw(11) << "stability" << std::setw(6) << "deg" << "  sizes\n";
  for (std::size_t i = 0; i < s.distinct.size(); ++i) {
    const auto& d = s.distinct[i];
    const auto& c = d.classification;
    const bool degenerate = is_degenerate(c);
    if (filter.non_degenerate && degenerate) continue;
    if (filter.min_classes && c.num_classes() < filter.min_classes) continue;
    if (filter.max_classes && c.num_classes() > filter.max_classes) continue;
    if (filter.max_uniformity > 0.0 && uniformity(c) > filter.max_uniformity) continue;
    out << std::setw(4) << i << std::setw(9) << c.num_classes() << std::setw(7) << d.multiplicity
        << std::setw(11) << fixed6(d.stability) << std::setw(6) << (degenerate ? "yes" : "no")
        << "  " << profile_text(c) << '\n';
  }
}

std::vector<int> parse_range(const std::string& text, const char* what) {
  int lo = 0;
  int hi = 0;
  const auto colon = text.find(':');
  try {
    lo = std::stoi(text.substr(0, colon));
    hi = colon == std::string::npos ? lo : std::stoi(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw InvalidInput(std::string("bad ") + what + " range '" + text + "'");
  }
  if (lo < 1 || hi < lo) throw InvalidInput(std::string("bad ") + what + " range '" + text + "'");
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automatic classification by frequency minimax dichotomies"};
  app.require_subcommand(1);

  InputArgs input;
  RunOptions run;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  bool json = false;

  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("-k", run.dichotomies, "Dichotomies per run")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("-r", run.runs, "Number of runs")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("-T", run.paths, "Accumulated paths per dichotomy")->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Master seed (default: entropy, logged to stderr)");
    cmd->add_option("--neighbors", run.neighbors, "Nearest neighbors per object")
        ->check(CLI::PositiveNumber)->capture_default_str();
  };

  // classify
  auto* classify = app.add_subcommand("classify", "Run the full pipeline and list distinct classifications");
  add_input_options(classify, input);
  add_run_options(classify);
  classify->add_option("--out", out_path, "Write the solution set JSON here");
  classify->add_flag("--json", json, "Print the solution set JSON instead of the table");
  std::string edges_path;
  classify->add_option("--edges", edges_path, "Write the neighborhood graph edge list (u,v,freq)");
  SummaryFilter filter;
  classify->add_flag("--non-degenerate", filter.non_degenerate, "Hide classifications with classes of size <= 2");
  classify->add_option("--min-classes", filter.min_classes, "Hide classifications with fewer classes");
  classify->add_option("--max-classes", filter.max_classes, "Hide classifications with more classes");
  classify->add_option("--max-uniformity", filter.max_uniformity, "Hide classifications less uniform than this");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Complexity grid over ranges of k and r");
  add_input_options(sweep, input);
  add_run_options(sweep);
  std::string k_range = "5:10";
  std::string r_range = "5:10";
  sweep->add_option("--k-range", k_range, "Dichotomy counts lo:hi")->capture_default_str();
  sweep->add_option("--r-range", r_range, "Run counts lo:hi")->capture_default_str();
  sweep->add_option("--out", out_path, "Write the grid CSV here instead of stdout");

  // compare-kmeans
  auto* compare = app.add_subcommand("compare-kmeans", "Compare stability against k-means restarts");
  add_input_options(compare, input);
  add_run_options(compare);
  int clusters = 4;
  int restarts = 5;
  compare->add_option("-K,--clusters", clusters, "k-means cluster count")->check(CLI::PositiveNumber)
      ->capture_default_str();
  compare->add_option("--restarts", restarts, "k-means restarts (and pipeline runs)")
      ->check(CLI::PositiveNumber)->capture_default_str();
  compare->add_flag("--json", json, "Print a JSON report");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a synthetic dataset with planted labels");
  std::string shape;
  gen->add_option("--shape", shape,
                  "two-blobs[:n1,n2,sep] | blob-plus-ring[:blob,ring,radius] | "
                  "two-rings-plus-blob[:inner,blob,outer] | planted-votes[:m,n,factions,noise]")
      ->required();
  gen->add_option("--seed", seed, "Generator seed (default: entropy, logged to stderr)");
  gen->add_option("--out", out_path, "Output prefix: <out>.csv and <out>_labels.csv")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify) {
      run.seed = resolve_seed(seed);
      const Loaded data = load_input(input);
      if (!edges_path.empty()) {
        auto out = open_output(edges_path);
        write_edge_list_csv(out, prepare_graph(data.dissimilarity, run.neighbors));
      }
      const SolutionSet s = run_external(data.dissimilarity, run);
      const auto j = solution_to_json(s);
      if (!out_path.empty()) {
        auto out = open_output(out_path);
        out << j.dump(2) << '\n';
      }
      if (json) {
        std::cout << j.dump(2) << '\n';
      } else {
        print_summary(std::cout, s, filter);
      }
    } else if (*sweep) {
      run.seed = resolve_seed(seed);
      const auto ks = parse_range(k_range, "k");
      const auto rs = parse_range(r_range, "r");
      const Loaded data = load_input(input);
      run.dichotomies = ks.back();
      run.runs = rs.back();
      const FrequencyGraph g = prepare_graph(data.dissimilarity, run.neighbors);
      const auto families = run_families(g, data.dissimilarity, run);
      const SweepGrid grid = complexity_sweep(families, rs, ks);
      std::ostringstream csv;
      csv << "r\\k";
      for (int k : grid.dichotomy_values) csv << ',' << k;
      csv << '\n';
      for (std::size_t i = 0; i < grid.run_values.size(); ++i) {
        csv << grid.run_values[i];
        for (double v : grid.cells[i]) csv << ',' << fixed6(v);
        csv << '\n';
      }
      if (out_path.empty()) {
        std::cout << csv.str();
      } else {
        auto out = open_output(out_path);
        out << csv.str();
      }
    } else if (*compare) {
      run.seed = resolve_seed(seed);
      const Loaded data = load_input(input);
      if (!data.vectors) throw InvalidInput("compare-kmeans needs vector input (votes or points)");
      const auto report = compare_with_kmeans(*data.vectors, data.dissimilarity, clusters, restarts, run);
      if (json) {
        nlohmann::ordered_json j;
        j["clusters"] = clusters;
        j["restarts"] = restarts;
        j["kmeans"]["concordance"] = report.kmeans_concordance;
        for (const auto& c : report.kmeans_results) j["kmeans"]["profiles"].push_back(size_profile(c));
        if (report.main_concordance) {
          j["main"]["concordance"] = *report.main_concordance;
          j["main"]["profile"] = size_profile(report.solution.distinct[*report.best_distinct].classification);
        } else {
          j["main"]["concordance"] = nullptr;
        }
        j["main"]["complexity"] = report.solution.complexity;
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "k-means, " << clusters << " clusters, " << restarts << " restarts\n";
        for (std::size_t i = 0; i < report.kmeans_results.size(); ++i) {
          std::cout << "  classification " << i + 1 << ": " << profile_text(report.kmeans_results[i]) << '\n';
        }
        std::cout << "  concordance " << fixed6(report.kmeans_concordance) << '\n';
        std::cout << "main algorithm, k " << report.solution.dichotomies << ", r " << report.solution.runs
                  << ", complexity " << fixed6(report.solution.complexity) << '\n';
        if (report.main_concordance) {
          std::cout << "  best " << clusters << "-class classification: "
                    << profile_text(report.solution.distinct[*report.best_distinct].classification) << '\n';
          std::cout << "  concordance " << fixed6(*report.main_concordance) << '\n';
        } else {
          std::cout << "  no " << clusters << "-class classification found\n";
        }
      }
    } else if (*gen) {
      const SyntheticData data = generate_synthetic(parse_shape(shape), resolve_seed(seed));
      auto out = open_output(out_path + ".csv");
      if (const auto* votes = std::get_if<VoteMatrix>(&data.data)) {
        write_votes_csv(out, *votes);
      } else {
        write_points_csv(out, std::get<PointSet>(data.data));
      }
      auto labels = open_output(out_path + "_labels.csv");
      write_labels_csv(labels, data.labels);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
