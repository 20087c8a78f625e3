// Command-line front end: ingest point clouds, run an analysis mode, emit the
// versioned JSON report, generate fixture clouds, and export plot tables.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "paretocert/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitVerificationError = 3;

paretocert::Vec parse_vec(const std::string& text) {
  paretocert::Vec out;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size())
      throw std::invalid_argument("not a comma-separated number list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty vector argument");
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << content;
}

struct AnalyzeArgs {
  std::string input;
  std::string format = "auto";
  std::string mode = "gmin";
  std::string out;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string direction;
  double cone_weight = 0.0;
  bool has_cone_weight = false;
  std::string reference;
};

int run_analyze(const AnalyzeArgs& args) {
  using namespace paretocert;
  const Tolerance tol(args.tol);
  InputFormat format = InputFormat::Auto;
  if (args.format == "csv") format = InputFormat::Csv;
  else if (args.format == "json") format = InputFormat::Json;
  else if (args.format != "auto") throw std::invalid_argument("unknown format: " + args.format);

  const IngestResult ingested = ingest_file(args.input, format, tol);
  for (const std::string& warning : ingested.warnings) std::cerr << "warning: " << warning << "\n";

  AnalysisOptions options;
  options.mode = mode_from_string(args.mode);
  options.tol = tol;
  options.seed = args.seed;
  options.input_name = args.input;
  if (!args.direction.empty()) options.direction = parse_vec(args.direction);
  if (args.has_cone_weight) options.cone_weight = args.cone_weight;
  if (!args.reference.empty()) options.reference = parse_vec(args.reference);

  const Json report = analyze(ingested.cloud, options);
  write_file(args.out, report_to_string(report));

  for (const auto& [name, check] : report.at("cross_checks").items())
    if (!check.at("pass").get<bool>())
      throw VerificationError("cross check failed: " + name);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Efficient, weakly efficient and properly efficient point sets with verifiable certificates"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze a point cloud and emit a report");
  analyze_cmd->add_option("--input", analyze_args.input, "Input cloud (CSV or JSON)")->required();
  analyze_cmd->add_option("--format", analyze_args.format, "Input format: auto|csv|json");
  analyze_cmd->add_option("--mode", analyze_args.mode,
                          "Analysis mode: min|wmin|gmin|certify|benson|existence");
  analyze_cmd->add_option("--out", analyze_args.out, "Report path (default: stdout)");
  analyze_cmd->add_option("--tol", analyze_args.tol, "Slack threshold tau");
  analyze_cmd->add_option("--seed", analyze_args.seed, "Seed echoed into the report");
  analyze_cmd->add_option("--k", analyze_args.direction,
                          "Scalarizer direction, comma separated (default: all ones)");
  CLI::Option* weight_opt = analyze_cmd->add_option(
      "--p", analyze_args.cone_weight, "Sum-weighted cone parameter for min/wmin modes");
  analyze_cmd->add_option("--u", analyze_args.reference,
                          "Reference point for existence mode, comma separated");

  struct GenArgs {
    std::string kind = "random";
    std::string out;
    double range = 10.0;
    double step = 0.05;
    std::size_t count = 31;
    std::size_t ell = 2;
    std::uint64_t seed = 0;
    std::string distribution = "gaussian";
    double tol = 1e-9;
  } gen_args;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Instance generators");
  CLI::App* gen_cmd = corpus_cmd->add_subcommand("gen", "Generate a fixture cloud as CSV");
  gen_cmd->add_option("--kind", gen_args.kind, "hyperbola|two-boxes|sqrt-notch|random");
  gen_cmd->add_option("--out", gen_args.out, "Output CSV path (default: stdout)");
  gen_cmd->add_option("--range", gen_args.range, "Hyperbola range bound");
  gen_cmd->add_option("--step", gen_args.step, "Grid step for box fixtures");
  gen_cmd->add_option("--n", gen_args.count, "Sample count");
  gen_cmd->add_option("--ell", gen_args.ell, "Dimension (random kind)");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed (random kind)");
  gen_cmd->add_option("--dist", gen_args.distribution, "sphere-shell|gaussian|convex-frontier");
  gen_cmd->add_option("--tol", gen_args.tol, "Slack threshold tau");

  struct PlotArgs {
    std::string input;
    std::string report;
    std::string out;
    std::string format = "auto";
    double tol = 1e-9;
  } plot_args;
  CLI::App* plot_cmd = app.add_subcommand("plot-data", "Export a 2-D classification table");
  plot_cmd->add_option("--input", plot_args.input, "Input cloud (CSV or JSON)")->required();
  plot_cmd->add_option("--report", plot_args.report, "Report JSON produced by analyze");
  plot_cmd->add_option("--out", plot_args.out, "Output CSV path (default: stdout)");
  plot_cmd->add_option("--format", plot_args.format, "Input format: auto|csv|json");
  plot_cmd->add_option("--tol", plot_args.tol, "Slack threshold tau");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) {
      analyze_args.has_cone_weight = weight_opt->count() > 0;
      return run_analyze(analyze_args);
    }
    if (gen_cmd->parsed()) {
      using namespace paretocert;
      InstanceSpec spec;
      spec.kind = kind_from_string(gen_args.kind);
      spec.range = gen_args.range;
      spec.step = gen_args.step;
      spec.count = gen_args.count;
      spec.ell = gen_args.ell;
      spec.seed = gen_args.seed;
      spec.distribution = distribution_from_string(gen_args.distribution);
      const PointCloud cloud = generate(spec, Tolerance(gen_args.tol));
      write_file(gen_args.out, emit_csv(cloud));
      return kExitOk;
    }
    if (plot_cmd->parsed()) {
      using namespace paretocert;
      const Tolerance tol(plot_args.tol);
      InputFormat format = InputFormat::Auto;
      if (plot_args.format == "csv") format = InputFormat::Csv;
      else if (plot_args.format == "json") format = InputFormat::Json;
      const IngestResult ingested = ingest_file(plot_args.input, format, tol);
      Json report = Json::object();
      if (!plot_args.report.empty()) {
        std::ifstream in(plot_args.report);
        if (!in) throw std::invalid_argument("cannot open report file: " + plot_args.report);
        in >> report;
      }
      write_file(plot_args.out, plot_data_csv(ingested.cloud, report, tol));
      return kExitOk;
    }
  } catch (const paretocert::VerificationError& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitVerificationError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
