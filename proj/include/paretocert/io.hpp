#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "paretocert/corpus.hpp"
#include "paretocert/efficiency.hpp"

namespace paretocert {

using Json = nlohmann::json;

enum class InputFormat { Auto, Csv, Json };

struct IngestResult {
  PointCloud cloud;
  std::vector<std::string> warnings;  // e.g. merged duplicate rows
};

/// CSV: header y1,...,yL[,label], one point per following row.
IngestResult ingest_csv(std::istream& in, Tolerance tol);

/// JSON: {"ell": L, "points": [[...], ...], "labels": [...]} (labels optional).
IngestResult ingest_json(std::istream& in, Tolerance tol);

IngestResult ingest_file(const std::string& path, InputFormat format, Tolerance tol);

std::string emit_csv(const PointCloud& cloud);
Json cloud_to_json(const PointCloud& cloud);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json instance_spec_to_json(const InstanceSpec& spec);
InstanceSpec instance_spec_from_json(const Json& j);
InstanceSpec::Kind kind_from_string(const std::string& name);
RandomDistribution distribution_from_string(const std::string& name);

enum class AnalysisMode { Min, WMin, GMin, Certify, Benson, Existence };

AnalysisMode mode_from_string(const std::string& name);
std::string mode_to_string(AnalysisMode mode);

struct AnalysisOptions {
  AnalysisMode mode = AnalysisMode::GMin;
  Tolerance tol;
  std::uint64_t seed = 0;
  Vec direction;                     // defaults to all-ones
  std::optional<double> cone_weight; // run min/wmin against a sum-weighted cone
  std::optional<Vec> reference;      // existence mode reference point
  std::string input_name;            // echoed into the report
};

/// Versioned report (schema report_v1). Deterministic for fixed inputs, seed
/// and options: keys are ordered and no environment data is embedded.
Json analyze(const PointCloud& cloud, const AnalysisOptions& options);

std::string report_to_string(const Json& report);

/// Two-dimensional plot table: y1,y2,class plus the two boundary rays of each
/// certified point's enclosing cone, for external plotting.
std::string plot_data_csv(const PointCloud& cloud, const Json& report, Tolerance tol);

}  // namespace paretocert
