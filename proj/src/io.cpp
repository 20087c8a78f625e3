#include "paretocert/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "paretocert/scalarize.hpp"

namespace paretocert {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == sep) cells.push_back("");
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line_no) {
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size())
    throw std::invalid_argument("line " + std::to_string(line_no) + ": non-numeric cell '" + cell +
                                "'");
  return v;
}

}  // namespace

IngestResult ingest_csv(std::istream& in, Tolerance tol) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("line 1: empty input");
  const std::vector<std::string> header = split(line, ',');
  bool has_label = !header.empty() && header.back() == "label";
  const std::size_t ell = header.size() - (has_label ? 1 : 0);
  if (ell < 2)
    throw std::invalid_argument("line 1: need at least two outcome columns (header y1,...,yL[,label])");
  for (std::size_t c = 0; c < ell; ++c)
    if (header[c] != "y" + std::to_string(c + 1))
      throw std::invalid_argument("line 1: header must be y1,...,yL[,label], got '" + header[c] +
                                  "' in column " + std::to_string(c + 1));

  Matrix points;
  std::vector<std::string> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split(line, ',');
    if (cells.size() != header.size())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(header.size()) + " cells, got " +
                                  std::to_string(cells.size()));
    Vec y(ell);
    for (std::size_t c = 0; c < ell; ++c) y[c] = parse_cell(cells[c], line_no);
    if (!all_finite(y))
      throw std::invalid_argument("line " + std::to_string(line_no) + ": non-finite coordinate");
    points.push_back(std::move(y));
    if (has_label) labels.push_back(cells[ell]);
  }
  if (points.empty()) throw std::invalid_argument("no data rows");

  IngestResult result{PointCloud::from_points(std::move(points), tol, std::move(labels)), {}};
  if (result.cloud.merged_count() > 0)
    result.warnings.push_back("merged " + std::to_string(result.cloud.merged_count()) +
                              " duplicate row(s) within tolerance");
  return result;
}

IngestResult ingest_json(std::istream& in, Tolerance tol) {
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  if (!j.contains("ell") || !j.contains("points"))
    throw std::invalid_argument("JSON input requires 'ell' and 'points'");
  const auto ell = j.at("ell").get<std::size_t>();
  if (ell < 2) throw std::invalid_argument("JSON input: ell must be >= 2");
  Matrix points;
  for (const Json& row : j.at("points")) {
    if (!row.is_array() || row.size() != ell)
      throw std::invalid_argument("JSON input: point row " + std::to_string(points.size() + 1) +
                                  " does not have ell entries");
    Vec y;
    for (const Json& cell : row) y.push_back(cell.get<double>());
    points.push_back(std::move(y));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();

  IngestResult result{PointCloud::from_points(std::move(points), tol, std::move(labels)), {}};
  if (result.cloud.merged_count() > 0)
    result.warnings.push_back("merged " + std::to_string(result.cloud.merged_count()) +
                              " duplicate row(s) within tolerance");
  return result;
}

IngestResult ingest_file(const std::string& path, InputFormat format, Tolerance tol) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  if (format == InputFormat::Auto) {
    format = InputFormat::Csv;
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") format = InputFormat::Json;
  }
  return format == InputFormat::Csv ? ingest_csv(in, tol) : ingest_json(in, tol);
}

std::string emit_csv(const PointCloud& cloud) {
  std::string out;
  const bool has_label = !cloud.labels().empty();
  for (std::size_t c = 0; c < cloud.dim(); ++c) {
    if (c) out += ',';
    out += "y" + std::to_string(c + 1);
  }
  if (has_label) out += ",label";
  out += '\n';
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    for (std::size_t c = 0; c < cloud.dim(); ++c) {
      if (c) out += ',';
      out += fmt_double(cloud.point(i)[c]);
    }
    if (has_label) out += "," + cloud.labels()[i];
    out += '\n';
  }
  return out;
}

Json cloud_to_json(const PointCloud& cloud) {
  Json j;
  j["ell"] = cloud.dim();
  j["points"] = cloud.points();
  if (!cloud.labels().empty()) j["labels"] = cloud.labels();
  return j;
}

namespace {

std::string family_to_string(ConeParam::Family family) {
  switch (family) {
    case ConeParam::Family::SumWeighted:
      return "sum_weighted";
    case ConeParam::Family::LinearForm:
      return "linear_form";
    case ConeParam::Family::WeightedForm:
      return "weighted_form";
  }
  return "unknown";
}

ConeParam::Family family_from_string(const std::string& name) {
  if (name == "sum_weighted") return ConeParam::Family::SumWeighted;
  if (name == "linear_form") return ConeParam::Family::LinearForm;
  if (name == "weighted_form") return ConeParam::Family::WeightedForm;
  throw std::invalid_argument("unknown cone family: " + name);
}

}  // namespace

Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["index"] = cert.index;
  if (!cert.label.empty()) j["label"] = cert.label;
  j["k_star_finite"] = cert.tradeoff_finite;
  if (cert.tradeoff_finite) j["k_star"] = cert.tradeoff;
  if (cert.cone_param) {
    Json p;
    p["family"] = family_to_string(cert.cone_param->family);
    p["value"] = cert.cone_param->value;
    if (!cert.cone_param->base.empty()) p["base"] = cert.cone_param->base;
    j["cone_param"] = p;
  }
  if (cert.sum_form) {
    Json f;
    f["type"] = "sum_form";
    f["bound"] = cert.sum_form->bound;
    f["direction"] = cert.sum_form->direction;
    j["functional"] = f;
  } else if (cert.point_form) {
    Json f;
    f["type"] = "form";
    f["rows"] = cert.point_form->rows;
    f["offsets"] = cert.point_form->offsets;
    f["anchor"] = cert.point_form->anchor;
    f["direction"] = cert.point_form->direction;
    j["functional"] = f;
  }
  j["verified_min"] = cert.verified_min;
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate cert;
  cert.index = j.at("index").get<std::size_t>();
  if (j.contains("label")) cert.label = j.at("label").get<std::string>();
  cert.tradeoff_finite = j.at("k_star_finite").get<bool>();
  cert.tradeoff = cert.tradeoff_finite ? j.at("k_star").get<double>() : 0.0;
  if (j.contains("cone_param")) {
    const Json& p = j.at("cone_param");
    ConeParam param;
    param.family = family_from_string(p.at("family").get<std::string>());
    param.value = p.at("value").get<double>();
    if (p.contains("base")) param.base = p.at("base").get<Vec>();
    cert.cone_param = param;
  }
  if (j.contains("functional")) {
    const Json& f = j.at("functional");
    const Tolerance tol;
    if (f.at("type") == "sum_form") {
      const Vec direction = f.at("direction").get<Vec>();
      cert.sum_form =
          make_sum_form(f.at("bound").get<double>(), direction, direction.size(), tol);
    } else {
      cert.point_form = make_form(f.at("rows").get<Matrix>(), f.at("offsets").get<Vec>(),
                                  f.at("anchor").get<Vec>(), f.at("direction").get<Vec>(), tol);
    }
  }
  cert.verified_min = j.at("verified_min").get<double>();
  return cert;
}

namespace {

std::string kind_to_string(InstanceSpec::Kind kind) {
  switch (kind) {
    case InstanceSpec::Kind::Hyperbola:
      return "hyperbola";
    case InstanceSpec::Kind::TwoBoxes:
      return "two-boxes";
    case InstanceSpec::Kind::SqrtNotch:
      return "sqrt-notch";
    case InstanceSpec::Kind::Random:
      return "random";
  }
  return "unknown";
}

std::string distribution_to_string(RandomDistribution d) {
  switch (d) {
    case RandomDistribution::SphereShell:
      return "sphere-shell";
    case RandomDistribution::Gaussian:
      return "gaussian";
    case RandomDistribution::ConvexFrontier:
      return "convex-frontier";
  }
  return "unknown";
}

}  // namespace

InstanceSpec::Kind kind_from_string(const std::string& name) {
  if (name == "hyperbola") return InstanceSpec::Kind::Hyperbola;
  if (name == "two-boxes") return InstanceSpec::Kind::TwoBoxes;
  if (name == "sqrt-notch") return InstanceSpec::Kind::SqrtNotch;
  if (name == "random") return InstanceSpec::Kind::Random;
  throw std::invalid_argument("unknown instance kind: " + name);
}

RandomDistribution distribution_from_string(const std::string& name) {
  if (name == "sphere-shell") return RandomDistribution::SphereShell;
  if (name == "gaussian") return RandomDistribution::Gaussian;
  if (name == "convex-frontier") return RandomDistribution::ConvexFrontier;
  throw std::invalid_argument("unknown distribution: " + name);
}

Json instance_spec_to_json(const InstanceSpec& spec) {
  Json j;
  j["kind"] = kind_to_string(spec.kind);
  j["range"] = spec.range;
  j["step"] = spec.step;
  j["count"] = spec.count;
  j["ell"] = spec.ell;
  j["seed"] = spec.seed;
  j["distribution"] = distribution_to_string(spec.distribution);
  return j;
}

InstanceSpec instance_spec_from_json(const Json& j) {
  InstanceSpec spec;
  spec.kind = kind_from_string(j.at("kind").get<std::string>());
  if (j.contains("range")) spec.range = j.at("range").get<double>();
  if (j.contains("step")) spec.step = j.at("step").get<double>();
  if (j.contains("count")) spec.count = j.at("count").get<std::size_t>();
  if (j.contains("ell")) spec.ell = j.at("ell").get<std::size_t>();
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("distribution"))
    spec.distribution = distribution_from_string(j.at("distribution").get<std::string>());
  return spec;
}

AnalysisMode mode_from_string(const std::string& name) {
  if (name == "min") return AnalysisMode::Min;
  if (name == "wmin") return AnalysisMode::WMin;
  if (name == "gmin") return AnalysisMode::GMin;
  if (name == "certify") return AnalysisMode::Certify;
  if (name == "benson") return AnalysisMode::Benson;
  if (name == "existence") return AnalysisMode::Existence;
  throw std::invalid_argument("unknown mode: " + name);
}

std::string mode_to_string(AnalysisMode mode) {
  switch (mode) {
    case AnalysisMode::Min:
      return "min";
    case AnalysisMode::WMin:
      return "wmin";
    case AnalysisMode::GMin:
      return "gmin";
    case AnalysisMode::Certify:
      return "certify";
    case AnalysisMode::Benson:
      return "benson";
    case AnalysisMode::Existence:
      return "existence";
  }
  return "unknown";
}

namespace {

Json cross_check(bool pass, const std::string& details) {
  Json j;
  j["pass"] = pass;
  j["details"] = details;
  return j;
}

bool same_index_set(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool subset_of(const std::vector<std::size_t>& inner, const std::vector<std::size_t>& outer) {
  for (std::size_t i : inner)
    if (std::find(outer.begin(), outer.end(), i) == outer.end()) return false;
  return true;
}

}  // namespace

Json analyze(const PointCloud& cloud, const AnalysisOptions& options) {
  const Tolerance tol = options.tol;
  Vec direction = options.direction;
  if (direction.empty()) direction.assign(cloud.dim(), 1.0);
  require_point(direction, cloud.dim(), "analyze(direction)");

  Json report;
  report["schema"] = "report_v1";
  report["version"] = kVersion;
  report["mode"] = mode_to_string(options.mode);
  report["tol"] = tol.tau;
  report["seed"] = options.seed;

  Json opts;
  opts["mode"] = mode_to_string(options.mode);
  opts["tol"] = tol.tau;
  opts["seed"] = options.seed;
  opts["direction"] = direction;
  opts["cone_weight"] = options.cone_weight ? Json(*options.cone_weight) : Json(nullptr);
  opts["reference"] = options.reference ? Json(*options.reference) : Json(nullptr);
  opts["input"] = options.input_name;
  report["options"] = opts;

  std::vector<std::size_t> indices;
  Json certificates = Json::array();
  Json cross = Json::object();

  switch (options.mode) {
    case AnalysisMode::Min: {
      const DominationOracle oracle =
          options.cone_weight
              ? DominationOracle::cone_closed(make_sum_weighted_cone(*options.cone_weight, cloud.dim()))
              : DominationOracle::orthant_closed(cloud.dim());
      indices = min_set(cloud, oracle, tol);
      break;
    }
    case AnalysisMode::WMin: {
      const DominationOracle open_oracle =
          options.cone_weight
              ? DominationOracle::cone_open(make_sum_weighted_cone(*options.cone_weight, cloud.dim()))
              : DominationOracle::orthant_open(cloud.dim());
      indices = min_set(cloud, open_oracle, tol);
      const DominationOracle closed_oracle =
          options.cone_weight
              ? DominationOracle::cone_closed(make_sum_weighted_cone(*options.cone_weight, cloud.dim()))
              : DominationOracle::orthant_closed(cloud.dim());
      const std::vector<std::size_t> closed = min_set(cloud, closed_oracle, tol);
      cross["wmin_superset_min"] = cross_check(
          subset_of(closed, indices),
          std::to_string(closed.size()) + " efficient of " + std::to_string(indices.size()) +
              " weakly efficient");
      break;
    }
    case AnalysisMode::GMin:
    case AnalysisMode::Certify: {
      const std::vector<GminEntry> entries = geoffrion_min_set(cloud, tol);
      for (const GminEntry& e : entries) indices.push_back(e.index);
      const std::vector<std::size_t> pareto =
          min_set(cloud, DominationOracle::orthant_closed(cloud.dim()), tol);
      cross["gmin_equals_min"] =
          cross_check(same_index_set(indices, pareto),
                      std::to_string(indices.size()) + " properly efficient, " +
                          std::to_string(pareto.size()) + " efficient");
      if (options.mode == AnalysisMode::GMin) {
        for (const GminEntry& e : entries) {
          Certificate cert;
          cert.index = e.index;
          if (!cloud.labels().empty()) cert.label = cloud.labels()[e.index];
          cert.tradeoff_finite = true;
          cert.tradeoff = e.tradeoff;
          certificates.push_back(certificate_to_json(cert));
        }
      } else {
        bool all_zero = true;
        bool all_unique = true;
        for (const GminEntry& e : entries) {
          Certificate cert = build_proper_functional(cloud, e.index, direction, tol);
          const Certificate enclosing = henig_certificate(cloud, e.index, tol);
          cert.cone_param = enclosing.cone_param;
          all_zero = all_zero && std::abs(cert.verified_min) <= tol.tau;
          const Vec& base = cloud.point(e.index);
          const SumForm& form = *cert.sum_form;
          const std::vector<std::size_t> argmin = argmin_scan(
              cloud,
              [&](const Vec& y) {
                Vec diff(y.size());
                for (std::size_t r = 0; r < y.size(); ++r) diff[r] = y[r] - base[r];
                return eval_sum(form, diff);
              },
              tol);
          all_unique = all_unique && argmin.size() == 1 && argmin.front() == e.index;
          certificates.push_back(certificate_to_json(cert));
        }
        cross["verified_min_zero"] =
            cross_check(all_zero, "all certificate minima within tolerance of zero");
        cross["unique_argmin"] =
            cross_check(all_unique, "each certified functional has a unique minimizer");
      }
      break;
    }
    case AnalysisMode::Benson: {
      std::vector<std::size_t> proper;
      for (const GminEntry& e : geoffrion_min_set(cloud, tol)) proper.push_back(e.index);
      for (std::size_t i = 0; i < cloud.size(); ++i)
        if (benson_check(cloud, i, tol)) indices.push_back(i);
      cross["benson_matches_tradeoff"] =
          cross_check(same_index_set(indices, proper),
                      "projecting-cone criterion against finite trade-off constants");
      break;
    }
    case AnalysisMode::Existence: {
      if (!options.reference)
        throw std::invalid_argument("existence mode requires a reference point (--u)");
      const Vec ones(cloud.dim(), 1.0);
      const ExistenceEquivalence eq =
          existence_equivalence(cloud, *options.reference, ones, ones, 1.0, tol);
      Json details;
      details["exists"] = eq.exists;
      details["bound_used"] = eq.bound_used;
      details["via_union"] = eq.via_union;
      details["via_sum_weighted"] = eq.via_sum_weighted;
      details["via_linear_form"] = eq.via_linear_form;
      details["via_weighted_form"] = eq.via_weighted_form;
      cross["existence_equivalent"] = cross_check(eq.consistent(), details.dump());
      break;
    }
  }

  report["indices"] = indices;
  report["certificates"] = certificates;
  report["cross_checks"] = cross;
  return report;
}

std::string report_to_string(const Json& report) { return report.dump(2) + "\n"; }

namespace {

// Boundary rays of the negated enclosing cone in 2-D, drawn from the point.
std::pair<Vec, Vec> negated_cone_rays(double weight) {
  const Matrix rows = {{weight, 1.0}, {1.0, weight}};
  std::pair<Vec, Vec> rays;
  for (std::size_t face = 0; face < 2; ++face) {
    Vec tangent = {rows[face][1], -rows[face][0]};
    const Vec& other = rows[1 - face];
    const double side = other[0] * tangent[0] + other[1] * tangent[1];
    if (side < 0.0 || (side == 0.0 && face == 1)) {
      tangent[0] = -tangent[0];
      tangent[1] = -tangent[1];
    }
    const double scale = norm2(tangent);
    Vec ray = {-tangent[0] / scale, -tangent[1] / scale};
    (face == 0 ? rays.first : rays.second) = std::move(ray);
  }
  return rays;
}

}  // namespace

std::string plot_data_csv(const PointCloud& cloud, const Json& report, Tolerance tol) {
  if (cloud.dim() != 2) throw std::invalid_argument("plot_data: requires two-dimensional clouds");

  std::vector<std::size_t> proper;
  Vec tradeoffs(cloud.size(), 0.0);
  if (report.contains("certificates") && !report.at("certificates").empty()) {
    for (const Json& cj : report.at("certificates")) {
      const auto idx = cj.at("index").get<std::size_t>();
      if (cj.at("k_star_finite").get<bool>()) {
        proper.push_back(idx);
        tradeoffs.at(idx) = cj.at("k_star").get<double>();
      }
    }
  } else {
    for (const GminEntry& e : geoffrion_min_set(cloud, tol)) {
      proper.push_back(e.index);
      tradeoffs[e.index] = e.tradeoff;
    }
  }
  const std::vector<std::size_t> pareto =
      min_set(cloud, DominationOracle::orthant_closed(2), tol);

  std::string out = "y1,y2,class,ray1_y1,ray1_y2,ray2_y1,ray2_y2\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const bool is_proper = std::find(proper.begin(), proper.end(), i) != proper.end();
    const bool is_pareto = std::find(pareto.begin(), pareto.end(), i) != pareto.end();
    out += fmt_double(cloud.point(i)[0]) + "," + fmt_double(cloud.point(i)[1]) + ",";
    if (is_proper) {
      const double weight =
          2.0 * (tradeoffs[i] > 0.0 ? tradeoffs[i] * (1.0 + kStrictMargin) : 1.0);
      const auto rays = negated_cone_rays(weight);
      out += "gmin," + fmt_double(rays.first[0]) + "," + fmt_double(rays.first[1]) + "," +
             fmt_double(rays.second[0]) + "," + fmt_double(rays.second[1]);
    } else if (is_pareto) {
      out += "min,,,,";
    } else {
      out += "dominated,,,,";
    }
    out += '\n';
  }
  return out;
}

}  // namespace paretocert
