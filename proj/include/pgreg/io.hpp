#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgreg/experiments.hpp"
#include "pgreg/regression.hpp"

namespace pgreg {

// All CSV numbers carry 17 significant digits so outputs are byte-stable
// and round-trip exactly.
inline std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write_xy_csv(const std::string& path,
                         const std::vector<double>& x,
                         const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("write_xy_csv: length mismatch");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "x,y\n";
  for (std::size_t j = 0; j < x.size(); ++j)
    out << format_g17(x[j]) << ',' << format_g17(y[j]) << '\n';
}

inline RegressionData read_xy_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  RegressionData data;
  std::string line;
  bool header_checked = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!header_checked) {
      header_checked = true;
      continue;  // header row
    }
    std::istringstream row(line);
    std::string xs, ys;
    if (!std::getline(row, xs, ',') || !std::getline(row, ys))
      throw std::runtime_error(path + ": malformed row " +
                               std::to_string(line_no));
    try {
      data.x.push_back(std::stod(xs));
      data.y.push_back(std::stod(ys));
    } catch (const std::exception&) {
      throw std::runtime_error(path + ": non-numeric row " +
                               std::to_string(line_no));
    }
  }
  data.validate();
  return data;
}

inline void write_contour_csv(const std::string& path,
                              const ContourGrid& grid) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "k1,k2,omega,lambda,ase\n";
  for (int k1 = 1; k1 <= 100; ++k1)
    for (int k2 = 1; k2 <= 100; ++k2)
      out << k1 << ',' << k2 << ',' << format_g17(contour_omega(k1)) << ','
          << format_g17(contour_lambda(k2)) << ','
          << format_g17(grid.at(k1, k2)) << '\n';
}

inline nlohmann::ordered_json model_to_json(const FitResult& fit) {
  nlohmann::ordered_json j;
  j["design"] = fit.design;
  j["c"] = fit.coefficients;
  j["b"] = fit.intercept;
  j["lambda"] = fit.lambda;
  j["omega"] = fit.spec.omega;
  j["kind"] = kernel_kind_name(fit.spec.kind);
  j["cp"] = fit.cp;
  return j;
}

inline void write_model_json(const std::string& path, const FitResult& fit) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << model_to_json(fit).dump(2) << '\n';
}

inline FitResult model_from_json(const nlohmann::json& j) {
  FitResult fit;
  fit.design = j.at("design").get<std::vector<double>>();
  fit.coefficients = j.at("c").get<std::vector<double>>();
  fit.intercept = j.at("b").get<double>();
  fit.lambda = j.at("lambda").get<double>();
  fit.cp = j.at("cp").get<double>();
  const std::string kind = j.at("kind").get<std::string>();
  const double omega = j.at("omega").get<double>();
  if (kind == "periodic_gaussian")
    fit.spec = KernelSpec::periodic_gaussian(omega);
  else if (kind == "plain_gaussian")
    fit.spec = KernelSpec::plain_gaussian(omega);
  else if (kind == "periodic_spline")
    fit.spec = KernelSpec::periodic_spline();
  else
    throw std::runtime_error("model: unknown kernel kind " + kind);
  if (fit.design.size() != fit.coefficients.size())
    throw std::runtime_error("model: design/coefficient length mismatch");
  return fit;
}

inline FitResult read_model_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return model_from_json(j);
}

inline nlohmann::ordered_json config_to_json(const ExperimentConfig& config) {
  nlohmann::ordered_json j;
  j["function"] = test_function_name(config.function);
  j["n"] = config.n;
  j["replications"] = config.replications;
  j["design"] = design_name(config.design);
  j["lambda_grid"] = config.lambda_grid;
  j["omega_grid"] = config.omega_grid;
  std::vector<std::string> names;
  for (EstimatorId id : config.estimators) names.push_back(estimator_name(id));
  j["estimators"] = names;
  j["master_seed"] = config.master_seed;
  j["sigma2"] = config.sigma2;
  return j;
}

inline nlohmann::ordered_json report_to_json(const Table1Report& report) {
  nlohmann::ordered_json j;
  j["config"] = config_to_json(report.config);
  j["run_metadata"] = "";
  nlohmann::ordered_json per;
  for (const EstimatorSummary& s : report.estimators) {
    nlohmann::ordered_json entry;
    entry["mean_ase"] = s.mean_ase;
    entry["sd_ase"] = s.sd_ase;
    per[estimator_name(s.id)] = entry;
  }
  j["per_estimator"] = per;
  nlohmann::ordered_json tests = nlohmann::ordered_json::array();
  for (const PairedComparison& cmp : report.tests) {
    nlohmann::ordered_json entry;
    entry["pair"] = cmp.pair;
    entry["t"] = cmp.test.t_stat;
    entry["df"] = cmp.test.df;
    entry["p"] = cmp.test.p_value;
    if (cmp.test.degenerate) entry["degenerate"] = true;
    tests.push_back(entry);
  }
  j["tests"] = tests;
  return j;
}

inline void write_report_json(const std::string& path,
                              const Table1Report& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << report_to_json(report).dump(2) << '\n';
}

}  // namespace pgreg
