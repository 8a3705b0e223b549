#pragma once

#include "qrm/spectra.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qrm {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<int> ells{1};
  int ell_max = 8;  // verify-all
  int n_max = 12;
  int n_lo = 1, n_hi = 3;
  std::vector<double> deltas{1.0};
  double g_lo = 0, g_hi = 3, g_step = 0.05;
  int dim_fock = kDefaultDimFock;
  int n_levels = 20;
  double census_tol = 1e-6;
  double residual_tol = 1e-6;
  double stability_tol = 1e-8;
  double action_tol = 1e-9;
  double x_lo = -4, x_hi = 8;
  int x_steps = 240;
  bool overlay = false;
  bool check_convergence = false;
  long t_lo = -100, t_hi = 100;
  std::string out_dir = "qrmsym_out";
  uint64_t seed = 0;
  std::string p3_override;  // replaces the tabulated p_3 (fault injection)
};
void validate(const RunConfig& c);
std::vector<double> g_grid(const RunConfig& c);

struct CommandResult {
  int exit_code = 0;
  std::string first_failure;
  Json report;
  std::vector<std::string> files;
};

CommandResult cmd_verify_all(const RunConfig& c);
CommandResult cmd_sweep(const RunConfig& c);
CommandResult cmd_surface(const RunConfig& c);
CommandResult cmd_elliptic(const RunConfig& c);
CommandResult cmd_omega(const RunConfig& c);
CommandResult cmd_derive_j(const RunConfig& c);
CommandResult cmd_juddian(const RunConfig& c);

Json config_json(const RunConfig& c);
Json operator_json(const Mat2Weyl& m);
Json sweep_json(const SpectralSweep& s);

// files are written whole; the path is part of every error
void write_text(const std::string& path, const std::string& text);
void write_json(const std::string& path, const Json& j);
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);
std::string fmt(double v);

// subset of JSON Schema: type, required, properties, additionalProperties, items, enum, minimum, maximum
std::vector<std::string> schema_errors(const Json& doc, const Json& schema, const std::string& where = "$");
Json load_schema(const std::string& name);

}  // namespace qrm
