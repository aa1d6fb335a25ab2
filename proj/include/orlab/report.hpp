#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orlab/verification.hpp"

namespace orlab {

inline constexpr const char* kVersion = "0.1.0";

struct GridSpec {
  double min = 1e-6;
  double max = 1e6;
  int points = 128;
};

struct ScanSpec {
  double p = 2.0;
  double q = 2.0;
  std::string fn = "gaussian";
};

/// Everything a verify run depends on. All file outputs are deterministic
/// functions of (config, seed, version).
struct RunConfig {
  std::vector<std::string> young_functions;
  std::uint64_t corpus_seed = 1;

  std::vector<double> lambda_grid;        // lemma / main-result sweeps
  std::vector<double> suite_lambda_grid;  // Orlicz inequality suite
  std::vector<double> scan_lambda_grid;   // log-log slope scans
  GridSpec u_grid{1e-6, 1e6, 128};
  GridSpec xy_grid{1e-3, 1e3, 24};
  int x_resolution = 64;
  int zak_n = 128;
  int zak_K = 32;

  std::vector<std::array<std::string, 2>> lemma_pairs;
  std::vector<std::array<std::string, 2>> main_pairs;
  std::vector<std::array<std::string, 4>> structure_groups;  // phi1 psi1 phi2 psi2
  std::vector<ScanSpec> scans;

  std::map<std::string, double> tolerances;

  std::string out_dir = "orlab_out";
  std::vector<std::string> formats{"json", "csv"};
  int jobs = 1;
};

RunConfig default_config();

/// Loads and validates a JSON config; unknown names or empty grids throw
/// std::invalid_argument (the CLI maps that to exit code 2).
RunConfig load_config(const std::string& path);

std::string config_to_json_string(const RunConfig& cfg);

/// FNV-1a over the canonical JSON serialization.
std::string config_hash(const RunConfig& cfg);

struct Report {
  std::string version;
  std::string hash;
  std::map<std::string, int> summary;  // status name -> count
  std::vector<VerificationRecord> records;
};

/// Runs the full property suite described by the config (Young pair audits,
/// the Orlicz inequality suite, amalgam structure checks, dilation lemma and
/// main-result sweeps, and the Zak bounds) and tallies statuses.
Report run_verify_suite(const RunConfig& cfg);

/// Writes report.json / report.csv plus one plot-data CSV per scan into
/// cfg.out_dir. Returns the paths written. I/O failures throw
/// std::runtime_error with the path in the message (CLI exit code 3).
std::vector<std::string> emit(const Report& report, const RunConfig& cfg);

/// 0 when no record is violated, 1 otherwise.
int exit_code_for(const Report& report);

/// Fixed-format double for CSV output ("%.12g"; infinities print as inf).
std::string fmt_double(double v);

}  // namespace orlab
