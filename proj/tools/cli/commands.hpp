#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "smhk/topology.hpp"

namespace smhk::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RawParams {
  std::optional<std::int64_t> n, k, m, L;

  bool any() const { return n || k || m || L; }
  bool all() const { return n && k && m && L; }
};

struct WeightsOptions {
  RawParams params;
  bool json = false;
  bool oracle = false;
};

struct SweepOptions {
  RawParams params;          // the two fixed dimensions
  std::string grid;          // the two swept dimensions; empty = default
  std::optional<std::string> csv_path;
};

struct SimulateOptions {
  RawParams params;
  std::optional<std::string> weights_file;  // JSON with a "weights" array
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t iterations = 200;
  std::optional<std::string> csv_path;
};

struct VerifyOptions {
  RawParams params;
  std::string grid;  // empty and no params = default grid
  bool oracle = false;
  double perturb_w0 = 0.0;
};

// One row of a sweep.
struct SweepRecord {
  int n = 0, k = 0, m = 0, L = 0;
  std::optional<double> slem;
  std::optional<double> theta;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The invariant suite for one network: matrix structure, block spectra,
// interlacing chains and the optimality certificate of the closed form.
// perturb_w0 is added to the closed-form core weight before checking.
std::vector<CheckResult> verify_cell(const SmhkParams& params, bool oracle,
                                     double perturb_w0 = 0.0);

// Each command writes its artifact to `out` (or the --csv file) and
// diagnostics to `err`, and returns the exit status.
int cmd_weights(const WeightsOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep_nk(const SweepOptions& options, std::ostream& out, std::ostream& err);
int cmd_sweep_ml(const SweepOptions& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

// Closed-form SLEM over a list of params, evaluated in parallel and
// returned in input order. Failed cells have empty slem/theta and a line
// on `err`.
std::vector<SweepRecord> run_sweep(const std::vector<SmhkParams>& cells, std::ostream& err);

}  // namespace smhk::cli
