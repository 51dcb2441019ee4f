#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "cli/format.hpp"
#include "cli/grid.hpp"
#include "smhk/error.hpp"
#include "smhk/oracle.hpp"
#include "smhk/parallel.hpp"
#include "smhk/sim.hpp"
#include "smhk/spectral.hpp"
#include "smhk/weights.hpp"

namespace smhk::cli {

namespace {

constexpr double kConsistencyTolerance = 1e-8;
constexpr double kSpectrumTolerance = 1e-8;
constexpr double kOracleTolerance = 1e-5;

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool usage = e.kind() == ErrorKind::kInvalidParams ||
                       e.kind() == ErrorKind::kInvalidArgument;
    return usage ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

SmhkParams require_params(const RawParams& raw) {
  if (!raw.all()) {
    throw Error(ErrorKind::kInvalidParams, "all of -n, -k, -m, -L are required");
  }
  return validate_params(*raw.n, *raw.k, *raw.m, *raw.L);
}

std::string params_label(const SmhkParams& p) {
  std::ostringstream s;
  s << "n=" << p.sets() << " k=" << p.stars_per_set() << " m=" << p.path_length()
    << " L=" << p.branches();
  return s.str();
}

// Writes to the --csv file when given, otherwise to `out`.
void emit(const std::optional<std::string>& path, std::ostream& out, const std::string& text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + *path + " for writing");
  file << text;
}

std::optional<double> cell(const std::optional<double>& v) { return v; }

CsvDocument sweep_document(const std::string& kind, const std::vector<SweepRecord>& records) {
  CsvDocument doc;
  doc.comments = {"sweep=" + kind, "slem=cos(theta) from the closed-form solution"};
  doc.header = {"n", "k", "m", "L", "slem", "theta"};
  for (const SweepRecord& r : records) {
    doc.rows.push_back({double(r.n), double(r.k), double(r.m), double(r.L), cell(r.slem),
                        cell(r.theta)});
  }
  return doc;
}

int run_grid_sweep(const std::string& kind, const SweepOptions& options,
                   const std::vector<std::string>& swept, const std::string& default_grid,
                   const std::function<SmhkParams(int, int)>& make, std::ostream& out,
                   std::ostream& err) {
  const auto ranges =
      parse_grid(options.grid.empty() ? default_grid : options.grid, swept);
  const auto defaults = parse_grid(default_grid, swept);
  const IntRange outer = ranges.contains(swept[0]) ? ranges.at(swept[0]) : defaults.at(swept[0]);
  const IntRange inner = ranges.contains(swept[1]) ? ranges.at(swept[1]) : defaults.at(swept[1]);

  std::vector<SmhkParams> cells;
  for (int a : outer.values()) {
    for (int b : inner.values()) cells.push_back(make(a, b));
  }
  emit(options.csv_path, out, to_csv(sweep_document(kind, run_sweep(cells, err))));
  return kExitOk;
}

OrbitWeights read_weights_file(const std::string& path, const SmhkParams& params) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot read weights file " + path);
  Json j;
  try {
    j = Json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kInvalidArgument, "weights file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.contains("weights") || !j["weights"].is_array()) {
    throw Error(ErrorKind::kInvalidArgument, "weights file needs a \"weights\" array");
  }
  const std::pair<const char*, int> dims[] = {{"n", params.sets()},
                                              {"k", params.stars_per_set()},
                                              {"m", params.path_length()},
                                              {"L", params.branches()}};
  for (const auto& [key, value] : dims) {
    if (j.contains(key) && j[key] != value) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string("weights file was written for a different ") + key);
    }
  }
  std::vector<double> w;
  for (const auto& x : j["weights"]) {
    if (!x.is_number()) throw Error(ErrorKind::kInvalidArgument, "weights must be numbers");
    w.push_back(x.get<double>());
  }
  if (w.size() != params.orbit_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "weights file holds " + std::to_string(w.size()) + " weights, expected " +
                    std::to_string(params.orbit_count()));
  }
  return OrbitWeights(std::move(w));
}

std::string describe(double value) { return format_double(value); }

CheckResult bound_check(std::string name, double value, double limit) {
  return {std::move(name), value <= limit, "value=" + describe(value) + " limit=" + describe(limit)};
}

}  // namespace

std::vector<SweepRecord> run_sweep(const std::vector<SmhkParams>& cells, std::ostream& err) {
  std::vector<SweepRecord> records(cells.size());
  std::vector<std::string> failures(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const SmhkParams& p = cells[i];
    SweepRecord& r = records[i];
    r.n = p.sets();
    r.k = p.stars_per_set();
    r.m = p.path_length();
    r.L = p.branches();
    try {
      const AnalyticalSolution sol = analytical_weights(p);
      r.slem = sol.slem;
      r.theta = sol.theta;
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!failures[i].empty()) {
      err << "warning: " << params_label(cells[i]) << ": " << failures[i] << '\n';
    }
  }
  return records;
}

int cmd_weights(const WeightsOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SmhkParams params = require_params(options.params);
    const AnalyticalSolution sol = analytical_weights(params);
    std::optional<OracleResult> oracle;
    if (options.oracle) oracle = optimize_weights(params);

    if (options.json) {
      out << dump_json(solution_json(params, sol, oracle ? &*oracle : nullptr));
      return kExitOk;
    }
    out << params_label(params) << '\n';
    out << "theta    " << format_double(sol.theta) << '\n';
    out << "slem     " << format_double(sol.slem) << '\n';
    for (std::size_t q = 0; q < sol.weights.size(); ++q) {
      out << 'w' << q << "       " << format_double(sol.weights[q]) << '\n';
    }
    out << "residual " << format_double(sol.residual) << '\n';
    if (oracle) {
      out << "oracle_slem " << format_double(oracle->slem) << " (difference "
          << format_double(oracle->slem - sol.slem) << ")\n";
    }
    return kExitOk;
  });
}

int cmd_sweep_nk(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::int64_t m = options.params.m.value_or(2);
    const std::int64_t L = options.params.L.value_or(2);
    validate_params(2, 2, m, L);
    return run_grid_sweep(
        "nk", options, {"n", "k"}, "n=2..6,k=2..5",
        [&](int n, int k) { return validate_params(n, k, m, L); }, out, err);
  });
}

int cmd_sweep_ml(const SweepOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::int64_t n = options.params.n.value_or(3);
    const std::int64_t k = options.params.k.value_or(2);
    validate_params(n, k, 1, 1);
    return run_grid_sweep(
        "ml", options, {"m", "L"}, "m=1..5,L=1..5",
        [&](int m, int L) { return validate_params(n, k, m, L); }, out, err);
  });
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SmhkParams params = require_params(options.params);
    if (options.trials < 1 || options.iterations < 2) {
      throw Error(ErrorKind::kInvalidArgument, "--trials must be >= 1 and --iters >= 2");
    }
    const OrbitWeights weights = options.weights_file
                                     ? read_weights_file(*options.weights_file, params)
                                     : analytical_weights(params).weights;
    const WeightMatrix w = assemble_full(params, weights);
    const double slem = slem_full(w).slem;

    SimConfig config;
    config.trials = options.trials;
    config.iterations = options.iterations;
    config.seed = options.seed;
    const TrajectoryStats stats = simulate(w, config);

    CsvDocument doc;
    std::string weight_list;
    for (std::size_t q = 0; q < weights.size(); ++q) {
      weight_list += (q ? ";" : "") + format_double(weights[q]);
    }
    doc.comments = {
        params_label(params),
        "weights_source=" + (options.weights_file ? "file:" + *options.weights_file
                                                  : std::string("closed_form")),
        "weights=" + weight_list,
        "seed=" + std::to_string(stats.seed),
        "trials=" + std::to_string(stats.trials),
        "iterations=" + std::to_string(config.iterations),
        "distribution=" + stats.distribution,
        "aggregate=" + stats.aggregate,
        "excluded_trials=" + std::to_string(stats.excluded_trials),
        "slem=" + format_double(slem),
    };
    try {
      doc.comments.push_back("fitted_rate=" + format_double(decay_rate(stats)));
    } catch (const Error& e) {
      doc.comments.push_back("fitted_rate=undefined");
      err << "warning: " << e.what() << '\n';
    }
    doc.header = {"t", "geo_mean_distance", "log10_geo_mean"};
    for (std::size_t t = 0; t < stats.geo_mean_distance.size(); ++t) {
      const double d = stats.geo_mean_distance[t];
      doc.rows.push_back({double(t), d, d > 0.0 ? std::optional<double>(std::log10(d)) : std::nullopt});
    }
    emit(options.csv_path, out, to_csv(doc));
    return kExitOk;
  });
}

std::vector<CheckResult> verify_cell(const SmhkParams& params, bool oracle, double perturb_w0) {
  std::vector<CheckResult> checks;
  AnalyticalSolution sol;
  try {
    sol = analytical_weights(params);
  } catch (const Error& e) {
    checks.push_back({"closed_form_solution", false, e.what()});
    return checks;
  }
  checks.push_back(bound_check("theta_residual", std::abs(sol.residual), 1e-12));

  std::vector<double> raw = sol.weights.values();
  raw[0] += perturb_w0;
  const OrbitWeights weights(raw);
  const WeightMatrix w = assemble_full(params, weights);
  const std::size_t size = w.size();

  double row_error = 0.0;
  for (std::size_t r = 0; r < size; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < size; ++c) sum += w(r, c);
    row_error = std::max(row_error, std::abs(sum - 1.0));
  }
  checks.push_back(bound_check("row_sums", row_error, 1e-12));
  checks.push_back(bound_check("symmetry", asymmetry(w.matrix()), 0.0));

  const auto adj = adjacency(params);
  std::size_t stray = 0;
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (r != c && adj[r * size + c] == 0 && w(r, c) != 0.0) ++stray;
    }
  }
  checks.push_back({"sparsity", stray == 0, "entries_off_graph=" + std::to_string(stray)});

  const SpectralResult full = slem_full(w);
  const BlockSet blocks = stratify(params, weights);
  const std::vector<double> from_blocks = spectrum_union(blocks);
  double spectrum_gap = from_blocks.size() == full.eigenvalues.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < from_blocks.size() && std::isfinite(spectrum_gap); ++i) {
    spectrum_gap = std::max(spectrum_gap, std::abs(from_blocks[i] - full.eigenvalues[i]));
  }
  checks.push_back(bound_check("spectrum_union", spectrum_gap, kSpectrumTolerance));
  checks.push_back(bound_check("slem_blocks_vs_full",
                               std::abs(slem_blocks(blocks) - full.slem), 1e-10));

  const Corollary1Report chains = check_corollary1(blocks);
  std::string failed;
  for (const InequalityCheck& c : chains.checks) {
    if (!c.pass) failed += (failed.empty() ? "" : "; ") + c.name;
  }
  checks.push_back({"corollary1_chains", chains.all_pass(),
                    failed.empty() ? "all 7 inequalities hold" : "failed: " + failed});

  checks.push_back(bound_check("cos_theta_consistency", std::abs(full.slem - sol.slem),
                               kConsistencyTolerance));
  const SlacknessReport slack = check_slackness(blocks, sol.slem, kConsistencyTolerance);
  checks.push_back(bound_check("slackness_intra_max", std::abs(slack.intra_max - sol.slem),
                               kConsistencyTolerance));
  checks.push_back(bound_check("slackness_inter_min", std::abs(slack.inter_min + sol.slem),
                               kConsistencyTolerance));
  checks.push_back({"perron_simple", full.perron_simple && full.slem < 1.0,
                    "slem=" + describe(full.slem)});

  if (oracle) {
    const OracleResult found = optimize_weights(params);
    checks.push_back(bound_check("oracle_equivalence", std::abs(found.slem - sol.slem),
                                 kOracleTolerance));
  }
  return checks;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<SmhkParams> cells;
    const bool single = options.grid.empty() && options.params.any();
    if (single) {
      cells.push_back(require_params(options.params));
    } else {
      if (options.params.any()) {
        throw Error(ErrorKind::kInvalidArgument, "use either -n/-k/-m/-L or --grid, not both");
      }
      const std::string fallback = "n=2..4,k=2..4,m=1..3,L=1..3";
      auto ranges = parse_grid(options.grid.empty() ? fallback : options.grid,
                               {"n", "k", "m", "L"});
      const auto defaults = parse_grid(fallback, {"n", "k", "m", "L"});
      for (const auto& [name, range] : defaults) ranges.try_emplace(name, range);
      for (int n : ranges.at("n").values())
        for (int k : ranges.at("k").values())
          for (int m : ranges.at("m").values())
            for (int L : ranges.at("L").values()) cells.push_back(validate_params(n, k, m, L));
    }

    std::vector<std::vector<CheckResult>> results(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
      results[i] = verify_cell(cells[i], options.oracle, options.perturb_w0);
    });

    std::size_t failed_cells = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      std::size_t passed = 0;
      std::string failed;
      for (const CheckResult& c : results[i]) {
        if (c.pass) {
          ++passed;
        } else {
          failed += (failed.empty() ? "" : ",") + c.name;
        }
        if (single) {
          out << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
        }
      }
      if (!failed.empty()) ++failed_cells;
      if (!single) {
        out << params_label(cells[i]) << "  " << passed << '/' << results[i].size() << ' '
            << (failed.empty() ? "PASS" : "FAIL " + failed) << '\n';
      }
    }
    out << "verify: " << cells.size() << (cells.size() == 1 ? " cell, " : " cells, ")
        << failed_cells << " failing\n";
    return failed_cells == 0 ? kExitOk : kExitFailure;
  });
}

}  // namespace smhk::cli
