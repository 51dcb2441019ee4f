#include "smhk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>

#include "smhk/error.hpp"

namespace smhk {

OrbitWeights::OrbitWeights(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "orbit weights must not be empty");
  }
  for (double w : values_) {
    if (!std::isfinite(w)) {
      throw Error(ErrorKind::kInvalidArgument, "orbit weights must be finite");
    }
  }
}

namespace {

void require_length(const SmhkParams& params, const OrbitWeights& weights) {
  if (weights.size() != params.orbit_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(params.orbit_count()) +
                    " orbit weights, got " + std::to_string(weights.size()));
  }
}

}  // namespace

WeightMatrix assemble_full(const SmhkParams& params,
                           const OrbitWeights& weights) {
  require_length(params, weights);
  const int n = params.sets();
  const int k = params.stars_per_set();
  const int m = params.path_length();
  const int L = params.branches();
  const std::size_t size = node_count(params);

  Matrix w(size, size);
  const double central_diag = 1.0 - k * (n - 1) * weights.core() - L * weights.path(1);

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) {
      const std::size_t center = node_index(params, {i, j, 0, 0});
      w(center, center) = central_diag;
      for (int p = 1; p <= L; ++p) {
        for (int q = 1; q <= m; ++q) {
          const std::size_t node = node_index(params, {i, j, p, q});
          const std::size_t parent =
              q == 1 ? center : node_index(params, {i, j, p, q - 1});
          const double wq = weights.path(static_cast<std::size_t>(q));
          w(node, node) = q < m ? 1.0 - wq - weights.path(static_cast<std::size_t>(q) + 1)
                                : 1.0 - wq;
          w(node, parent) = wq;
          w(parent, node) = wq;
        }
      }
    }
  }

  for (const OrbitEdge& e : build_edges(params)) {
    if (e.orbit != 0) continue;
    const std::size_t a = node_index(params, e.u);
    const std::size_t b = node_index(params, e.v);
    w(a, b) = weights.core();
    w(b, a) = weights.core();
  }
  return WeightMatrix(std::move(w));
}

BlockMultiplicities block_multiplicities(const SmhkParams& params) {
  const auto n = static_cast<std::size_t>(params.sets());
  const auto k = static_cast<std::size_t>(params.stars_per_set());
  const auto L = static_cast<std::size_t>(params.branches());
  BlockMultiplicities mult;
  mult.uniform = 1;
  mult.intra_set = n * (k - 1);
  mult.inter_set = n - 1;
  mult.branch = n * k * (L - 1);
  return mult;
}

BlockSet stratify(const SmhkParams& params, const OrbitWeights& weights) {
  require_length(params, weights);
  const double n = params.sets();
  const double k = params.stars_per_set();
  const auto m = static_cast<std::size_t>(params.path_length());
  const double L = params.branches();

  Matrix uniform(m + 1, m + 1);
  uniform(0, 0) = 1.0 - L * weights.path(1);
  uniform(0, 1) = uniform(1, 0) = std::sqrt(L) * weights.path(1);
  for (std::size_t q = 1; q <= m; ++q) {
    uniform(q, q) = q < m ? 1.0 - weights.path(q) - weights.path(q + 1)
                          : 1.0 - weights.path(q);
    if (q >= 2) uniform(q - 1, q) = uniform(q, q - 1) = weights.path(q);
  }

  BlockSet blocks;
  blocks.intra_set = uniform;
  blocks.intra_set(0, 0) -= k * (n - 1) * weights.core();
  blocks.inter_set = uniform;
  blocks.inter_set(0, 0) -= k * n * weights.core();
  blocks.branch = uniform.trailing_block(1);
  blocks.uniform = std::move(uniform);
  blocks.multiplicity = block_multiplicities(params);
  return blocks;
}

std::vector<double> spectrum_union(const BlockSet& blocks) {
  std::vector<double> all;
  const auto append = [&all](const Matrix& block, std::size_t times) {
    if (times == 0 || block.rows() == 0) return;
    const std::vector<double> values = eigenvalues_symmetric(block);
    for (std::size_t t = 0; t < times; ++t) {
      all.insert(all.end(), values.begin(), values.end());
    }
  };
  append(blocks.uniform, blocks.multiplicity.uniform);
  append(blocks.intra_set, blocks.multiplicity.intra_set);
  append(blocks.inter_set, blocks.multiplicity.inter_set);
  append(blocks.branch, blocks.multiplicity.branch);
  std::sort(all.begin(), all.end(), std::greater<>());
  return all;
}

SpectralResult slem_of_spectrum(std::vector<double> eigenvalues) {
  if (eigenvalues.size() < 2) {
    throw Error(ErrorKind::kInvalidArgument,
                "SLEM needs at least two eigenvalues");
  }
  std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<>());

  SpectralResult result;
  result.perron_simple = eigenvalues[0] - eigenvalues[1] > 1e-10;

  const auto perron = std::min_element(
      eigenvalues.begin(), eigenvalues.end(),
      [](double a, double b) { return std::abs(a - 1.0) < std::abs(b - 1.0); });
  const auto perron_pos = std::distance(eigenvalues.begin(), perron);

  result.lambda2 = perron_pos == 0 ? eigenvalues[1] : eigenvalues[0];
  result.lambda_min = perron_pos == static_cast<std::ptrdiff_t>(eigenvalues.size()) - 1
                          ? eigenvalues[eigenvalues.size() - 2]
                          : eigenvalues.back();
  result.slem = std::max(result.lambda2, -result.lambda_min);
  result.eigenvalues = std::move(eigenvalues);
  return result;
}

SpectralResult slem_full(const WeightMatrix& w) {
  return slem_of_spectrum(eigenvalues_symmetric(w.matrix()));
}

double slem_blocks(const BlockSet& blocks) {
  return slem_of_spectrum(spectrum_union(blocks)).slem;
}

bool Corollary1Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InequalityCheck& c) { return c.pass; });
}

Corollary1Report check_corollary1(const BlockSet& blocks) {
  constexpr double kSlack = 1e-10;
  const std::vector<double> uniform = eigenvalues_symmetric(blocks.uniform);
  const std::vector<double> intra = eigenvalues_symmetric(blocks.intra_set);
  const std::vector<double> inter = eigenvalues_symmetric(blocks.inter_set);
  const std::vector<double> branch = eigenvalues_symmetric(blocks.branch);

  Corollary1Report report;
  const auto le = [&report](std::string name, double lhs, double rhs) {
    report.checks.push_back({std::move(name), lhs, rhs, lhs <= rhs + kSlack});
  };

  le("min(inter_set) <= min(intra_set)", inter.back(), intra.back());
  le("min(intra_set) <= min(uniform)", intra.back(), uniform.back());
  le("min(uniform) <= min(branch)", uniform.back(), branch.back());

  le("max(branch) <= max(inter_set)", branch.front(), inter.front());
  le("max(inter_set) <= max(intra_set)", inter.front(), intra.front());
  le("max(intra_set) <= max(uniform)", intra.front(), uniform.front());
  report.checks.push_back({"max(uniform) = 1", uniform.front(), 1.0,
                           std::abs(uniform.front() - 1.0) <= kSlack});
  return report;
}

SlacknessReport check_slackness(const BlockSet& blocks, double s,
                                double tolerance) {
  SlacknessReport report;
  report.s = s;
  report.intra_max = eigenvalues_symmetric(blocks.intra_set).front();
  report.inter_min = eigenvalues_symmetric(blocks.inter_set).back();
  report.pass = std::abs(report.intra_max - s) <= tolerance &&
                std::abs(report.inter_min + s) <= tolerance;
  return report;
}

}  // namespace smhk
