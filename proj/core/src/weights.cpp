#include "smhk/weights.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "smhk/error.hpp"

namespace smhk {

namespace {

constexpr double kDenominatorFloor = 1e-14;
constexpr double kScanEdge = 1e-9;
constexpr int kScanCells = 4096;
constexpr double kResidualTolerance = 1e-12;
constexpr double kConsistencyTolerance = 1e-8;

struct SetConstants {
  double diff;   // sqrt(n) - sqrt(n-1)
  double sum;    // sqrt(n) + sqrt(n-1)
  double ratio;  // sqrt((n-1)/n)
};

SetConstants set_constants(const SmhkParams& params) {
  const double n = params.sets();
  const double rn = std::sqrt(n);
  const double rn1 = std::sqrt(n - 1.0);
  return {rn - rn1, rn + rn1, rn1 / rn};
}

void require_open_interval(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi)) {
    throw Error(ErrorKind::kInvalidArgument, "theta must lie in (0, pi)");
  }
}

// NaN instead of throwing; used by the root scan.
double residual_or_nan(const SmhkParams& params, double theta) {
  try {
    const double r = eval_residual(params, theta);
    return std::isfinite(r) ? r : std::numeric_limits<double>::quiet_NaN();
  } catch (const Error&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
}

double bisect(const SmhkParams& params, double lo, double hi, double f_lo) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = residual_or_nan(params, mid);
    if (std::isnan(f_mid)) return std::numeric_limits<double>::quiet_NaN();
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double r_lo = std::abs(residual_or_nan(params, lo));
  const double r_hi = std::abs(residual_or_nan(params, hi));
  return r_lo <= r_hi ? lo : hi;
}

}  // namespace

double eval_w1(const SmhkParams& params, double theta) {
  require_open_interval(theta);
  const SetConstants sc = set_constants(params);
  const double m = params.path_length();
  const double L = params.branches();
  const double s = std::cos(theta);
  const double sin_m = std::sin(m * theta);
  const double sin_m1 = std::sin((m - 1.0) * theta);

  const double numerator = s * sc.diff * sin_m - sc.sum * sin_m;
  const double denominator = sc.diff * sin_m1 - (L + 1.0) * sc.sum * sin_m;
  if (std::abs(denominator) < kDenominatorFloor) {
    throw Error(ErrorKind::kSingularEvaluation, "w1 denominator vanishes");
  }
  return numerator / denominator;
}

double eval_F(const SmhkParams& params, double theta) {
  require_open_interval(theta);
  const double w1 = eval_w1(params, theta);
  const double sin_t = std::sin(theta);
  if (w1 == 0.0 || sin_t == 0.0) {
    throw Error(ErrorKind::kSingularEvaluation, "F is singular (w1 = 0)");
  }
  const double m = params.path_length();
  const double L = params.branches();
  const double root_l = std::sqrt(L);
  return ((1.0 + L) + (std::cos(theta) - 1.0) / w1) * std::sin(m * theta) /
             (root_l * sin_t) -
         std::sin((m - 1.0) * theta) / (root_l * sin_t);
}

double eval_w0(const SmhkParams& params, double s) {
  const SetConstants sc = set_constants(params);
  const double n = params.sets();
  const double k = params.stars_per_set();
  return (sc.sum - s * sc.diff) / (k * std::sqrt(n * (n - 1.0)) * sc.sum);
}

double eval_residual(const SmhkParams& params, double theta) {
  const double f = eval_F(params, theta);
  const SetConstants sc = set_constants(params);
  const double h = sc.diff / sc.sum;
  const double m = params.path_length();
  const double L = params.branches();
  const double c = std::cos(theta);
  const double path_term = std::sqrt(L) * std::sin(m * theta) / std::sin(theta);
  return (1.0 - c) * f + sc.ratio * (1.0 - h * c) * (path_term - f);
}

std::vector<double> residual_roots(const SmhkParams& params) {
  const double lo = kScanEdge;
  const double hi = std::numbers::pi - kScanEdge;
  const double step = (hi - lo) / kScanCells;

  std::vector<double> grid(kScanCells + 1);
  std::vector<double> values(kScanCells + 1);
  for (int i = 0; i <= kScanCells; ++i) {
    grid[i] = i == kScanCells ? hi : lo + step * i;
    values[i] = residual_or_nan(params, grid[i]);
  }

  std::vector<double> roots;
  for (int i = 0; i < kScanCells; ++i) {
    const double a = values[i];
    const double b = values[i + 1];
    if (std::isnan(a) || std::isnan(b)) continue;
    if (a == 0.0) {
      roots.push_back(grid[i]);
      continue;
    }
    if ((a < 0.0) == (b < 0.0) || b == 0.0) continue;
    const double root = bisect(params, grid[i], grid[i + 1], a);
    if (std::isnan(root)) continue;
    if (std::abs(residual_or_nan(params, root)) <= kResidualTolerance) {
      roots.push_back(root);
    }
  }
  if (values[kScanCells] == 0.0) roots.push_back(grid[kScanCells]);
  return roots;
}

AnalyticalSolution solution_at(const SmhkParams& params, double theta) {
  const double s = std::cos(theta);
  std::vector<double> w(params.orbit_count(), 0.5);
  w[0] = eval_w0(params, s);
  w[1] = eval_w1(params, theta);

  AnalyticalSolution out;
  out.weights = OrbitWeights(std::move(w));
  out.theta = theta;
  out.slem = s;
  out.residual = eval_residual(params, theta);
  return out;
}

AnalyticalSolution solve_theta(const SmhkParams& params) {
  const std::vector<double> roots = residual_roots(params);
  if (roots.empty()) {
    throw Error(ErrorKind::kNoRoot, "no sign change of the theta equation in (0, pi)");
  }

  std::ostringstream rejected;
  rejected.precision(17);
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    AnalyticalSolution candidate;
    try {
      candidate = solution_at(params, roots[idx]);
    } catch (const Error&) {
      continue;
    }
    const double spectrum_slem =
        slem_full(assemble_full(params, candidate.weights)).slem;
    candidate.root_index = idx;
    candidate.consistency_gap = std::abs(spectrum_slem - candidate.slem);
    if (candidate.consistency_gap <= kConsistencyTolerance) return candidate;
    rejected << " theta=" << roots[idx] << " cos=" << candidate.slem
             << " slem=" << spectrum_slem << ";";
  }
  throw Error(ErrorKind::kInconsistentRoot,
              "no root reproduces the spectrum:" + rejected.str());
}

AnalyticalSolution analytical_weights(const SmhkParams& params) {
  return solve_theta(params);
}

}  // namespace smhk
