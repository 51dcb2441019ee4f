#include "smhk/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "smhk/error.hpp"

namespace smhk {

namespace {

double diameter(const std::vector<std::vector<double>>& simplex,
                std::size_t best) {
  double widest = 0.0;
  for (std::size_t v = 0; v < simplex.size(); ++v) {
    if (v == best) continue;
    for (std::size_t i = 0; i < simplex[v].size(); ++i) {
      widest = std::max(widest, std::abs(simplex[v][i] - simplex[best][i]));
    }
  }
  return widest;
}

}  // namespace

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             std::span<const double> steps,
                             const NelderMeadOptions& options) {
  const std::size_t dim = start.size();
  if (dim == 0 || steps.size() != dim) {
    throw Error(ErrorKind::kInvalidArgument,
                "nelder_mead: start and steps must have the same nonzero size");
  }

  NelderMeadResult result;
  const auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(dim + 1, start);
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += steps[i];
  std::vector<double> values(dim + 1);
  for (std::size_t v = 0; v <= dim; ++v) values[v] = eval(simplex[v]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), second(dim);

  const auto point = [&](const std::vector<double>& from, double scale,
                         std::vector<double>& out) {
    // out = centroid + scale * (from - centroid)
    for (std::size_t i = 0; i < dim; ++i) {
      out[i] = centroid[i] + scale * (from[i] - centroid[i]);
    }
  };

  int iter = 0;
  for (; iter < options.max_iters; ++iter) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return values[a] < values[b];
    });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t next_worst = order[dim - 1];

    if (diameter(simplex, best) < options.simplex_tol) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t v = 0; v <= dim; ++v) {
      if (v == worst) continue;
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v][i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    point(simplex[worst], -options.reflect, trial);
    const double f_reflect = eval(trial);

    if (f_reflect < values[best]) {
      point(simplex[worst], -options.reflect * options.expand, second);
      const double f_expand = eval(second);
      if (f_expand < f_reflect) {
        simplex[worst] = second;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[next_worst]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }

    const bool outside = f_reflect < values[worst];
    if (outside) {
      point(simplex[worst], -options.reflect * options.contract, second);
    } else {
      point(simplex[worst], options.contract, second);
    }
    const double f_contract = eval(second);
    if (f_contract < (outside ? f_reflect : values[worst])) {
      simplex[worst] = second;
      values[worst] = f_contract;
      continue;
    }

    for (std::size_t v = 0; v <= dim; ++v) {
      if (v == best) continue;
      for (std::size_t i = 0; i < dim; ++i) {
        simplex[v][i] = simplex[best][i] +
                        options.shrink * (simplex[v][i] - simplex[best][i]);
      }
      values[v] = eval(simplex[v]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(values.begin(), values.end()) - values.begin());
  if (!result.converged) {
    result.converged = diameter(simplex, best) < options.simplex_tol;
  }
  result.x = simplex[best];
  result.value = values[best];
  result.iterations = iter;
  return result;
}

}  // namespace smhk
