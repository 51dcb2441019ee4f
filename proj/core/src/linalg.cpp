#include "smhk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "smhk/error.hpp"

namespace smhk {

Matrix Matrix::identity(std::size_t size) {
  Matrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1.0;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::trailing_block(std::size_t count) const {
  const std::size_t rows = rows_ > count ? rows_ - count : 0;
  const std::size_t cols = cols_ > count ? cols_ - count : 0;
  Matrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      out(r, c) = (*this)(r + count, c + count);
    }
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix shapes do not conform");
  }
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double x = a(i, l);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(l, j);
    }
  }
  return out;
}

double frobenius_norm(const Matrix& a) {
  double sum = 0.0;
  for (double x : a.data()) sum += x * x;
  return std::sqrt(sum);
}

void multiply(const Matrix& a, std::span<const double> x,
              std::span<double> y) {
  const std::size_t cols = a.cols();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const double* row = a.row(r).data();
    // Four independent accumulators; the summation order is fixed, so the
    // result is reproducible.
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t c = 0;
    for (; c + 4 <= cols; c += 4) {
      s0 += row[c] * x[c];
      s1 += row[c + 1] * x[c + 1];
      s2 += row[c + 2] * x[c + 2];
      s3 += row[c + 3] * x[c + 3];
    }
    for (; c < cols; ++c) s0 += row[c] * x[c];
    y[r] = (s0 + s1) + (s2 + s3);
  }
}

double asymmetry(const Matrix& a) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
    }
  }
  return worst;
}

namespace {

constexpr double kSymmetryTolerance = 1e-12;
constexpr double kOffDiagonalTolerance = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) sum += 2.0 * a(i, j) * a(i, j);
  }
  return std::sqrt(sum);
}

// Diagonalizes `a` in place. Rotations are applied to `vectors` when given.
int jacobi_sweeps(Matrix& a, Matrix* vectors) {
  const std::size_t n = a.rows();
  const double scale = frobenius_norm(a);
  if (scale == 0.0) return 0;
  const double target = kOffDiagonalTolerance * scale;

  for (int sweep = 1; sweep <= kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return sweep - 1;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);

        // Past the first sweeps, drop entries that no longer change either
        // diagonal in floating point.
        const double g = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(app) + g == std::abs(app) &&
            std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }

        // Stable rotation: t = sgn(tau) / (|tau| + sqrt(1 + tau^2)).
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          const double new_rp = c * arp - s * arq;
          const double new_rq = s * arp + c * arq;
          a(r, p) = a(p, r) = new_rp;
          a(r, q) = a(q, r) = new_rq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;

        if (vectors != nullptr) {
          Matrix& v = *vectors;
          for (std::size_t r = 0; r < n; ++r) {
            const double vrp = v(r, p);
            const double vrq = v(r, q);
            v(r, p) = c * vrp - s * vrq;
            v(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
  }
  if (off_diagonal_norm(a) <= target) return kMaxSweeps;
  throw Error(ErrorKind::kNotConverged,
              "Jacobi eigensolver did not converge in 100 sweeps");
}

void require_symmetric(const Matrix& a) {
  if (!a.square()) {
    throw Error(ErrorKind::kInvalidArgument, "eigensolver needs a square matrix");
  }
  const double scale = std::max(1.0, frobenius_norm(a));
  if (asymmetry(a) > kSymmetryTolerance * scale) {
    throw Error(ErrorKind::kInvalidArgument,
                "eigensolver needs a symmetric matrix");
  }
}

// Copy with the upper triangle mirrored so the working matrix is exactly
// symmetric.
Matrix symmetrized(const Matrix& a) {
  Matrix work = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) work(j, i) = work(i, j);
  }
  return work;
}

}  // namespace

SymmetricEigen eig_symmetric(const Matrix& a) {
  require_symmetric(a);
  const std::size_t n = a.rows();
  Matrix work = symmetrized(a);
  Matrix vectors = Matrix::identity(n);
  const int sweeps = jacobi_sweeps(work, &vectors);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return work(x, x) > work(y, y);
  });

  SymmetricEigen out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.values[c] = work(order[c], order[c]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = vectors(r, order[c]);
  }
  return out;
}

std::vector<double> eigenvalues_symmetric(const Matrix& a) {
  require_symmetric(a);
  Matrix work = symmetrized(a);
  jacobi_sweeps(work, nullptr);
  std::vector<double> values(a.rows());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = work(i, i);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

}  // namespace smhk
