#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace smhk {

// Dense row-major matrix. Sizes here stay in the hundreds, so no sparse or
// blocked storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<double> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::span<const double> data() const noexcept { return data_; }

  Matrix transposed() const;

  // Copy with the first `count` rows and columns removed.
  Matrix trailing_block(std::size_t count) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
double frobenius_norm(const Matrix& a);

// y = A x. `y` must not alias `x`.
void multiply(const Matrix& a, std::span<const double> x, std::span<double> y);

// Largest |A(i,j) - A(j,i)|.
double asymmetry(const Matrix& a);

struct SymmetricEigen {
  std::vector<double> values;  // descending
  Matrix vectors;              // column c pairs with values[c]
  int sweeps = 0;
};

// Cyclic Jacobi rotations. Input must be square and symmetric within 1e-12
// (relative to its Frobenius norm), otherwise Error(kInvalidArgument).
// Iterates until the off-diagonal Frobenius norm drops below
// 1e-13 * ||A||_F, at most 100 sweeps.
SymmetricEigen eig_symmetric(const Matrix& a);

// Same algorithm without accumulating the rotations.
std::vector<double> eigenvalues_symmetric(const Matrix& a);

}  // namespace smhk
