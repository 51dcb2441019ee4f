#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "smhk/linalg.hpp"
#include "smhk/topology.hpp"

namespace smhk {

// One weight per edge orbit: core() on the central-to-central edges and
// path(q) on the branch edge between depths q-1 and q.
class OrbitWeights {
 public:
  OrbitWeights() = default;
  // Throws Error(kInvalidArgument) on an empty vector or non-finite entries.
  explicit OrbitWeights(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double core() const { return values_.at(0); }
  double path(std::size_t depth) const { return values_.at(depth); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }

  friend bool operator==(const OrbitWeights&, const OrbitWeights&) = default;

 private:
  std::vector<double> values_;
};

// Full consensus matrix. Immutable once assembled; symmetric by
// construction and every row sums to one.
class WeightMatrix {
 public:
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return matrix_.rows(); }
  double operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  friend WeightMatrix assemble_full(const SmhkParams&, const OrbitWeights&);
  explicit WeightMatrix(Matrix m) : matrix_(std::move(m)) {}
  Matrix matrix_;
};

WeightMatrix assemble_full(const SmhkParams& params,
                           const OrbitWeights& weights);

// Block sizes for one invariant subspace, repeated `multiplicity` times in
// the full spectrum.
struct BlockMultiplicities {
  std::size_t uniform = 1;
  std::size_t intra_set = 0;
  std::size_t inter_set = 0;
  std::size_t branch = 0;
};

// Symmetry-adapted blocks of the weight matrix.
//
//   uniform    fully symmetric sector; carries the eigenvalue 1
//   intra_set  zero-sum across the stars of each set
//   inter_set  constant within a set, zero-sum across sets
//   branch     zero-sum across the branches of one star (no central node)
//
// intra_set and inter_set differ from uniform only in entry (0,0); branch
// is uniform with its first row and column removed.
struct BlockSet {
  Matrix uniform;
  Matrix intra_set;
  Matrix inter_set;
  Matrix branch;
  BlockMultiplicities multiplicity;
};

BlockMultiplicities block_multiplicities(const SmhkParams& params);

BlockSet stratify(const SmhkParams& params, const OrbitWeights& weights);

// Eigenvalues of all blocks repeated by multiplicity, sorted descending.
std::vector<double> spectrum_union(const BlockSet& blocks);

struct SpectralResult {
  std::vector<double> eigenvalues;  // descending
  double slem = 0.0;
  double lambda2 = 0.0;     // largest eigenvalue once the Perron one is dropped
  double lambda_min = 0.0;  // smallest eigenvalue
  bool perron_simple = false;
};

// SLEM = max(lambda2, -lambda_min), with exactly one eigenvalue (the one
// nearest 1) set aside as the Perron eigenvalue.
SpectralResult slem_full(const WeightMatrix& w);
SpectralResult slem_of_spectrum(std::vector<double> eigenvalues);

// Same quantity computed from the block spectra only.
double slem_blocks(const BlockSet& blocks);

struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct Corollary1Report {
  std::vector<InequalityCheck> checks;
  bool all_pass() const;
};

// Both interlacing chains between the block extremes:
//   min(inter) <= min(intra) <= min(uniform) <= min(branch)
//   max(branch) <= max(inter) <= max(intra) <= max(uniform) = 1
// each with 1e-10 slack.
Corollary1Report check_corollary1(const BlockSet& blocks);

struct SlacknessReport {
  double s = 0.0;
  double intra_max = 0.0;  // should equal s
  double inter_min = 0.0;  // should equal -s
  bool pass = false;
};

SlacknessReport check_slackness(const BlockSet& blocks, double s,
                                double tolerance = 1e-8);

}  // namespace smhk
