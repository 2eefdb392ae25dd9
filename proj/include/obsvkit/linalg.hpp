#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "obsvkit/errors.hpp"

namespace obsvkit {

using Complex = std::complex<double>;

/// Result of an SVD-based rank decision. The singular values and the
/// threshold they were compared against are kept so every rank claim made
/// downstream stays auditable.
struct RankResult {
  int rank = 0;
  std::vector<double> singular_values;  // non-increasing
  double tolerance_used = 0.0;
};

/// Spectrum of a square real matrix, clustered into distinct eigenvalues.
/// `indices[i]` is the size of the largest Jordan block of eigenvalue i
/// (computed by rank stabilization of (A - lambda I)^k, not a Jordan form).
struct EigenStructure {
  std::vector<Complex> distinct_eigenvalues;
  std::vector<int> algebraic_multiplicities;
  std::vector<int> indices;
  bool ambiguous_clustering = false;  // two clusters closer than 2*tol

  int distinct_count() const { return static_cast<int>(distinct_eigenvalues.size()); }
  int index_sum() const;  // d = sum of indices
};

class RankDeficientError : public Error {
 public:
  RankDeficientError(const std::string& what, RankResult rank)
      : Error(ErrorCode::RankDeficientRegressor, what), rank_result(std::move(rank)) {}

  RankResult rank_result;
};

/// Global relative rank tolerance override (threshold = rel * sigma_max).
/// Unset by default; the CLI wires OBSVKIT_TOL through here.
void set_rank_tolerance_override(std::optional<double> rel);
std::optional<double> rank_tolerance_override();

/// Rank by singular-value thresholding. `tol` is an absolute threshold on
/// the singular values; when absent the threshold is rel * sigma_max with
/// rel = override or max(rows, cols) * machine epsilon.
RankResult rank_of(const Eigen::MatrixXcd& M, std::optional<double> tol = {});
RankResult rank_of(const Eigen::MatrixXd& M, std::optional<double> tol = {});

/// Same decision rule with an explicit relative threshold.
RankResult rank_of_relative(const Eigen::MatrixXcd& M, std::optional<double> rel_tol);
RankResult rank_of_relative(const Eigen::MatrixXd& M, std::optional<double> rel_tol);

/// Orthonormal basis of the right null space; cols - rank columns.
Eigen::MatrixXcd null_space_basis(const Eigen::MatrixXcd& M, std::optional<double> tol = {});
Eigen::MatrixXd null_space_basis(const Eigen::MatrixXd& M, std::optional<double> tol = {});

/// True iff the two orthonormal column sets span the same subspace: equal
/// dimension and every column of one has projection residual < tol on the
/// span of the other. Non-orthonormal input -> InvalidBasis.
bool subspaces_equal(const Eigen::MatrixXcd& B1, const Eigen::MatrixXcd& B2, double tol);
bool subspaces_equal(const Eigen::MatrixXd& B1, const Eigen::MatrixXd& B2, double tol);

/// e^{At} for square real A.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& A, double t);

/// A^t by binary exponentiation, t >= 0; A^0 = I.
Eigen::MatrixXd matrix_power(const Eigen::MatrixXd& A, long long t);
Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& A, long long t);

/// Cluster the spectrum of A within cluster_tol (default 1e-8 * ||A||) and
/// compute each eigenvalue's index.
EigenStructure eigenstructure(const Eigen::MatrixXd& A,
                              std::optional<double> cluster_tol = {});

/// Minimizer of ||Phi x - Y||^2 via column-pivoted QR. Phi must have full
/// column rank; otherwise RankDeficientError carrying the RankResult.
Eigen::MatrixXd solve_least_squares(const Eigen::MatrixXd& Phi, const Eigen::MatrixXd& Y);

/// Drops an imaginary part that should only be rounding residue.
/// Throws NumericalInconsistency when it exceeds tol * max(1, ||M||).
Eigen::MatrixXd real_part_checked(const Eigen::MatrixXcd& M, double tol = 1e-10);

}  // namespace obsvkit
