#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "obsvkit/linalg.hpp"
#include "obsvkit/observability.hpp"
#include "obsvkit/system.hpp"

namespace obsvkit {

/// Classical functional observability of (A, C, F): the functional output
/// can be reconstructed from the outputs even когда the full state cannot.
/// Both equivalent rank characterizations are evaluated; a disagreement
/// beyond tolerance raises NumericalInconsistency instead of guessing.
struct FunctionalObservability {
  bool functionally_observable = false;
  bool via_functional_matrix = false;  // rank(O(A,C); O(A,F)) == rank(O(A,C))
  bool via_functional_rows = false;    // rank(O(A,C); F)      == rank(O(A,C))
  RankResult rank_output;              // rank of O(A, C)
  RankResult rank_stack_matrix;
  RankResult rank_stack_rows;
};

FunctionalObservability is_functionally_observable(const Eigen::MatrixXd& A,
                                                   const Eigen::MatrixXd& C,
                                                   const Eigen::MatrixXd& F,
                                                   std::optional<double> rel_tol = {});

/// Sample-based functional observability: rank(O_s(A,C); O(A,F)) equals
/// rank(O_s(A,C)). This is the exact (necessary and sufficient) test.
struct SampleBasedFunctionalObservability {
  bool observable = false;
  RankResult rank_sampled;  // O_s(A, C)
  RankResult rank_stack;    // (O_s(A, C); O(A, F))
};

SampleBasedFunctionalObservability is_sample_based_functionally_observable(
    const LtiSystem& sys, const Eigen::MatrixXd& F, const SamplingSequence& seq,
    std::optional<double> rel_tol = {});

/// The two necessary-but-not-sufficient sampled rank conditions, obtained by
/// replacing every observability matrix in the classical characterizations
/// with its sample-based counterpart.
struct NecessaryConditions {
  bool sampled_functional_matrix = false;  // rank(O_s(A,C); O_s(A,F)) == rank(O_s(A,C))
  bool functional_rows = false;            // rank(O_s(A,C); F)        == rank(O_s(A,C))
  RankResult rank_sampled;
  RankResult rank_stack_sampled_functional;
  RankResult rank_stack_rows;
};

NecessaryConditions necessary_conditions(const LtiSystem& sys, const Eigen::MatrixXd& F,
                                         const SamplingSequence& seq,
                                         std::optional<double> rel_tol = {});

/// Semantic reconstruction check, independent of the stacked-rank test:
/// every initial state producing zero sampled outputs must produce an
/// identically zero functional output, i.e. null(O_s(A,C)) is contained in
/// null(O(A,F)).
bool functional_reconstruction_check(const LtiSystem& sys, const Eigen::MatrixXd& F,
                                     const SamplingSequence& seq,
                                     std::optional<double> rel_tol = {},
                                     double inclusion_tol = 1e-7);

/// Minimum-norm alpha with F = alpha C when F lies in the row space of C;
/// absent otherwise (residual checked against residual_tol).
std::optional<Eigen::MatrixXd> rowspace_certificate(const Eigen::MatrixXd& C,
                                                    const Eigen::MatrixXd& F,
                                                    double residual_tol = 1e-9);

/// Jordan canonical form data of an LTI system (complex form: complex
/// eigenvalues appear on the diagonal of A_J). Conjugate eigenvalue pairs
/// are placed in adjacent blocks with conjugate chain vectors, and every
/// chain is scaled so the last nonzero entry of its eigenvector is one,
/// which pins the basis deterministically.
struct JordanData {
  Eigen::MatrixXcd A_J;  // exact block structure: eigenvalues + unit superdiagonals
  Eigen::MatrixXcd C_J;  // C T
  Eigen::MatrixXcd F_J;  // F T
  Eigen::MatrixXcd T;    // A_J = T^{-1} A T
  std::vector<int> block_sizes;
  std::vector<Complex> block_eigenvalues;
  bool geometric_multiplicity_one = false;  // no eigenvalue repeated across blocks

  int block_count() const { return static_cast<int>(block_sizes.size()); }
};

/// Computes JordanData. Supported structures: diagonalizable A (blocks all of
/// size one) and eigenvalues of geometric multiplicity one (a single chain
/// per eigenvalue). An eigenvalue with several blocks of which one is larger
/// than 1x1 is rejected with UnsupportedStructure.
JordanData jordan_data(const LtiSystem& sys, const Eigen::MatrixXd& F,
                       std::optional<double> rel_tol = {});

/// Nonsingular block-diagonal matrix commuting with the Jordan form: block j
/// is coefficients[j][0] I + coefficients[j][1] U + ... with U the upper
/// shift matrix of the block's dimension. Nonsingular iff every leading
/// coefficient is nonzero.
struct JordanCommutant {
  std::vector<int> block_sizes;
  std::vector<std::vector<Complex>> coefficients;

  Eigen::MatrixXcd assembled() const;
  bool is_nonsingular(double tol = 1e-12) const;
};

/// Certificate for the relaxed sampling scheme: F_J = alpha C_J Q with alpha
/// real and Q a nonsingular Jordan commutant.
struct RelaxationCertificate {
  Eigen::MatrixXd alpha;  // r x q
  JordanCommutant commutant;
};

/// True iff ||F_J - alpha C_J Q|| < tol and Q is nonsingular. Block sizes
/// that do not match the Jordan data raise InvalidQ.
bool verify_relaxation_certificate(const JordanData& jd, const RelaxationCertificate& cert,
                                   double tol = 1e-8);

/// Best-effort search for a relaxation certificate. Exact (linear algebra
/// only) when A is diagonalizable; alternating least squares with random
/// restarts otherwise. Requires geometric multiplicity one. A returned
/// certificate always verifies; absence does not prove nonexistence outside
/// the diagonalizable case.
std::optional<RelaxationCertificate> find_relaxation_certificate(const JordanData& jd,
                                                                 std::uint64_t seed = 1);

/// Lower offset of the reconstruction horizon: 0 in continuous time,
/// observability index of the functional observable pair minus two (clamped
/// at zero) in discrete time. Metadata only; no rank test consumes it.
int reconstruction_horizon_offset(const LtiSystem& sys, const Eigen::MatrixXd& F,
                                  std::optional<double> rel_tol = {});

}  // namespace obsvkit
