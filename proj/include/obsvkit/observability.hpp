#pragma once

#include <optional>

#include <Eigen/Dense>

#include "obsvkit/linalg.hpp"
#include "obsvkit/system.hpp"

namespace obsvkit {

/// Observable canonical decomposition of a pair (A, C): an orthogonal P_o
/// with A_o = P_o^{-1} A P_o block lower-triangular, C_o = C P_o with zero
/// right block, observable block first.  p is the unobservable dimension.
struct ObservableDecomposition {
  Eigen::MatrixXd P_o;
  Eigen::MatrixXd A_o;
  Eigen::MatrixXd C_o;
  Eigen::MatrixXd A_ob;   // (n-p) x (n-p)
  Eigen::MatrixXd C_ob;   // q x (n-p)
  int p = 0;
  int observability_index = 0;  // nu of (A_ob, C_ob); 0 for an empty block
  RankResult rank;              // rank of O(A, C)
};

/// O(A, C) = (C; CA; ...; CA^{n-1}), stacked qn x n.
Eigen::MatrixXd observability_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C);

/// Sample-based observability matrix: rows C_like e^{A t_i} (continuous) or
/// C_like A^{t_i} (discrete), stacked in sequence order. The sequence fixes
/// the domain.
Eigen::MatrixXd sampled_observability_matrix(const Eigen::MatrixXd& A,
                                             const Eigen::MatrixXd& C_like,
                                             const SamplingSequence& seq);

/// System-level variant; rejects a sequence whose domain disagrees with the
/// system (DomainMismatch).
Eigen::MatrixXd sampled_observability_matrix(const LtiSystem& sys,
                                             const Eigen::MatrixXd& C_like,
                                             const SamplingSequence& seq);

struct SampleBasedObservability {
  bool observable = false;  // rank(O_s(A, C)) == n
  RankResult rank;
};

SampleBasedObservability is_sample_based_observable(const LtiSystem& sys,
                                                    const SamplingSequence& seq,
                                                    std::optional<double> rel_tol = {});

ObservableDecomposition observable_decomposition(const Eigen::MatrixXd& A,
                                                 const Eigen::MatrixXd& C,
                                                 std::optional<double> rel_tol = {});

/// Smallest nu with rank(C; CA; ...; CA^{nu-1}) = n. NotObservable when the
/// pair is not observable.
int observability_index(const Eigen::MatrixXd& A, const Eigen::MatrixXd& C,
                        std::optional<double> rel_tol = {});

/// Hypothesis and conclusion of the observable-subspace sampling theorem,
/// flagged independently: hypothesis rank(O_s(A_ob, C_ob)) = n - p, and
/// conclusion null(O_s(A, C)) = null(O(A, C)).
struct SubspaceSamplingReport {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
  int p = 0;
  RankResult rank_sampled_observable_block;
  RankResult rank_sampled;
  RankResult rank_classical;
};

SubspaceSamplingReport check_subspace_sampling(const LtiSystem& sys,
                                               const SamplingSequence& seq,
                                               std::optional<double> rel_tol = {});

}  // namespace obsvkit
