#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "obsvkit/errors.hpp"

namespace obsvkit {

enum class TimeDomain { Continuous, Discrete };

const char* to_string(TimeDomain domain);

/// x^+ = A x + B u, y = C x + D u, z = F x.
/// B and D default to zero (m = 0 when no input is modeled); F is optional
/// and analyses that need it refuse with MissingFunctional when absent.
class LtiSystem {
 public:
  LtiSystem(Eigen::MatrixXd A, Eigen::MatrixXd C, TimeDomain domain,
            std::optional<Eigen::MatrixXd> B = {},
            std::optional<Eigen::MatrixXd> D = {},
            std::optional<Eigen::MatrixXd> F = {});

  const Eigen::MatrixXd& A() const { return A_; }
  const Eigen::MatrixXd& B() const { return B_; }
  const Eigen::MatrixXd& C() const { return C_; }
  const Eigen::MatrixXd& D() const { return D_; }
  bool has_functional() const { return F_.has_value(); }
  /// Throws MissingFunctional when no F was provided.
  const Eigen::MatrixXd& F() const;
  TimeDomain domain() const { return domain_; }

  int n() const { return static_cast<int>(A_.rows()); }
  int m() const { return static_cast<int>(B_.cols()); }
  int q() const { return static_cast<int>(C_.rows()); }
  int r() const { return F_ ? static_cast<int>(F_->rows()) : 0; }

 private:
  Eigen::MatrixXd A_, B_, C_, D_;
  std::optional<Eigen::MatrixXd> F_;
  TimeDomain domain_;
};

/// Strictly increasing measurement instants, 0 <= t_1 < t_2 < ... < t_k.
/// Discrete-domain instants must be non-negative integers.
class SamplingSequence {
 public:
  SamplingSequence(std::vector<double> times, TimeDomain domain);

  const std::vector<double>& times() const { return times_; }
  TimeDomain domain() const { return domain_; }
  int count() const { return static_cast<int>(times_.size()); }
  double first() const { return times_.front(); }
  double last() const { return times_.back(); }

  /// Discrete instants as integers; DomainMismatch on a continuous sequence.
  std::vector<long long> integer_times() const;

 private:
  std::vector<double> times_;
  TimeDomain domain_;
};

/// Parse/serialize the system JSON document:
///   {"domain": "discrete"|"continuous", "A": [[...]], "C": [[...]],
///    optional "B", "D", "F"}
LtiSystem parse_system(const std::string& json_text);
std::string serialize_system(const LtiSystem& sys);

/// Parse/serialize the sampling JSON document: {"times": [...]}.
SamplingSequence parse_sampling(const std::string& json_text, TimeDomain domain);
std::string serialize_sampling(const SamplingSequence& seq);

}  // namespace obsvkit
