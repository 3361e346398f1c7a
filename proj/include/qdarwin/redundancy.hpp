#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "qdarwin/info.hpp"

namespace qdarwin {

/// Memoized I(S:F) curve for one parameter set. Lookups may run concurrently.
class InfoCurve {
 public:
  explicit InfoCurve(ModelParams p);

  const ModelParams& params() const { return params_; }
  InfoPoint at(int nF) const;

 private:
  ModelParams params_;
  mutable std::shared_mutex mutex_;
  mutable std::map<int, InfoPoint> memo_;
};

struct RedundancyOptions {
  /// Whether nF = nE may qualify. At nF = nE the mutual information also
  /// contains the complementary (quantum) jump, so it is excluded by default.
  bool allow_full_environment = false;
};

struct RedundancyResult {
  double delta = 0.0;
  std::optional<int> nF_delta;
  double R_delta = 0.0;  ///< nE / nF_delta, or 0 when no fragment qualifies
  double plateau = 0.0;
  /// Set when only the whole environment reaches the target (and it was not
  /// allowed to qualify).
  bool reached_only_at_full = false;
};

/// Smallest nF with I(S:F) >= (1 - delta) H(s00), by bisection on the
/// nondecreasing curve. Throws std::invalid_argument for s00 in {0, 1}.
std::optional<int> fragment_size_for_deficit(const InfoCurve& curve, double delta,
                                             const RedundancyOptions& opts = {});
std::optional<int> fragment_size_for_deficit(const ModelParams& p, double delta,
                                             const RedundancyOptions& opts = {});

RedundancyResult redundancy(const InfoCurve& curve, double delta,
                            const RedundancyOptions& opts = {});
RedundancyResult redundancy(const ModelParams& p, double delta,
                            const RedundancyOptions& opts = {});

/// Small-deficit estimate for a hazy, aligned environment:
/// nE ln(2 sqrt(l- l+)) / ln(delta).
double scaling_hazy(double lambda_plus, double lambda_minus, int nE, double delta);

/// Small-deficit estimate for a pure, misaligned environment:
/// nE ln|Lambda_k(t)|^2 / ln(delta). Returns nE when |Lambda_k| = 0 (each
/// qubit is a perfect record); throws std::domain_error when |Lambda_k| = 1.
double scaling_misaligned(double sigma, double t, int nE, double delta);

struct LimitingRedundancy {
  double estimate = 0.0;          ///< extrapolation of -R ln(delta)/nE to 1/ln(delta) -> 0
  std::vector<double> deltas;
  std::vector<double> values;     ///< -R_delta ln(delta) / nE per delta
  std::vector<std::optional<int>> nF_delta;
  bool non_monotone = false;      ///< values wander by more than one staircase step
  bool divergent = false;         ///< outside the scaling regime (nF_delta absent or stuck at 1)
};

/// Evaluates -R_delta ln(delta) / nE on a decreasing grid of deficits and
/// extrapolates linearly in 1/ln(delta).
LimitingRedundancy limiting_redundancy(const InfoCurve& curve, const std::vector<double>& deltas,
                                       const RedundancyOptions& opts = {});
LimitingRedundancy limiting_redundancy(const ModelParams& p, const std::vector<double>& deltas,
                                       const RedundancyOptions& opts = {});

}  // namespace qdarwin
