#pragma once

// Mutual information between the system and an environment fragment,
// split into the fragment's entropy gain and the pointer-basis discord:
//
//   I(S:F) = [H_F(t) - nF h] + [H(kappa_E) - H(kappa_{E/F})].

#include "qdarwin/decoherence.hpp"

namespace qdarwin {

struct InfoPoint {
  int nF = 0;
  double t = 0.0;
  double mutual_info = 0.0;
  double discord = 0.0;
  double fragment_entropy_gain = 0.0;  ///< H_F(t) - nF h
};

/// H(s00): the classical plateau level, i.e. the entropy of the fully
/// decohered system.
double plateau_level(const SystemQubit& sys);

InfoPoint mutual_information(const ModelParams& p, int nF);

/// Closed form for a pure environment via the purified system:
/// H(kappa~_F) + H(kappa_E) - H(kappa_{E/F}). Throws std::invalid_argument
/// for a mixed environment.
double mutual_information_pure_env(const ModelParams& p, int nF);

/// Discord with respect to the sigma^z pointer basis.
double discord(const ModelParams& p, int nF);

/// First-order expansion of the discord in |Lambda|^2, proportional to
/// <sigma^x>_0^2 + <sigma^y>_0^2. Only meaningful under good decoherence.
double discord_approx(const ModelParams& p, int nF);

/// H_F(t) - nF h, the mutual information when the discord is neglected.
double good_decoherence_mi(const ModelParams& p, int nF);

/// Exact H(s00) - I(S:F) for r00 = 1/2 at t = pi/2, summed term by term so
/// that no cancellation occurs even when the deviation is ~1e-15 or smaller.
double plateau_deviation(const SystemQubit& sys, const EnvQubit& env, int nF);

/// Large-fragment approximation of plateau_deviation,
/// (2 sqrt(l- l+))^nF / sqrt(pi nF / 2) * 2 pi sqrt(s00 s11) / (ln2 ln(l+/l-)).
/// Throws std::domain_error when l- = 0 or l+ = l-.
double asymptotic_deviation(double s00, double lambda_plus, double lambda_minus, int nF);

}  // namespace qdarwin
