#pragma once

// Closed-form decoherence factors for H = (1/2) sum_k sigma_S^z sigma_k^z
// and the eigenvalues of the partially decohered system qubit.

#include "qdarwin/states.hpp"

namespace qdarwin {

/// Everything that fixes one evolution of the symmetric model.
struct ModelParams {
  SystemQubit sys;
  EnvQubit env;
  int nE;    ///< environment size, >= 1
  double t;  ///< time; full single-qubit correlation is reached at pi/2

  void validate() const;
};

/// Decoherence factor contributed by one environment qubit with
/// misalignment sigma: cos t - i sigma sin t.
cplx lambda_single(double sigma, double t);

/// Factor of n identical qubits, lambda_single^n. Evaluated in polar form;
/// underflows to 0 for very large n.
cplx lambda_subset(double sigma, double t, int n);

/// Larger eigenvalue of the system after its coherence is scaled by lam.
double kappa(const SystemQubit& sys, cplx lam);

/// Same as kappa with |s01|^2 replaced by s00 s11 (the purified system).
double kappa_tilde(const SystemQubit& sys, cplx lam);

/// Entropy of the system decohered by the whole environment.
double system_entropy(const ModelParams& p);

}  // namespace qdarwin
