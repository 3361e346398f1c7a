#pragma once

// Brute-force simulation of the system plus a small environment in the full
// 2^(nE+1) dimensional Hilbert space. Slow and memory hungry, but shares no
// code path with the block-diagonal engine, so it serves as ground truth.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qdarwin/decoherence.hpp"
#include "qdarwin/spectral.hpp"

namespace qdarwin::oracle {

/// Largest environment evolve() accepts (the SE matrix is then 8192 x 8192).
inline constexpr int kMaxEnvironment = 12;

/// Density matrix over an ordered list of qubit labels. Label 0 is the
/// system, labels 1..nE the environment. The first label is the most
/// significant bit of the matrix index.
struct DenseState {
  MatrixXc matrix;
  std::vector<int> qubits;
};

/// rho(t) = U(t) (rho_S (x) rho_r^{(x) nE}) U(t)^dagger for
/// H = (1/2) sigma_S^z sum_k sigma_k^z. Throws std::invalid_argument when
/// nE exceeds kMaxEnvironment.
DenseState evolve(const SystemQubit& sys, const EnvQubit& env, double t, int nE);

/// Partial trace onto `keep`. Labels in the result follow their order in
/// `state`. Throws std::invalid_argument for labels not present.
DenseState reduce(const DenseState& state, const std::vector<int>& keep);

/// Eigenvalues in ascending order.
std::vector<double> eigenvalues(const MatrixXc& m);

/// Von Neumann entropy in bits.
double entropy(const MatrixXc& m);

struct IdentityCheck {
  std::string name;
  double oracle;
  double fast;
  double diff;
  double tol;
  bool passed;
};

struct IdentityReport {
  int nE;
  int nF;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

/// Compares the fast engine against brute force for one fragment of nF
/// qubits:
///   H_F, H_SF        entropies of the reduced states
///   esf_identity     H_SF = H_{S decohered by E/F} + nF h
///   mutual_info      H_S + H_F - H_SF against the fast mutual information
///   discord          H_S - H_SF + H_{F|Pi_S} against the fast discord
///   conditional      H_{F|Pi_S} = nF h
///   spectrum         max eigenvalue difference of rho_F
IdentityReport check_identities(const ModelParams& p, int nF, double tol = 1e-9);

/// Reproducible generic parameter draw (complex coherences, mixed states,
/// arbitrary time) independent of the standard library's distributions.
ModelParams random_model(std::mt19937_64& rng, int nE);

}  // namespace qdarwin::oracle
