#pragma once

// Exact spectrum of the fragment state
//
//   rho_F(t) = s00 rho~(t)^{(x) n} + s11 rho~(-t)^{(x) n},
//   rho~(t)  = V(t) rho_r V(t)^dagger,  V(t) = exp(-i t sigma^z / 2),
//
// without ever forming the 2^n x 2^n matrix. Each tensor power is brought
// to diag(lambda_+, lambda_-)^{(x) n} by an SU(2) rotation. In the coupled
// total-spin basis |j, m> that diagonal operator is diag(M_j) repeated B_j
// times, and the SU(2) rotation acts as the spin-j Wigner matrix D^j on
// every copy. So rho_F is block diagonal with one (2j+1)-dimensional block
// per j, each carrying multiplicity B_j. Cost is polynomial in n.

#include <vector>

#include <Eigen/Dense>

#include "qdarwin/states.hpp"

namespace qdarwin {

using Matrix2c = Eigen::Matrix2cd;
using MatrixXc = Eigen::MatrixXcd;

/// z-y-z Euler angles of an SU(2) rotation.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// One total-spin block of a permutation-symmetric operator. j = two_j / 2.
/// Basis order is m = j, j-1, ..., -j.
struct SpinBlock {
  int two_j;
  MatrixXc matrix;
  double multiplicity;
};

/// Number of times spin j = two_j/2 occurs in n spin-1/2 factors:
/// C(n, n/2 - j) - C(n, n/2 - j - 1). Throws std::invalid_argument when j has
/// the wrong parity or lies outside [0, n/2]. Exact below 2^53.
double multiplicity(int n, int two_j);

/// Binomial coefficient as a double (exact below 2^53).
double binomial(int n, int k);

/// log C(n, k) via lgamma.
double log_binomial(int n, int k);

/// The spin-1/2 rotation e^{-i alpha Jz} e^{-i beta Jy} e^{-i gamma Jz}.
Matrix2c su2_from_euler(const EulerAngles& a);

/// Euler angles reproducing a special-unitary 2x2 matrix entrywise, with
/// beta in [0, pi]. When beta is 0 or pi only alpha+gamma (resp. alpha-gamma)
/// is defined; gamma is then fixed to 0. Throws std::invalid_argument if U is
/// not unitary or det U != 1 (tolerance 1e-10).
EulerAngles euler_from_unitary(const Matrix2c& u);

/// Angular momentum matrices for spin j in the basis m = j..-j.
MatrixXc spin_jz(int two_j);
MatrixXc spin_jy(int two_j);

/// Spin-j representation of the rotation with the given Euler angles.
/// The beta factor is evaluated through the eigenbasis of J_y, which stays
/// accurate for large j where the factorial sum cancels catastrophically.
MatrixXc spin_rotation(int two_j, const EulerAngles& a);

/// SU(2) matrix U with U rho U^dagger = diag(lambda_+, lambda_-); rows are the
/// conjugated eigenvectors, lambda_+ first. rho must not be proportional to
/// the identity and must have a nonzero off-diagonal element.
Matrix2c su2_diagonalizer(const Matrix2c& rho);

/// V(t) rho_r V(t)^dagger for one environment qubit.
Matrix2c rotated_env_state(const EnvQubit& env, double t);

/// One weighted term w * (U^dagger diag(l_up, l_down) U)^{(x) n} of a
/// permutation-symmetric mixture.
struct SymmetricBranch {
  double weight;
  Matrix2c diagonalizer;  ///< SU(2)
};

/// Block decomposition of sum_b w_b (U_b^dagger diag(l_up, l_down) U_b)^{(x) n}.
/// Blocks whose M_j vanishes identically are returned with an empty matrix.
std::vector<SpinBlock> mixture_blocks(const std::vector<SymmetricBranch>& branches,
                                      double l_up, double l_down, int n);

/// Spin blocks of rho_F(t) for a fragment of nF qubits.
std::vector<SpinBlock> fragment_blocks(const SystemQubit& sys, const EnvQubit& env, double t,
                                       int nF);

/// Eigenvalues of a block list, each repeated by the block multiplicity.
/// Vanishing blocks contribute a single zero entry of the right dimension.
Spectrum blocks_spectrum(const std::vector<SpinBlock>& blocks);

/// Exact spectrum of rho_F(t). Throws std::runtime_error if its trace
/// deviates from 1 by more than 1e-9.
Spectrum fragment_spectrum(const SystemQubit& sys, const EnvQubit& env, double t, int nF);

/// H_F(t). Uses fragment_entropy_closed when r00 = 1/2 and t = pi/2 mod pi.
double fragment_entropy(const SystemQubit& sys, const EnvQubit& env, double t, int nF);

/// True when rho_F is diagonal in a shared product basis (r00 = 1/2 and
/// cos t = 0), where the closed forms apply.
bool closed_form_applies(const EnvQubit& env, double t);

/// H_F(pi/2) for r00 = 1/2 as a binomial sum over the degenerate eigenvalues
/// s00 l-^k l+^{n-k} + s11 l-^{n-k} l+^k. Stable for n in the thousands.
double fragment_entropy_closed(const SystemQubit& sys, const EnvQubit& env, int nF);

}  // namespace qdarwin
