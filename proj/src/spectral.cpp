#include "qdarwin/spectral.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "qdarwin/parallel.hpp"

namespace qdarwin {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

// Eigenbasis of J_y for one spin, shared across calls. J_y has the exact
// spectrum -j, ..., j, so the computed eigenvalues are replaced by those.
struct JyBasis {
  MatrixXc vectors;
  Eigen::VectorXd values;
};

std::shared_ptr<const JyBasis> jy_basis(int two_j) {
  static std::shared_mutex mutex;
  static std::map<int, std::shared_ptr<const JyBasis>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(two_j); it != cache.end()) return it->second;
  }
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(spin_jy(two_j));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("J_y eigendecomposition failed");
  }
  auto basis = std::make_shared<JyBasis>();
  basis->vectors = solver.eigenvectors();
  basis->values.resize(two_j + 1);
  for (int k = 0; k <= two_j; ++k) basis->values(k) = -0.5 * two_j + k;
  std::unique_lock lock(mutex);
  return cache.try_emplace(two_j, std::move(basis)).first->second;
}

// e^{-i phi m} for m = j..-j.
Eigen::VectorXcd z_phases(int two_j, double phi) {
  Eigen::VectorXcd out(two_j + 1);
  for (int k = 0; k <= two_j; ++k) {
    const double m = 0.5 * two_j - k;
    out(k) = std::polar(1.0, -phi * m);
  }
  return out;
}

}  // namespace

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c) < 9007199254740992.0 ? std::round(c) : c;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return kNegInf;
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double multiplicity(int n, int two_j) {
  if (n < 1) throw std::invalid_argument("number of spins must be >= 1");
  if (two_j < 0 || two_j > n || (n - two_j) % 2 != 0) {
    throw std::invalid_argument("spin 2j=" + std::to_string(two_j) +
                                " does not occur in " + std::to_string(n) + " spin-1/2 factors");
  }
  const int k = (n - two_j) / 2;
  return binomial(n, k) - binomial(n, k - 1);
}

Matrix2c su2_from_euler(const EulerAngles& a) {
  const double c = std::cos(0.5 * a.beta);
  const double s = std::sin(0.5 * a.beta);
  Matrix2c u;
  u(0, 0) = std::polar(c, -0.5 * (a.alpha + a.gamma));
  u(0, 1) = -std::polar(s, -0.5 * (a.alpha - a.gamma));
  u(1, 0) = std::polar(s, 0.5 * (a.alpha - a.gamma));
  u(1, 1) = std::polar(c, 0.5 * (a.alpha + a.gamma));
  return u;
}

EulerAngles euler_from_unitary(const Matrix2c& u) {
  constexpr double tol = 1e-10;
  const double unitarity = (u * u.adjoint() - Matrix2c::Identity()).cwiseAbs().maxCoeff();
  if (!(unitarity <= tol)) throw std::invalid_argument("matrix is not unitary");
  if (!(std::abs(u.determinant() - 1.0) <= tol)) {
    throw std::invalid_argument("matrix is not special unitary (det != 1)");
  }
  const cplx a = u(0, 0);
  const cplx minus_b = -u(0, 1);
  EulerAngles out;
  out.beta = 2.0 * std::atan2(std::abs(minus_b), std::abs(a));
  constexpr double gimbal = 1e-12;
  if (std::abs(minus_b) < gimbal) {
    out.alpha = -2.0 * std::arg(a);
  } else if (std::abs(a) < gimbal) {
    out.alpha = -2.0 * std::arg(minus_b);
  } else {
    out.alpha = -std::arg(a) - std::arg(minus_b);
    out.gamma = -std::arg(a) + std::arg(minus_b);
  }
  return out;
}

MatrixXc spin_jz(int two_j) {
  MatrixXc jz = MatrixXc::Zero(two_j + 1, two_j + 1);
  for (int k = 0; k <= two_j; ++k) jz(k, k) = 0.5 * two_j - k;
  return jz;
}

MatrixXc spin_jy(int two_j) {
  const double j = 0.5 * two_j;
  MatrixXc jy = MatrixXc::Zero(two_j + 1, two_j + 1);
  // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>, and row k-1 holds m+1.
  for (int k = 1; k <= two_j; ++k) {
    const double m = j - k;
    const double raise = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    jy(k - 1, k) = cplx(0.0, -0.5 * raise);
    jy(k, k - 1) = cplx(0.0, 0.5 * raise);
  }
  return jy;
}

MatrixXc spin_rotation(int two_j, const EulerAngles& a) {
  if (two_j < 0) throw std::invalid_argument("spin must be >= 0");
  if (two_j == 0) return MatrixXc::Identity(1, 1);
  const auto basis = jy_basis(two_j);
  Eigen::VectorXcd beta_phase(two_j + 1);
  for (int k = 0; k <= two_j; ++k) beta_phase(k) = std::polar(1.0, -a.beta * basis->values(k));
  MatrixXc d = basis->vectors * beta_phase.asDiagonal() * basis->vectors.adjoint();
  return z_phases(two_j, a.alpha).asDiagonal() * d * z_phases(two_j, a.gamma).asDiagonal();
}

Matrix2c su2_diagonalizer(const Matrix2c& rho) {
  const cplx a = rho(0, 0);
  const cplx d = rho(1, 1);
  const cplx c = rho(0, 1);
  const double half_gap = 0.5 * (a.real() - d.real());
  const double lam = 0.5 * (a.real() + d.real()) + std::sqrt(half_gap * half_gap + std::norm(c));
  // Two algebraically equivalent eigenvector candidates; keep the larger.
  Eigen::Vector2cd v1(c, lam - a.real());
  Eigen::Vector2cd v2(lam - d.real(), std::conj(c));
  Eigen::Vector2cd v = v1.norm() >= v2.norm() ? v1 : v2;
  const double norm = v.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("cannot diagonalize a scalar 2x2 state");
  v /= norm;
  Matrix2c u;
  u << std::conj(v(0)), std::conj(v(1)), -v(1), v(0);
  return u;
}

Matrix2c rotated_env_state(const EnvQubit& env, double t) {
  Matrix2c rho;
  const cplx off = env.r01() * std::polar(1.0, -t);
  rho << env.r00(), off, std::conj(off), env.r11();
  return rho;
}

std::vector<SpinBlock> mixture_blocks(const std::vector<SymmetricBranch>& branches,
                                      double l_up, double l_down, int n) {
  if (n < 1) throw std::invalid_argument("fragment size must be >= 1");
  std::vector<EulerAngles> angles;
  angles.reserve(branches.size());
  for (const auto& b : branches) angles.push_back(euler_from_unitary(b.diagonalizer));

  const int count = n / 2 + 1;
  std::vector<SpinBlock> blocks(count);
  // Largest spins first; they dominate the cost.
  parallel_for(count, n >= 24 ? default_threads() : 1u, [&](std::size_t idx) {
    const int two_j = n - 2 * static_cast<int>(idx);
    SpinBlock& block = blocks[idx];
    block.two_j = two_j;
    block.multiplicity = multiplicity(n, two_j);

    Eigen::VectorXd m_diag(two_j + 1);
    const int up0 = (n + two_j) / 2;
    const int down0 = (n - two_j) / 2;
    for (int k = 0; k <= two_j; ++k) {
      m_diag(k) = std::pow(l_up, up0 - k) * std::pow(l_down, down0 + k);
    }
    if (m_diag.maxCoeff() <= 0.0) return;

    MatrixXc a = MatrixXc::Zero(two_j + 1, two_j + 1);
    for (std::size_t b = 0; b < branches.size(); ++b) {
      if (branches[b].weight == 0.0) continue;
      // A rotation with beta = 0 is diagonal and commutes with M_j.
      if (angles[b].beta == 0.0) {
        a.diagonal() += branches[b].weight * m_diag.cast<cplx>();
        continue;
      }
      const MatrixXc r = spin_rotation(two_j, angles[b]);
      a.noalias() += branches[b].weight * (r.adjoint() * (m_diag.asDiagonal() * r));
    }
    block.matrix = 0.5 * (a + a.adjoint());
  });
  return blocks;
}

std::vector<SpinBlock> fragment_blocks(const SystemQubit& sys, const EnvQubit& env, double t,
                                       int nF) {
  if (nF < 1) throw std::invalid_argument("fragment size must be >= 1");
  // A diagonal rho_r commutes with the evolution: rho_F(t) = rho_r^{(x) nF}.
  if (std::abs(env.r01()) == 0.0) {
    return mixture_blocks({{1.0, Matrix2c::Identity()}}, env.r00(), env.r11(), nF);
  }
  std::vector<SymmetricBranch> branches;
  if (sys.s00() > 0.0) branches.push_back({sys.s00(), su2_diagonalizer(rotated_env_state(env, t))});
  if (sys.s11() > 0.0) branches.push_back({sys.s11(), su2_diagonalizer(rotated_env_state(env, -t))});
  return mixture_blocks(branches, env.lambda_plus(), env.lambda_minus(), nF);
}

Spectrum blocks_spectrum(const std::vector<SpinBlock>& blocks) {
  Spectrum s;
  for (const auto& block : blocks) {
    if (block.matrix.size() == 0) {
      s.add(0.0, block.multiplicity * (block.two_j + 1));
      continue;
    }
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(block.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("block eigendecomposition failed");
    }
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
      s.add(solver.eigenvalues()(k), block.multiplicity);
    }
  }
  return s;
}

Spectrum fragment_spectrum(const SystemQubit& sys, const EnvQubit& env, double t, int nF) {
  Spectrum s = blocks_spectrum(fragment_blocks(sys, env, t, nF));
  const double tr = s.trace();
  if (!(std::abs(tr - 1.0) <= 1e-9)) {
    throw std::runtime_error("fragment spectrum trace " + std::to_string(tr) +
                             " deviates from 1 (internal consistency)");
  }
  return s;
}

bool closed_form_applies(const EnvQubit& env, double t) {
  return std::abs(env.r00() - 0.5) <= 1e-12 && std::abs(std::cos(t)) <= 1e-12;
}

double fragment_entropy(const SystemQubit& sys, const EnvQubit& env, double t, int nF) {
  if (closed_form_applies(env, t)) return fragment_entropy_closed(sys, env, nF);
  return spectrum_entropy(fragment_spectrum(sys, env, t, nF));
}

double fragment_entropy_closed(const SystemQubit& sys, const EnvQubit& env, int nF) {
  if (std::abs(env.r00() - 0.5) > 1e-12) {
    throw std::invalid_argument("closed-form fragment entropy requires r00 = 1/2");
  }
  if (nF < 1) throw std::invalid_argument("fragment size must be >= 1");
  const double log_s00 = safe_log(sys.s00());
  const double log_s11 = safe_log(sys.s11());
  const double log_up = safe_log(env.lambda_plus());
  const double log_down = safe_log(env.lambda_minus());
  auto scaled = [](int power, double log_base) {
    return power == 0 ? 0.0 : power * log_base;
  };
  double h = 0.0;
  for (int k = 0; k <= nF; ++k) {
    const double log_lam = log_add_exp(log_s00 + scaled(k, log_down) + scaled(nF - k, log_up),
                                       log_s11 + scaled(nF - k, log_down) + scaled(k, log_up));
    if (log_lam == kNegInf) continue;
    h -= std::exp(log_binomial(nF, k) + log_lam) * log_lam;
  }
  return h / std::numbers::ln2;
}

}  // namespace qdarwin
