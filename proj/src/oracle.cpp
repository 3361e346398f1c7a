#include "qdarwin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qdarwin/info.hpp"

namespace qdarwin::oracle {

namespace {

MatrixXc kron(const MatrixXc& a, const MatrixXc& b) {
  MatrixXc out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixXc system_matrix(const SystemQubit& s) {
  MatrixXc m(2, 2);
  m << s.s00(), s.s01(), std::conj(s.s01()), s.s11();
  return m;
}

MatrixXc env_matrix(const EnvQubit& e) {
  MatrixXc m(2, 2);
  m << e.r00(), e.r01(), std::conj(e.r01()), e.r11();
  return m;
}

// Energy of a computational basis state; bit value 0 is sigma^z = +1.
double energy(std::uint64_t index, int nE) {
  const bool sys_up = ((index >> nE) & 1u) == 0;
  const std::uint64_t env_bits = index & ((std::uint64_t{1} << nE) - 1);
  const int ones = std::popcount(env_bits);
  const double total_z = nE - 2.0 * ones;
  return 0.5 * (sys_up ? 1.0 : -1.0) * total_z;
}

IdentityCheck make_check(std::string name, double oracle, double fast, double tol) {
  const double diff = std::abs(oracle - fast);
  return {std::move(name), oracle, fast, diff, tol, diff <= tol};
}

}  // namespace

DenseState evolve(const SystemQubit& sys, const EnvQubit& env, double t, int nE) {
  if (nE < 0 || nE > kMaxEnvironment) {
    throw std::invalid_argument("oracle environment size must lie in [0, " +
                                std::to_string(kMaxEnvironment) + "]");
  }
  MatrixXc rho = system_matrix(sys);
  const MatrixXc r = env_matrix(env);
  for (int k = 0; k < nE; ++k) rho = kron(rho, r);

  const auto dim = static_cast<std::uint64_t>(rho.rows());
  std::vector<double> e(dim);
  for (std::uint64_t x = 0; x < dim; ++x) e[x] = energy(x, nE);
  for (std::uint64_t y = 0; y < dim; ++y)
    for (std::uint64_t x = 0; x < dim; ++x)
      rho(x, y) *= std::polar(1.0, -(e[x] - e[y]) * t);

  DenseState out{std::move(rho), {}};
  for (int q = 0; q <= nE; ++q) out.qubits.push_back(q);
  return out;
}

DenseState reduce(const DenseState& state, const std::vector<int>& keep) {
  const int n = static_cast<int>(state.qubits.size());
  std::vector<int> kept_pos;
  std::vector<int> traced_pos;
  for (int label : keep) {
    if (std::find(state.qubits.begin(), state.qubits.end(), label) == state.qubits.end()) {
      throw std::invalid_argument("label " + std::to_string(label) + " not in state");
    }
  }
  for (int p = 0; p < n; ++p) {
    const bool kept = std::find(keep.begin(), keep.end(), state.qubits[p]) != keep.end();
    (kept ? kept_pos : traced_pos).push_back(p);
  }

  // Bit of position p within the full index.
  auto bit = [n](int p) { return std::uint64_t{1} << (n - 1 - p); };
  auto spread = [&](std::uint64_t compact, const std::vector<int>& positions) {
    std::uint64_t full = 0;
    const int m = static_cast<int>(positions.size());
    for (int i = 0; i < m; ++i)
      if ((compact >> (m - 1 - i)) & 1u) full |= bit(positions[i]);
    return full;
  };

  const std::uint64_t kdim = std::uint64_t{1} << kept_pos.size();
  const std::uint64_t tdim = std::uint64_t{1} << traced_pos.size();
  std::vector<std::uint64_t> kept_idx(kdim), traced_idx(tdim);
  for (std::uint64_t i = 0; i < kdim; ++i) kept_idx[i] = spread(i, kept_pos);
  for (std::uint64_t i = 0; i < tdim; ++i) traced_idx[i] = spread(i, traced_pos);

  DenseState out;
  out.matrix = MatrixXc::Zero(kdim, kdim);
  for (std::uint64_t c = 0; c < kdim; ++c)
    for (std::uint64_t r = 0; r < kdim; ++r) {
      cplx sum = 0.0;
      for (std::uint64_t e : traced_idx) sum += state.matrix(kept_idx[r] | e, kept_idx[c] | e);
      out.matrix(r, c) = sum;
    }
  for (int p : kept_pos) out.qubits.push_back(state.qubits[p]);
  return out;
}

std::vector<double> eigenvalues(const MatrixXc& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXc> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double entropy(const MatrixXc& m) {
  double h = 0.0;
  for (double v : eigenvalues(m)) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

IdentityReport check_identities(const ModelParams& p, int nF, double tol) {
  p.validate();
  if (nF < 1 || nF > p.nE) throw std::invalid_argument("fragment size must satisfy 1 <= nF <= nE");

  const DenseState full = evolve(p.sys, p.env, p.t, p.nE);
  std::vector<int> frag;
  for (int q = 1; q <= nF; ++q) frag.push_back(q);
  std::vector<int> sys_frag{0};
  sys_frag.insert(sys_frag.end(), frag.begin(), frag.end());

  const DenseState rho_sf = reduce(full, sys_frag);
  const DenseState rho_f = reduce(rho_sf, frag);
  const DenseState rho_s = reduce(rho_sf, {0});
  const double h_s = entropy(rho_s.matrix);
  const double h_f = entropy(rho_f.matrix);
  const double h_sf = entropy(rho_sf.matrix);
  const double nh = nF * haziness(p.env);

  // System decohered only by the rest of the environment.
  const DenseState rest = evolve(p.sys, p.env, p.t, p.nE - nF);
  const double h_s_rest = entropy(reduce(rest, {0}).matrix);

  // Fragment conditioned on a pointer measurement of the system.
  const auto fdim = rho_f.matrix.rows();
  double h_cond = 0.0;
  for (int j = 0; j < 2; ++j) {
    const MatrixXc branch = rho_sf.matrix.block(j * fdim, j * fdim, fdim, fdim);
    const double pj = branch.trace().real();
    if (pj > 0.0) h_cond += pj * entropy(branch / pj);
  }

  const double sigma = p.env.sigma();
  const double fast_h_sf =
      binary_entropy(kappa(p.sys, lambda_subset(sigma, p.t, p.nE - nF))) + nh;
  const InfoPoint fast = mutual_information(p, nF);

  std::vector<double> oracle_spec = eigenvalues(rho_f.matrix);
  std::sort(oracle_spec.begin(), oracle_spec.end(), std::greater<>());
  const std::vector<double> fast_spec = fragment_spectrum(p.sys, p.env, p.t, nF).expanded();
  double spec_diff = 0.0;
  if (fast_spec.size() != oracle_spec.size()) {
    spec_diff = std::numeric_limits<double>::infinity();
  } else {
    for (std::size_t i = 0; i < fast_spec.size(); ++i)
      spec_diff = std::max(spec_diff, std::abs(fast_spec[i] - oracle_spec[i]));
  }

  IdentityReport report{p.nE, nF, {}};
  auto& c = report.checks;
  c.push_back(make_check("H_F", h_f, fragment_entropy(p.sys, p.env, p.t, nF), tol));
  c.push_back(make_check("H_SF", h_sf, fast_h_sf, tol));
  c.push_back(make_check("esf_identity", h_sf, h_s_rest + nh, tol));
  c.push_back(make_check("mutual_info", h_s + h_f - h_sf, fast.mutual_info, tol));
  c.push_back(make_check("discord", h_s - h_sf + h_cond, fast.discord, tol));
  c.push_back(make_check("conditional", h_cond, nh, tol));
  c.push_back({"spectrum", 0.0, spec_diff, spec_diff, tol, spec_diff <= tol});
  return report;
}

ModelParams random_model(std::mt19937_64& rng, int nE) {
  auto uniform = [&rng](double lo, double hi) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  };
  const double s00 = uniform(0.05, 0.95);
  const double s_mag = std::sqrt(s00 * (1.0 - s00)) * uniform(0.0, 1.0);
  const double s_phase = uniform(-std::numbers::pi, std::numbers::pi);
  const double r00 = 0.5 * (1.0 + uniform(-0.95, 0.95));
  const double r_mag = std::sqrt(r00 * (1.0 - r00)) * uniform(0.0, 1.0);
  const double r_phase = uniform(-std::numbers::pi, std::numbers::pi);
  const double t = uniform(0.0, std::numbers::pi);
  return ModelParams{SystemQubit(s00, std::polar(s_mag, s_phase)),
                     EnvQubit(r00, std::polar(r_mag, r_phase)), nE, t};
}

}  // namespace qdarwin::oracle
