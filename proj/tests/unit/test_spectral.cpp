#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qdarwin/oracle.hpp"
#include "qdarwin/spectral.hpp"

using namespace qdarwin;
using doctest::Approx;
using std::numbers::pi;

namespace {

double factorial(int n) { return std::tgamma(n + 1.0); }

// Explicit factorial sum for d^j_{m'm}(beta) = <j m'| e^{-i beta J_y} |j m>.
double wigner_small_d(int two_j, int two_mp, int two_m, double beta) {
  const int jpm = (two_j + two_m) / 2, jmm = (two_j - two_m) / 2;
  const int jpmp = (two_j + two_mp) / 2, jmmp = (two_j - two_mp) / 2;
  const int mp_minus_m = (two_mp - two_m) / 2;
  const double pref =
      std::sqrt(factorial(jpm) * factorial(jmm) * factorial(jpmp) * factorial(jmmp));
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  double sum = 0.0;
  for (int k = 0; k <= two_j; ++k) {
    const int a = jpm - k, b = jmmp - k, d = k + mp_minus_m;
    if (a < 0 || b < 0 || d < 0) continue;
    const double sign = (d % 2 == 0) ? 1.0 : -1.0;
    sum += sign * std::pow(c, two_j - 2 * k - mp_minus_m) * std::pow(s, 2 * k + mp_minus_m) /
           (factorial(a) * factorial(k) * factorial(b) * factorial(d));
  }
  return pref * sum;
}

double max_abs(const MatrixXc& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<double> dense_fragment_spectrum(const SystemQubit& s, const EnvQubit& e, double t,
                                            int nF) {
  const auto full = oracle::evolve(s, e, t, nF);
  std::vector<int> keep;
  for (int q = 1; q <= nF; ++q) keep.push_back(q);
  auto ev = oracle::eigenvalues(oracle::reduce(full, keep).matrix);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("multiplicities") {
  CHECK(multiplicity(4, 4) == 1);
  CHECK(multiplicity(4, 2) == 3);
  CHECK(multiplicity(4, 0) == 2);
  CHECK(multiplicity(1, 1) == 1);
  CHECK(multiplicity(2, 2) == 1);
  CHECK(multiplicity(2, 0) == 1);
  CHECK_THROWS_AS(multiplicity(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity(4, 6), std::invalid_argument);
  for (int n : {1, 2, 5, 10, 31, 60}) {
    double dim = 0.0;
    for (int tj = n % 2; tj <= n; tj += 2) dim += multiplicity(n, tj) * (tj + 1);
    CHECK(dim == Approx(std::ldexp(1.0, n)).epsilon(1e-14));
  }
}

TEST_CASE("euler angles round trip") {
  const EulerAngles zero = euler_from_unitary(Matrix2c::Identity());
  CHECK(zero.alpha == Approx(0.0));
  CHECK(zero.beta == Approx(0.0));
  CHECK(zero.gamma == Approx(0.0));

  for (double t : {0.3, 1.0, 2.2})
    for (double beta : {0.4, 1.5, 2.9}) {
      const EulerAngles a = euler_from_unitary(su2_from_euler({t, beta, t}));
      CHECK(a.alpha == Approx(t).epsilon(1e-10));
      CHECK(a.beta == Approx(beta).epsilon(1e-10));
      CHECK(a.gamma == Approx(t).epsilon(1e-10));
    }

  // Diagonalizer of the pure equatorial state.
  Matrix2c rho;
  rho << 0.5, 0.5, 0.5, 0.5;
  const Matrix2c u = su2_diagonalizer(rho);
  const EulerAngles a = euler_from_unitary(u);
  CHECK(max_abs(su2_from_euler(a) - u) < 1e-10);
  const Matrix2c diag = u * rho * u.adjoint();
  CHECK(diag(0, 0).real() == Approx(1.0));
  CHECK(std::abs(diag(0, 1)) < 1e-12);
  // |cos(beta/2)| equals the weight of |1> in the upper eigenvector.
  CHECK(std::abs(std::cos(a.beta / 2)) == Approx(std::sqrt(0.5)).epsilon(1e-12));

  CHECK_THROWS_AS(euler_from_unitary(2.0 * Matrix2c::Identity()), std::invalid_argument);
}

TEST_CASE("euler angles reproduce random SU(2)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int i = 0; i < 200; ++i) {
    const EulerAngles in{u(rng), std::abs(u(rng)), u(rng)};
    const Matrix2c m = su2_from_euler(in);
    CHECK(max_abs(su2_from_euler(euler_from_unitary(m)) - m) < 1e-10);
  }
  // Gimbal cases.
  for (double beta : {0.0, pi}) {
    const Matrix2c m = su2_from_euler({0.7, beta, 0.4});
    const EulerAngles a = euler_from_unitary(m);
    CHECK(a.gamma == 0.0);
    CHECK(max_abs(su2_from_euler(a) - m) < 1e-10);
  }
}

TEST_CASE("spin rotation basics") {
  for (int tj : {1, 2, 5, 8}) {
    const MatrixXc id = spin_rotation(tj, {0, 0, 0});
    CHECK(max_abs(id - MatrixXc::Identity(tj + 1, tj + 1)) < 1e-14);
  }
  const EulerAngles a{0.3, 1.1, -0.8};
  CHECK(max_abs(spin_rotation(1, a) - MatrixXc(su2_from_euler(a))) < 1e-12);
}

TEST_CASE("spin rotation matches the factorial sum") {
  for (int tj = 1; tj <= 10; ++tj)
    for (double beta : {0.37, 1.3, 2.71}) {
      const MatrixXc d = spin_rotation(tj, {0.0, beta, 0.0});
      for (int r = 0; r <= tj; ++r)
        for (int c = 0; c <= tj; ++c) {
          const double ref = wigner_small_d(tj, tj - 2 * r, tj - 2 * c, beta);
          CHECK(std::abs(d(r, c) - cplx(ref, 0.0)) < 1e-8);
        }
    }
}

TEST_CASE("spin rotation is unitary up to j = 100") {
  for (int tj : {1, 7, 40, 99, 200}) {
    const MatrixXc r = spin_rotation(tj, {0.9, 1.7, -2.3});
    CHECK(max_abs(r * r.adjoint() - MatrixXc::Identity(tj + 1, tj + 1)) < 1e-10);
  }
}

TEST_CASE("trivial spectra") {
  // Pure pointer state: only one branch, entropy nF h.
  const EnvQubit env = make_env_state(0.3, 0.6);
  for (int nF : {1, 4, 25}) {
    const double h = fragment_entropy(SystemQubit(1.0, 0.0), env, 0.8, nF);
    CHECK(h == Approx(nF * haziness(env)).epsilon(1e-10));
  }
  // Maximally mixed environment.
  const Spectrum s = fragment_spectrum(SystemQubit::pure(0.3), EnvQubit(0.5, 0.0), 1.2, 6);
  for (const auto& e : s.entries())
    if (e.multiplicity > 0) CHECK(e.value == Approx(1.0 / 64).epsilon(1e-12));
  CHECK(spectrum_entropy(s) == Approx(6.0).epsilon(1e-12));
  // No evolution.
  CHECK(fragment_entropy(SystemQubit::pure(0.4), env, 0.0, 9) ==
        Approx(9 * haziness(env)).epsilon(1e-10));
  // Pure aligned environment at full correlation.
  for (int nF : {1, 2, 30, 200})
    CHECK(fragment_entropy(SystemQubit::pure(0.5), make_env_state(0, 1), pi / 2, nF) ==
          Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed form") {
  const EnvQubit env(0.5, 0.25);  // lambda = (3/4, 1/4)
  CHECK(fragment_entropy_closed(SystemQubit::pure(0.5), env, 2) ==
        Approx(1.954434002925).epsilon(1e-12));
  CHECK(fragment_entropy_closed(SystemQubit::pure(0.5), EnvQubit(0.5, 0.5), 17) ==
        Approx(1.0).epsilon(1e-12));
  CHECK(fragment_entropy_closed(SystemQubit::pure(0.5), EnvQubit(0.5, 0.0), 40) ==
        Approx(40.0).epsilon(1e-12));
  // Stays finite and bounded for large fragments.
  const double big = fragment_entropy_closed(SystemQubit::pure(0.2), env, 2000);
  CHECK(big > 2000 * haziness(env));
  CHECK(big <= (2000 * haziness(env) + binary_entropy(0.2)) * (1 + 1e-11));
}

TEST_CASE("closed form agrees with the block path") {
  for (double zeta : {0.2, 0.5, 0.9})
    for (int nF : {1, 3, 12, 40}) {
      const SystemQubit s = SystemQubit::pure(0.3);
      const EnvQubit env = make_env_state(0.0, zeta);
      const double block = spectrum_entropy(fragment_spectrum(s, env, pi / 2, nF));
      CHECK(std::abs(block - fragment_entropy_closed(s, env, nF)) < 1e-9);
    }
}

TEST_CASE("spectrum matches brute force on the worked example") {
  const SystemQubit s(0.3, cplx(0.2, 0.1));
  const EnvQubit env = make_env_state(0.4, 0.7);
  for (int nF = 1; nF <= 10; ++nF) {
    const auto fast = fragment_spectrum(s, env, 0.9, nF).expanded();
    CHECK(max_diff(fast, dense_fragment_spectrum(s, env, 0.9, nF)) < 1e-9);
  }
}

TEST_CASE("spectrum matches brute force on random points") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const int nF = 1 + i % 10;
    const ModelParams p = oracle::random_model(rng, nF);
    const auto fast = fragment_spectrum(p.sys, p.env, p.t, nF).expanded();
    CHECK(max_diff(fast, dense_fragment_spectrum(p.sys, p.env, p.t, nF)) < 1e-9);
  }
}

TEST_CASE("spectrum invariants on random instances") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const int nF = 5 + 7 * (i % 9);
    const ModelParams p = oracle::random_model(rng, nF);
    const Spectrum s = fragment_spectrum(p.sys, p.env, p.t, nF);
    CHECK(s.trace() == Approx(1.0).epsilon(1e-10));
    CHECK(s.dimension() == Approx(std::ldexp(1.0, nF)).epsilon(1e-14));
    for (const auto& e : s.entries()) CHECK(e.value >= 0.0);
    const double h = spectrum_entropy(s);
    CHECK(h <= nF + 1e-9);
    CHECK(h >= nF * haziness(p.env) - 1e-9);
  }
}

TEST_CASE("diagonalizer phases do not matter") {
  const EnvQubit env(0.65, cplx(0.2, 0.25));
  for (double t : {0.4, 1.3}) {
    const Matrix2c up = su2_diagonalizer(rotated_env_state(env, t));
    const Matrix2c down = su2_diagonalizer(rotated_env_state(env, -t));
    const auto base = blocks_spectrum(mixture_blocks({{0.35, up}, {0.65, down}},
                                                     env.lambda_plus(), env.lambda_minus(), 9))
                          .expanded();
    for (double phi : {0.3, 2.0, -1.1}) {
      Matrix2c phase = Matrix2c::Zero();
      phase(0, 0) = std::polar(1.0, phi);
      phase(1, 1) = std::polar(1.0, -phi);
      const auto shifted =
          blocks_spectrum(mixture_blocks({{0.35, phase * up}, {0.65, phase.adjoint() * down}},
                                         env.lambda_plus(), env.lambda_minus(), 9))
              .expanded();
      CHECK(max_diff(base, shifted) < 1e-10);
    }
  }
}

TEST_CASE("large fragments stay normalized") {
  const SystemQubit s(0.4, cplx(0.1, 0.3));
  const EnvQubit env = make_env_state(0.3, 0.8);
  const Spectrum sp = fragment_spectrum(s, env, 0.7, 200);
  CHECK(sp.trace() == Approx(1.0).epsilon(1e-9));
  const double h = spectrum_entropy(sp);
  CHECK(h >= 200 * haziness(env));
  CHECK(h <= 200 * haziness(env) + 1.0);
}

}  // TEST_SUITE
