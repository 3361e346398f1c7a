#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qdarwin/decoherence.hpp"

using namespace qdarwin;
using doctest::Approx;
using std::numbers::pi;

TEST_SUITE("decoherence") {

TEST_CASE("single-qubit factor") {
  CHECK(std::abs(lambda_single(0.0, pi / 2)) < 1e-15);
  for (double t : {0.1, 1.0, 2.5}) CHECK(std::abs(lambda_single(1.0, t)) == Approx(1.0));
  const cplx l = lambda_single(0.8, pi / 4);
  CHECK(l.real() == Approx(0.7071068).epsilon(1e-7));
  CHECK(l.imag() == Approx(-0.5656854).epsilon(1e-7));
  CHECK(std::norm(l) == Approx(0.82).epsilon(1e-14));
}

TEST_CASE("subset factor") {
  CHECK(lambda_subset(0.3, 1.1, 0) == cplx(1.0, 0.0));
  CHECK(std::abs(lambda_subset(0.0, pi / 2, 5)) < 1e-75);
  const cplx l = lambda_subset(0.8, pi / 2, 2);
  CHECK(l.real() == Approx(-0.64).epsilon(1e-14));
  CHECK(std::abs(l.imag()) < 1e-14);
  CHECK(std::norm(l) == Approx(0.4096).epsilon(1e-14));
}

TEST_CASE("subset factor is multiplicative") {
  for (double sigma : {-0.5, 0.2, 0.9})
    for (double t : {0.3, 1.2, 2.9})
      for (int m : {0, 3, 17})
        for (int n : {1, 8, 50}) {
          const cplx lhs = lambda_subset(sigma, t, m + n);
          const cplx rhs = lambda_subset(sigma, t, m) * lambda_subset(sigma, t, n);
          CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
}

TEST_CASE("factor magnitude bound") {
  for (int i = 0; i <= 40; ++i) {
    const double sigma = -1.0 + i / 20.0;
    for (int k = 0; k <= 40; ++k) {
      const double t = k * pi / 40;
      const double mag = std::abs(lambda_single(sigma, t));
      CHECK(mag <= 1.0 + 1e-15);
      const bool unit = std::abs(std::abs(sigma) - 1.0) < 1e-12 || k == 0 || k == 40;
      if (!unit) CHECK(mag < 1.0 - 1e-12);
    }
  }
}

TEST_CASE("kappa") {
  const SystemQubit pure = SystemQubit::pure(0.5);
  CHECK(kappa(pure, 1.0) == Approx(1.0));
  CHECK(kappa(pure, 0.0) == Approx(0.5));
  CHECK(kappa(pure, 0.5) == Approx(0.75));
  CHECK(binary_entropy(kappa(pure, 0.5)) == Approx(0.811278124459).epsilon(1e-12));
  CHECK_THROWS(kappa(pure, 1.1));

  const SystemQubit s(0.3, cplx(0.1, 0.2));
  double prev = kappa(s, 0.0);
  CHECK(prev == Approx(0.7));
  for (int i = 1; i <= 20; ++i) {
    const double k = kappa(s, std::polar(i / 20.0, 0.3 * i));
    CHECK(k >= prev - 1e-15);
    prev = k;
  }
}

TEST_CASE("kappa tilde") {
  for (double s00 : {0.1, 0.5, 0.8}) {
    const SystemQubit p = SystemQubit::pure(s00);
    for (double mag : {0.0, 0.3, 1.0}) CHECK(kappa_tilde(p, mag) == Approx(kappa(p, mag)));
    const SystemQubit mixed(s00, 0.0);
    CHECK(kappa_tilde(mixed, 0.0) == Approx(std::max(s00, 1.0 - s00)));
  }
  CHECK(kappa_tilde(SystemQubit(0.5, 0.0), 1.0) == Approx(1.0));
}

TEST_CASE("system entropy") {
  CHECK(system_entropy({SystemQubit::pure(0.5), make_env_state(0.3, 0.6), 10, 0.0}) ==
        Approx(0.0).epsilon(1e-12));
  for (int nE : {1, 2, 50})
    CHECK(system_entropy({SystemQubit::pure(0.5), make_env_state(0.0, 1.0), nE, pi / 2}) ==
          Approx(1.0));
  // |Lambda_E|^2 = 0.4096, kappa = 0.82.
  CHECK(system_entropy({SystemQubit::pure(0.5), make_env_state(0.8, 1.0), 2, pi / 2}) ==
        Approx(0.680077045728).epsilon(1e-12));
}

TEST_CASE("system entropy is symmetric under t -> 2pi - t") {
  const SystemQubit s(0.4, cplx(0.2, -0.3));
  for (double t : {0.2, 0.9, 2.0, 3.0}) {
    const ModelParams a{s, make_env_state(0.35, 0.5), 7, t};
    const ModelParams b{s, make_env_state(0.35, 0.5), 7, 2 * pi - t};
    CHECK(system_entropy(a) == Approx(system_entropy(b)).epsilon(1e-13));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS((ModelParams{SystemQubit::pure(0.5), make_env_state(0, 1), 0, 1.0}.validate()),
                  std::invalid_argument);
}

}  // TEST_SUITE
