#include "qdarwin/states.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/tools/roots.hpp>

namespace qdarwin {

namespace {

constexpr double kDomainTolerance = 1e-12;

void check_probability(double p, const char* what) {
  if (!(p >= -kDomainTolerance && p <= 1.0 + kDomainTolerance)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

SystemQubit::SystemQubit(double s00, cplx s01) : s00_(s00), s01_(s01) {
  check_probability(s00, "s00");
  s00_ = clamp01(s00);
  if (std::norm(s01_) > s00_ * (1.0 - s00_) + kDomainTolerance) {
    throw std::invalid_argument("system state is not positive: |s01|^2 > s00 s11");
  }
}

SystemQubit SystemQubit::pure(double s00) {
  check_probability(s00, "s00");
  s00 = clamp01(s00);
  return SystemQubit(s00, std::sqrt(s00 * (1.0 - s00)));
}

bool SystemQubit::is_pure(double tol) const {
  return std::abs(std::norm(s01_) - s00_ * s11()) <= tol;
}

EnvQubit::EnvQubit(double r00, cplx r01) : r00_(r00), r01_(r01) {
  check_probability(r00, "r00");
  r00_ = clamp01(r00);
  const double det = r00_ * (1.0 - r00_) - std::norm(r01_);
  if (det < -kDomainTolerance) {
    throw std::invalid_argument("environment state is not positive: |r01|^2 > r00 r11");
  }
  // The smaller root is taken from the determinant to avoid cancellation.
  const double disc = std::sqrt((r00_ - 0.5) * (r00_ - 0.5) + std::norm(r01_));
  const double upper = 0.5 + disc;
  lambda_minus_ = det <= kPureSnap ? 0.0 : det / upper;
  lambda_plus_ = 1.0 - lambda_minus_;
}

bool EnvQubit::is_pure(double tol) const {
  return std::abs(std::norm(r01_) - r00_ * r11()) <= tol;
}

Spectrum::Spectrum(std::vector<SpectrumEntry> entries) {
  entries_.reserve(entries.size());
  for (const auto& e : entries) add(e.value, e.multiplicity);
}

void Spectrum::add(double value, double multiplicity) {
  if (value < -kClampTolerance) {
    throw std::domain_error("negative eigenvalue " + std::to_string(value) +
                            " in density-operator spectrum");
  }
  if (!(multiplicity >= 0.0)) {
    throw std::domain_error("negative multiplicity in spectrum");
  }
  entries_.push_back({std::max(value, 0.0), multiplicity});
}

double Spectrum::trace() const {
  double tr = 0.0;
  for (const auto& e : entries_) tr += e.multiplicity * e.value;
  return tr;
}

double Spectrum::dimension() const {
  double d = 0.0;
  for (const auto& e : entries_) d += e.multiplicity;
  return d;
}

void Spectrum::validate(double tol) const {
  const double tr = trace();
  if (!(std::abs(tr - 1.0) <= tol)) {
    throw std::domain_error("spectrum trace " + std::to_string(tr) + " deviates from 1");
  }
}

std::vector<double> Spectrum::expanded() const {
  std::vector<double> out;
  for (const auto& e : entries_) {
    const auto count = static_cast<std::size_t>(std::llround(e.multiplicity));
    out.insert(out.end(), count, e.value);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double binary_entropy(double x) {
  if (!(x >= -kDomainTolerance && x <= 1.0 + kDomainTolerance))
    throw std::domain_error("binary entropy argument must lie in [0, 1], got " + std::to_string(x));
  x = clamp01(x);
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double spectrum_entropy(const Spectrum& s) {
  s.validate();
  double h = 0.0;
  for (const auto& e : s.entries()) {
    if (e.value > 0.0) h -= e.multiplicity * e.value * std::log2(e.value);
  }
  return h;
}

double haziness(const EnvQubit& e) { return binary_entropy(e.lambda_plus()); }

double misalignment_capacity(const EnvQubit& e) { return binary_entropy(e.r00()); }

EnvQubit make_env_state(double sigma, double zeta) {
  if (!(std::abs(sigma) <= 1.0 + kDomainTolerance)) {
    throw std::invalid_argument("misalignment must satisfy |sigma| <= 1");
  }
  check_probability(zeta, "zeta");
  const double r00 = clamp01(0.5 * (1.0 + sigma));
  return EnvQubit(r00, clamp01(zeta) * std::sqrt(r00 * (1.0 - r00)));
}

EnvQubit env_state_for_haziness(double sigma, double h) {
  const double capacity = misalignment_capacity(make_env_state(sigma, 0.0));
  if (!(h >= -kDomainTolerance && h <= capacity + kDomainTolerance)) {
    throw std::invalid_argument("haziness " + std::to_string(h) +
                                " exceeds the capacity at sigma=" + std::to_string(sigma));
  }
  if (h <= 0.0) return make_env_state(sigma, 1.0);
  if (h >= capacity) return make_env_state(sigma, 0.0);
  // h(zeta) decreases monotonically from the capacity (zeta=0) to 0 (zeta=1).
  auto f = [&](double zeta) { return haziness(make_env_state(sigma, zeta)) - h; };
  boost::math::tools::eps_tolerance<double> tol(50);
  std::uintmax_t iters = 200;
  auto [lo, hi] = boost::math::tools::bisect(f, 0.0, 1.0, tol, iters);
  return make_env_state(sigma, 0.5 * (lo + hi));
}

double inverse_binary_entropy(double h) {
  check_probability(h, "entropy");
  if (h >= 1.0) return 0.5;
  if (h <= 0.0) return 1.0;
  auto f = [&](double x) { return binary_entropy(x) - h; };
  boost::math::tools::eps_tolerance<double> tol(50);
  std::uintmax_t iters = 200;
  auto [lo, hi] = boost::math::tools::bisect(f, 0.5, 1.0, tol, iters);
  return 0.5 * (lo + hi);
}

}  // namespace qdarwin
