#include "qdarwin/decoherence.hpp"

#include <cmath>
#include <stdexcept>

namespace qdarwin {

namespace {

double kappa_from_coherence(const SystemQubit& sys, double coherence_sq, cplx lam) {
  if (std::abs(lam) > 1.0 + 1e-12) {
    throw std::invalid_argument("decoherence factor must satisfy |lambda| <= 1");
  }
  const double d = sys.s11() - sys.s00();
  return 0.5 * (1.0 + std::sqrt(d * d + 4.0 * coherence_sq * std::norm(lam)));
}

}  // namespace

void ModelParams::validate() const {
  if (nE < 1) throw std::invalid_argument("environment size must be >= 1");
  if (!std::isfinite(t)) throw std::invalid_argument("time must be finite");
}

cplx lambda_single(double sigma, double t) {
  return {std::cos(t), -sigma * std::sin(t)};
}

cplx lambda_subset(double sigma, double t, int n) {
  if (n < 0) throw std::invalid_argument("subset size must be >= 0");
  if (n == 0) return {1.0, 0.0};
  const cplx single = lambda_single(sigma, t);
  const double r = std::abs(single);
  if (r == 0.0) return {0.0, 0.0};
  const double modulus = std::exp(n * std::log(r));
  const double phase = n * std::arg(single);
  return std::polar(modulus, phase);
}

double kappa(const SystemQubit& sys, cplx lam) {
  return kappa_from_coherence(sys, std::norm(sys.s01()), lam);
}

double kappa_tilde(const SystemQubit& sys, cplx lam) {
  return kappa_from_coherence(sys, sys.s00() * sys.s11(), lam);
}

double system_entropy(const ModelParams& p) {
  p.validate();
  return binary_entropy(kappa(p.sys, lambda_subset(p.env.sigma(), p.t, p.nE)));
}

}  // namespace qdarwin
