#include "qdarwin/info.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qdarwin/spectral.hpp"

namespace qdarwin {

namespace {

void check_fragment(const ModelParams& p, int nF) {
  p.validate();
  if (nF < 0 || nF > p.nE) {
    throw std::invalid_argument("fragment size must satisfy 0 <= nF <= nE");
  }
}

// log2(1 + e^x) without overflow.
double softplus_bits(double x) {
  const double sp = x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
  return sp / std::numbers::ln2;
}

}  // namespace

double plateau_level(const SystemQubit& sys) { return binary_entropy(sys.s00()); }

double discord(const ModelParams& p, int nF) {
  check_fragment(p, nF);
  const double sigma = p.env.sigma();
  const double h_full = binary_entropy(kappa(p.sys, lambda_subset(sigma, p.t, p.nE)));
  const double h_rest = binary_entropy(kappa(p.sys, lambda_subset(sigma, p.t, p.nE - nF)));
  return h_full - h_rest;
}

double good_decoherence_mi(const ModelParams& p, int nF) {
  check_fragment(p, nF);
  if (nF == 0) return 0.0;
  if (closed_form_applies(p.env, p.t)) {
    return plateau_level(p.sys) - plateau_deviation(p.sys, p.env, nF);
  }
  return fragment_entropy(p.sys, p.env, p.t, nF) - nF * haziness(p.env);
}

InfoPoint mutual_information(const ModelParams& p, int nF) {
  check_fragment(p, nF);
  InfoPoint out;
  out.nF = nF;
  out.t = p.t;
  if (nF == 0) return out;
  out.fragment_entropy_gain = good_decoherence_mi(p, nF);
  out.discord = discord(p, nF);
  out.mutual_info = out.fragment_entropy_gain + out.discord;
  return out;
}

double mutual_information_pure_env(const ModelParams& p, int nF) {
  check_fragment(p, nF);
  if (!p.env.is_pure()) {
    throw std::invalid_argument("pure-environment closed form requires a pure environment state");
  }
  if (nF == 0) return 0.0;
  const double h_fragment =
      binary_entropy(kappa_tilde(p.sys, lambda_subset(p.env.sigma(), p.t, nF)));
  return h_fragment + discord(p, nF);
}

double discord_approx(const ModelParams& p, int nF) {
  check_fragment(p, nF);
  const double sigma = p.env.sigma();
  const double coherence = 4.0 * std::norm(p.sys.s01());  // <sx>^2 + <sy>^2
  const double gap = std::norm(lambda_subset(sigma, p.t, p.nE - nF)) -
                     std::norm(lambda_subset(sigma, p.t, p.nE));
  const double s00 = p.sys.s00();
  const double s11 = p.sys.s11();
  // log2(s00/s11) / (s00 - s11) -> 2/ln2 as s00 -> 1/2.
  double slope;
  if (std::abs(s00 - s11) < 1e-8) {
    slope = 2.0 / std::numbers::ln2;
  } else if (s00 == 0.0 || s11 == 0.0) {
    return 0.0;
  } else {
    slope = std::log2(s00 / s11) / (s00 - s11);
  }
  return coherence * gap * slope / 4.0;
}

double plateau_deviation(const SystemQubit& sys, const EnvQubit& env, int nF) {
  if (std::abs(env.r00() - 0.5) > 1e-12) {
    throw std::invalid_argument("plateau deviation closed form requires r00 = 1/2");
  }
  if (nF < 1) throw std::invalid_argument("fragment size must be >= 1");
  const double s00 = sys.s00();
  const double s11 = sys.s11();
  if (s00 == 0.0 || s11 == 0.0) return 0.0;
  const double lp = env.lambda_plus();
  const double lm = env.lambda_minus();
  if (lm == 0.0) return 0.0;
  if (lp == lm) return binary_entropy(s00);
  const double log_ratio = std::log(lm / lp);  // < 0
  const double log_s = std::log(s11 / s00);
  const double log_lp = std::log(lp);
  const double log_lm = std::log(lm);
  double dev = 0.0;
  for (int k = 0; k <= nF; ++k) {
    const double lb = log_binomial(nF, k);
    const double w0 = std::exp(lb + std::log(s00) + k * log_lm + (nF - k) * log_lp);
    const double w1 = std::exp(lb + std::log(s11) + (nF - k) * log_lm + k * log_lp);
    dev += w0 * softplus_bits(log_s + (nF - 2 * k) * log_ratio);
    dev += w1 * softplus_bits(-log_s - (nF - 2 * k) * log_ratio);
  }
  return dev;
}

double asymptotic_deviation(double s00, double lambda_plus, double lambda_minus, int nF) {
  if (!(lambda_minus > 0.0) || !(lambda_plus > lambda_minus)) {
    throw std::domain_error("asymptotic deviation needs 0 < lambda_- < lambda_+");
  }
  if (std::abs(lambda_plus + lambda_minus - 1.0) > 1e-9) {
    throw std::domain_error("lambda_+ + lambda_- must equal 1");
  }
  if (nF < 1) throw std::invalid_argument("fragment size must be >= 1");
  const double s11 = 1.0 - s00;
  const double base = 2.0 * std::sqrt(lambda_minus * lambda_plus);
  const double gauss = std::pow(base, nF) / std::sqrt(std::numbers::pi * nF / 2.0);
  return gauss * 2.0 * std::numbers::pi * std::sqrt(s00 * s11) /
         (std::numbers::ln2 * std::log(lambda_plus / lambda_minus));
}

}  // namespace qdarwin
