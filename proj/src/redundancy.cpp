#include "qdarwin/redundancy.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace qdarwin {

InfoCurve::InfoCurve(ModelParams p) : params_(std::move(p)) { params_.validate(); }

InfoPoint InfoCurve::at(int nF) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(nF); it != memo_.end()) return it->second;
  }
  InfoPoint point = mutual_information(params_, nF);
  std::unique_lock lock(mutex_);
  memo_.emplace(nF, point);
  return point;
}

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("deficit must lie in (0, 1)");
}

struct Search {
  std::optional<int> nF;
  bool reached_only_at_full = false;
};

Search search(const InfoCurve& curve, double delta, const RedundancyOptions& opts) {
  check_delta(delta);
  const ModelParams& p = curve.params();
  const double plateau = plateau_level(p.sys);
  if (!(plateau > 0.0)) {
    throw std::invalid_argument("no classical information to record (s00 is 0 or 1)");
  }
  const double target = (1.0 - delta) * plateau;
  auto qualifies = [&](int nF) { return curve.at(nF).mutual_info >= target; };

  Search out;
  int hi = opts.allow_full_environment ? p.nE : p.nE - 1;
  if (hi < 1 || !qualifies(hi)) {
    if (!opts.allow_full_environment && qualifies(p.nE)) out.reached_only_at_full = true;
    return out;
  }
  int lo = 1;
  if (qualifies(lo)) {
    out.nF = lo;
    return out;
  }
  // Invariant: lo fails, hi qualifies.
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    (qualifies(mid) ? hi : lo) = mid;
  }
  out.nF = hi;
  return out;
}

}  // namespace

std::optional<int> fragment_size_for_deficit(const InfoCurve& curve, double delta,
                                             const RedundancyOptions& opts) {
  return search(curve, delta, opts).nF;
}

std::optional<int> fragment_size_for_deficit(const ModelParams& p, double delta,
                                             const RedundancyOptions& opts) {
  return fragment_size_for_deficit(InfoCurve(p), delta, opts);
}

RedundancyResult redundancy(const InfoCurve& curve, double delta, const RedundancyOptions& opts) {
  const Search found = search(curve, delta, opts);
  RedundancyResult r;
  r.delta = delta;
  r.plateau = plateau_level(curve.params().sys);
  r.nF_delta = found.nF;
  r.reached_only_at_full = found.reached_only_at_full;
  if (found.nF) r.R_delta = static_cast<double>(curve.params().nE) / *found.nF;
  return r;
}

RedundancyResult redundancy(const ModelParams& p, double delta, const RedundancyOptions& opts) {
  return redundancy(InfoCurve(p), delta, opts);
}

double scaling_hazy(double lambda_plus, double lambda_minus, int nE, double delta) {
  check_delta(delta);
  if (!(lambda_minus > 0.0) || !(lambda_plus > lambda_minus) || !(lambda_plus < 1.0)) {
    throw std::domain_error("hazy scaling needs 0 < lambda_- < lambda_+ < 1");
  }
  return nE * std::log(2.0 * std::sqrt(lambda_minus * lambda_plus)) / std::log(delta);
}

double scaling_misaligned(double sigma, double t, int nE, double delta) {
  check_delta(delta);
  const double c = std::cos(t);
  const double s = std::sin(t);
  const double decay = c * c + sigma * sigma * s * s;
  // cos(pi/2) is not exactly zero in floating point.
  if (decay < 1e-28) return static_cast<double>(nE);
  if (decay >= 1.0) throw std::domain_error("no decoherence: |Lambda_k| = 1");
  return nE * std::log(decay) / std::log(delta);
}

LimitingRedundancy limiting_redundancy(const InfoCurve& curve, const std::vector<double>& deltas,
                                       const RedundancyOptions& opts) {
  if (deltas.empty()) throw std::invalid_argument("deficit grid is empty");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    check_delta(deltas[i]);
    if (i > 0 && !(deltas[i] < deltas[i - 1])) {
      throw std::invalid_argument("deficit grid must be strictly decreasing");
    }
  }
  LimitingRedundancy out;
  out.deltas = deltas;
  std::vector<double> xs;
  std::vector<int> sizes;
  for (double d : deltas) {
    const auto nF = fragment_size_for_deficit(curve, d, opts);
    out.nF_delta.push_back(nF);
    if (!nF) {
      out.divergent = true;
      out.values.push_back(0.0);
      continue;
    }
    // -R ln(delta) / nE with R = nE / nF.
    out.values.push_back(-std::log(d) / *nF);
    xs.push_back(1.0 / std::log(d));
    sizes.push_back(*nF);
  }
  if (out.divergent || xs.empty()) return out;

  bool all_single = true;
  for (int s : sizes) all_single = all_single && s == 1;
  if (all_single && sizes.size() > 1) out.divergent = true;

  const auto& ys = out.values;
  for (std::size_t i = 2; i < ys.size(); ++i) {
    const double d0 = ys[i - 1] - ys[i - 2];
    const double d1 = ys[i] - ys[i - 1];
    const double jitter0 = std::max(ys[i - 2] / sizes[i - 2], ys[i - 1] / sizes[i - 1]);
    const double jitter1 = std::max(ys[i - 1] / sizes[i - 1], ys[i] / sizes[i]);
    if (d0 * d1 < 0.0 && std::abs(d0) > jitter0 && std::abs(d1) > jitter1) {
      out.non_monotone = true;
    }
  }

  if (xs.size() == 1) {
    out.estimate = ys[0];
    return out;
  }
  // Least-squares line y = a + b x; the limit delta -> 0 is x -> 0.
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  out.estimate = (sy - slope * sx) / n;
  return out;
}

LimitingRedundancy limiting_redundancy(const ModelParams& p, const std::vector<double>& deltas,
                                       const RedundancyOptions& opts) {
  return limiting_redundancy(InfoCurve(p), deltas, opts);
}

}  // namespace qdarwin
