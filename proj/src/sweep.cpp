#include "qdarwin/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "qdarwin/oracle.hpp"
#include "qdarwin/parallel.hpp"
#include "qdarwin/redundancy.hpp"
#include "qdarwin/spectral.hpp"

#ifndef QDARWIN_VERSION
#define QDARWIN_VERSION "0.0.0"
#endif

namespace qdarwin::cli {

using nlohmann::json;

std::string version() { return QDARWIN_VERSION; }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double plain_number(const std::string& text) {
  std::size_t used = 0;
  double v;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not a number: '" + text + "'");
  return v;
}

long plain_integer(const std::string& text) {
  std::size_t used = 0;
  long v;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

const char* axis_name(EnvAxis a) {
  switch (a) {
    case EnvAxis::Zeta: return "zeta";
    case EnvAxis::Haziness: return "h";
    case EnvAxis::HazinessRatio: return "h_ratio";
  }
  return "zeta";
}

struct EnvPoint {
  EnvQubit env;
  double sigma;
  double zeta;
  double h;
  double h_ratio;
};

EnvPoint make_env(double sigma, EnvAxis axis, double value) {
  EnvQubit env = [&] {
    switch (axis) {
      case EnvAxis::Haziness: return env_state_for_haziness(sigma, value);
      case EnvAxis::HazinessRatio:
        return env_state_for_haziness(sigma,
                                      value * misalignment_capacity(make_env_state(sigma, 0.0)));
      case EnvAxis::Zeta: break;
    }
    return make_env_state(sigma, value);
  }();
  const double pop = env.r00() * env.r11();
  const double zeta = pop > 0.0 ? std::abs(env.r01()) / std::sqrt(pop) : 0.0;
  const double h = haziness(env);
  const double cap = misalignment_capacity(env);
  return {env, sigma, zeta, h, cap > 0.0 ? h / cap : 0.0};
}

SystemQubit make_sys(const SweepSpec& spec, double s00) {
  return spec.s01 ? SystemQubit(s00, *spec.s01) : SystemQubit::pure(s00);
}

// One (s00, environment) point of the outer parameter product, in output
// order: s00 slowest, then sigma, then the environment coordinate.
struct ParamPoint {
  double s00;
  EnvPoint env;
};

std::vector<ParamPoint> param_points(const SweepSpec& spec) {
  std::vector<ParamPoint> pts;
  for (double s00 : spec.s00)
    for (double sigma : spec.sigma)
      for (double v : spec.env_values) pts.push_back({s00, make_env(sigma, spec.env_axis, v)});
  return pts;
}

std::vector<int> fragment_grid(const SweepSpec& spec) {
  if (!spec.nF.empty()) return spec.nF;
  std::vector<int> all(spec.nE + 1);
  for (int i = 0; i <= spec.nE; ++i) all[i] = i;
  return all;
}

unsigned thread_count(const SweepSpec& spec) {
  return spec.threads == 0 ? default_threads() : spec.threads;
}

std::vector<Cell> param_cells(const ParamPoint& p) {
  return {p.s00, p.env.sigma, p.env.zeta, p.env.h, p.env.h_ratio};
}

const std::vector<std::string> kParamHeader{"s00", "sigma", "zeta", "h", "h_ratio"};

std::vector<std::string> with_params(std::initializer_list<std::string> tail) {
  std::vector<std::string> h = kParamHeader;
  h.insert(h.end(), tail);
  return h;
}

// Runs one task per (parameter point, time) and concatenates the row blocks
// in task order.
template <class Fn>
Table run_grid(const SweepSpec& spec, std::vector<std::string> header, Fn&& rows_for) {
  const auto pts = param_points(spec);
  const std::size_t nt = spec.t.size();
  std::vector<std::vector<std::vector<Cell>>> slots(pts.size() * nt);
  parallel_for(slots.size(), thread_count(spec),
               [&](std::size_t i) { slots[i] = rows_for(pts[i / nt], spec.t[i % nt]); });
  Table table{std::move(header), {}};
  for (auto& block : slots)
    for (auto& row : block) table.rows.push_back(std::move(row));
  return table;
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell{*v} : Cell{};
}

// Closed-form small-deficit redundancy matching the environment, if any.
std::optional<double> scaling_estimate(const EnvQubit& env, double t, int nE, double delta) {
  if (env.is_pure()) {
    if (std::norm(lambda_single(env.sigma(), t)) >= 1.0) return std::nullopt;
    return scaling_misaligned(env.sigma(), t, nE, delta);
  }
  if (closed_form_applies(env, t) && env.lambda_plus() > env.lambda_minus()) {
    return scaling_hazy(env.lambda_plus(), env.lambda_minus(), nE, delta);
  }
  return std::nullopt;
}

void check_range(const std::vector<double>& v, double lo, double hi, const std::string& name) {
  if (v.empty()) throw UsageError(name + " grid is empty");
  for (double x : v)
    if (!(x >= lo && x <= hi))
      throw UsageError(name + " value " + std::to_string(x) + " outside [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
}

}  // namespace

double parse_real(const std::string& raw) {
  const std::string text = trim(raw);
  const auto pos = text.find("pi");
  if (pos == std::string::npos) return plain_number(text);
  std::string prefix = text.substr(0, pos);
  if (!prefix.empty() && prefix.back() == '*') prefix.pop_back();
  double factor = 1.0;
  if (prefix == "-") factor = -1.0;
  else if (!prefix.empty() && prefix != "+") factor = plain_number(prefix);
  const std::string suffix = text.substr(pos + 2);
  double divisor = 1.0;
  if (!suffix.empty()) {
    if (suffix[0] != '/') throw UsageError("cannot parse '" + text + "'");
    divisor = plain_number(suffix.substr(1));
  }
  return factor * std::numbers::pi / divisor;
}

std::vector<double> parse_real_grid(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) return {};
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("range must be a:b:count, got '" + text + "'");
    const double a = parse_real(parts[0]);
    const double b = parse_real(parts[1]);
    const long n = plain_integer(parts[2]);
    if (n < 1) throw UsageError("range count must be >= 1");
    if (n == 1) return {a};
    std::vector<double> out(n);
    for (long i = 0; i < n; ++i) out[i] = a + (b - a) * static_cast<double>(i) / (n - 1);
    out.back() = b;
    return out;
  }
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item));
  return out;
}

std::vector<int> parse_int_grid(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) return {};
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) throw UsageError("range must be a:b[:step]");
    const long a = plain_integer(parts[0]);
    const long b = plain_integer(parts[1]);
    const long step = parts.size() == 3 ? plain_integer(parts[2]) : 1;
    if (step < 1) throw UsageError("range step must be >= 1");
    for (long i = a; i <= b; i += step) out.push_back(static_cast<int>(i));
    if (out.empty()) throw UsageError("empty range '" + text + "'");
    return out;
  }
  for (const auto& item : split(text, ',')) out.push_back(static_cast<int>(plain_integer(item)));
  return out;
}

void SweepSpec::validate(const std::string& command) const {
  if (format != "csv" && format != "json") throw UsageError("format must be csv or json");
  if (command == "verify") {
    if (nE_max < 1 || nE_max > oracle::kMaxEnvironment)
      throw UsageError("nE-max must lie in [1, " + std::to_string(oracle::kMaxEnvironment) + "]");
    if (draws < 1) throw UsageError("draws must be >= 1");
    return;
  }
  const bool needs_mixing = command == "redundancy" || command == "scaling";
  if (needs_mixing) {
    if (s00.empty()) throw UsageError("s00 grid is empty");
    for (double x : s00)
      if (!(x > 0.0 && x < 1.0))
        throw UsageError("redundancy needs 0 < s00 < 1 (no classical information otherwise)");
  } else {
    check_range(s00, 0.0, 1.0, "s00");
  }
  if (s01) {
    for (double x : s00)
      if (!(*s01 >= 0.0 && *s01 <= std::sqrt(x * (1.0 - x)) + 1e-12))
        throw UsageError("|s01| must satisfy 0 <= |s01| <= sqrt(s00 s11)");
  }
  check_range(sigma, -1.0, 1.0, "sigma");
  check_range(env_values, 0.0, 1.0, axis_name(env_axis));
  if (nE < 1) throw UsageError("nE must be >= 1");
  if (t.empty()) throw UsageError("t grid is empty");
  for (int f : nF)
    if (f < 0 || f > nE) throw UsageError("nF values must lie in [0, nE]");
  if (needs_mixing) {
    check_range(delta, 0.0, 1.0, "delta");
    for (double d : delta)
      if (d <= 0.0 || d >= 1.0) throw UsageError("delta values must lie in (0, 1)");
  }
  if (command == "scaling") {
    if (kind != "redundancy" && kind != "deviation")
      throw UsageError("scaling kind must be redundancy or deviation");
    if (kind == "deviation") {
      for (double x : sigma)
        if (x != 0.0) throw UsageError("deviation scaling requires sigma = 0");
    }
  }
}

void apply_figure(SweepSpec& spec, const std::string& command, const std::string& fig) {
  const double pi = std::numbers::pi;
  // Figures 3-8 share s00 = 1/2 and 200 environment qubits.
  spec.s00 = {0.5};
  spec.s01.reset();
  spec.nE = 200;
  spec.nF.clear();
  auto t_surface = [&] { spec.t = parse_real_grid("0:pi/2:41"); };
  auto mixed_system = [&] {
    // Initial system entropy 0.8 at s00 = 1/2.
    spec.s01 = inverse_binary_entropy(0.8) - 0.5;
  };
  auto pure_env = [&](double sigma) {
    spec.sigma = {sigma};
    spec.env_axis = EnvAxis::Zeta;
    spec.env_values = {1.0};
  };
  const bool surface = command == "mi-surface";
  const bool discord_cmd = command == "discord";
  const bool red = command == "redundancy";

  if ((surface || discord_cmd) && (fig == "3a" || fig == "3c")) {
    pure_env(0.0);
    t_surface();
  } else if ((surface || discord_cmd) && (fig == "3b" || fig == "3d")) {
    pure_env(0.0);
    mixed_system();
    t_surface();
  } else if (surface && (fig == "4a" || fig == "4b")) {
    // Pure state at the given alignment with its coherence halved.
    spec.sigma = {fig == "4a" ? 0.0 : 0.8};
    spec.env_axis = EnvAxis::Zeta;
    spec.env_values = {0.5};
    t_surface();
  } else if (surface && (fig == "5a" || fig == "5b")) {
    spec.sigma = {0.0};
    spec.env_axis = EnvAxis::Haziness;
    spec.env_values = parse_real_grid("0:1:21");
    spec.t = {fig == "5a" ? pi / 2 : pi / 4};
  } else if (red && fig == "5c") {
    spec.sigma = {0.0};
    spec.env_axis = EnvAxis::Haziness;
    spec.env_values = parse_real_grid("0:0.98:50");
    spec.t = {pi / 2, pi / 4};
    spec.delta = {0.1};
  } else if (red && fig == "5d") {
    spec.s00 = {0.5, 1.0 / 8, 1.0 / 64, 1.0 / 4096};
    spec.sigma = {0.0};
    spec.env_axis = EnvAxis::Haziness;
    spec.env_values = parse_real_grid("0.1:0.9:9");
    spec.t = {pi / 2};
    spec.delta = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  } else if (surface && (fig == "6a" || fig == "6b")) {
    pure_env(0.0);
    spec.sigma = parse_real_grid("0:0.98:50");
    spec.t = {fig == "6a" ? pi / 2 : pi / 4};
  } else if (red && (fig == "6c" || fig == "6d")) {
    pure_env(0.0);
    spec.sigma = parse_real_grid("0:0.98:50");
    spec.t = {fig == "6c" ? pi / 2 : pi / 4};
    spec.delta = {1e-1, 1e-2, 1e-3, 1e-4};
  } else if (surface && (fig == "8a" || fig == "8b")) {
    spec.sigma = {fig == "8a" ? 0.4 : 0.8};
    spec.env_axis = EnvAxis::HazinessRatio;
    spec.env_values = parse_real_grid("0:1:21");
    spec.t = {pi / 2};
  } else if (red && fig == "8c") {
    spec.sigma = {0.4, 0.8};
    spec.env_axis = EnvAxis::HazinessRatio;
    spec.env_values = parse_real_grid("0:0.98:50");
    spec.t = {pi / 2};
    spec.delta = {0.1};
  } else if (command == "scaling" && fig == "11") {
    spec.kind = "deviation";
    spec.s00 = {0.5, 1.0 / 16};
    spec.sigma = {0.0};
    spec.env_axis = EnvAxis::Haziness;
    spec.env_values = {0.5, 0.9};
    spec.t = {pi / 2};
    spec.nF = parse_int_grid("1:200");
  } else {
    throw UsageError("no figure preset '" + fig + "' for " + command);
  }
}

void apply_config(SweepSpec& spec, const json& config) {
  if (!config.is_object()) throw UsageError("config must be a JSON object");
  auto real_grid = [](const json& v) {
    if (v.is_string()) return parse_real_grid(v.get<std::string>());
    if (v.is_number()) return std::vector<double>{v.get<double>()};
    std::vector<double> out;
    for (const auto& x : v) out.push_back(x.is_string() ? parse_real(x.get<std::string>())
                                                         : x.get<double>());
    return out;
  };
  auto int_grid = [](const json& v) {
    if (v.is_string()) return parse_int_grid(v.get<std::string>());
    if (v.is_number()) return std::vector<int>{v.get<int>()};
    return v.get<std::vector<int>>();
  };
  for (const auto& [raw_key, v] : config.items()) {
    std::string key = raw_key;
    std::replace(key.begin(), key.end(), '-', '_');
    try {
      if (key == "figure") continue;
      if (key == "s00") spec.s00 = real_grid(v);
      else if (key == "s01") {
        if (v.is_null()) spec.s01.reset();
        else spec.s01 = v.get<double>();
      } else if (key == "sigma") spec.sigma = real_grid(v);
      else if (key == "zeta") { spec.env_axis = EnvAxis::Zeta; spec.env_values = real_grid(v); }
      else if (key == "h") { spec.env_axis = EnvAxis::Haziness; spec.env_values = real_grid(v); }
      else if (key == "h_ratio") {
        spec.env_axis = EnvAxis::HazinessRatio;
        spec.env_values = real_grid(v);
      } else if (key == "nE" || key == "ne") spec.nE = v.get<int>();
      else if (key == "t") spec.t = real_grid(v);
      else if (key == "nF" || key == "nf") spec.nF = int_grid(v);
      else if (key == "delta") spec.delta = real_grid(v);
      else if (key == "kind") spec.kind = v.get<std::string>();
      else if (key == "nE_max" || key == "ne_max") spec.nE_max = v.get<int>();
      else if (key == "draws") spec.draws = v.get<int>();
      else if (key == "seed") spec.seed = v.get<std::uint64_t>();
      else if (key == "format") spec.format = v.get<std::string>();
      else if (key == "out") spec.out = v.get<std::string>();
      else if (key == "threads") spec.threads = v.get<unsigned>();
      else throw UsageError("unknown config key '" + raw_key + "'");
    } catch (const json::exception& e) {
      throw UsageError("bad value for config key '" + raw_key + "': " + e.what());
    }
  }
}

json spec_to_json(const SweepSpec& spec) {
  json j;
  j["s00"] = spec.s00;
  j["s01"] = spec.s01 ? json(*spec.s01) : json(nullptr);
  j["sigma"] = spec.sigma;
  j["env_axis"] = axis_name(spec.env_axis);
  j["env_values"] = spec.env_values;
  j["nE"] = spec.nE;
  j["t"] = spec.t;
  j["nF"] = spec.nF;
  j["delta"] = spec.delta;
  j["kind"] = spec.kind;
  j["nE_max"] = spec.nE_max;
  j["draws"] = spec.draws;
  j["seed"] = spec.seed;
  return j;
}

Table mi_surface(const SweepSpec& spec) {
  const auto nFs = fragment_grid(spec);
  return run_grid(spec, with_params({"t", "nF", "I", "discord", "H_F_gain"}),
                  [&](const ParamPoint& pt, double t) {
                    const ModelParams p{make_sys(spec, pt.s00), pt.env.env, spec.nE, t};
                    std::vector<std::vector<Cell>> rows;
                    for (int nF : nFs) {
                      const InfoPoint ip = mutual_information(p, nF);
                      auto row = param_cells(pt);
                      row.insert(row.end(), {t, std::int64_t{nF}, ip.mutual_info, ip.discord,
                                             ip.fragment_entropy_gain});
                      rows.push_back(std::move(row));
                    }
                    return rows;
                  });
}

Table discord_table(const SweepSpec& spec) {
  const auto nFs = fragment_grid(spec);
  return run_grid(spec, with_params({"t", "nF", "discord", "discord_approx"}),
                  [&](const ParamPoint& pt, double t) {
                    const ModelParams p{make_sys(spec, pt.s00), pt.env.env, spec.nE, t};
                    std::vector<std::vector<Cell>> rows;
                    for (int nF : nFs) {
                      auto row = param_cells(pt);
                      row.insert(row.end(), {t, std::int64_t{nF}, discord(p, nF),
                                             discord_approx(p, nF)});
                      rows.push_back(std::move(row));
                    }
                    return rows;
                  });
}

Table redundancy_table(const SweepSpec& spec) {
  std::vector<double> deltas = spec.delta;
  std::sort(deltas.begin(), deltas.end(), std::greater<>());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  return run_grid(
      spec,
      with_params({"t", "delta", "nF_delta", "R_delta", "R_scaling", "R_bar"}),
      [&](const ParamPoint& pt, double t) {
        const InfoCurve curve(ModelParams{make_sys(spec, pt.s00), pt.env.env, spec.nE, t});
        const LimitingRedundancy lim = limiting_redundancy(curve, deltas);
        const Cell r_bar = lim.divergent ? Cell{} : Cell{lim.estimate};
        std::vector<std::vector<Cell>> rows;
        for (double d : spec.delta) {
          const RedundancyResult r = redundancy(curve, d);
          auto row = param_cells(pt);
          row.push_back(t);
          row.push_back(d);
          row.push_back(r.nF_delta ? Cell{std::int64_t{*r.nF_delta}} : Cell{});
          row.push_back(r.nF_delta ? Cell{r.R_delta} : Cell{});
          row.push_back(optional_cell(scaling_estimate(pt.env.env, t, spec.nE, d)));
          row.push_back(r_bar);
          rows.push_back(std::move(row));
        }
        return rows;
      });
}

Table scaling_table(const SweepSpec& spec) {
  if (spec.kind == "deviation") {
    const auto nFs = fragment_grid(spec);
    return run_grid(spec, with_params({"nF", "exact", "approx", "rel_err"}),
                    [&](const ParamPoint& pt, double) {
                      const SystemQubit sys = make_sys(spec, pt.s00);
                      const EnvQubit& env = pt.env.env;
                      std::vector<std::vector<Cell>> rows;
                      for (int nF : nFs) {
                        if (nF < 1) continue;
                        const double exact = plateau_deviation(sys, env, nF);
                        auto row = param_cells(pt);
                        row.push_back(std::int64_t{nF});
                        row.push_back(exact);
                        if (env.lambda_minus() > 0.0 && env.lambda_plus() > env.lambda_minus()) {
                          const double approx = asymptotic_deviation(
                              pt.s00, env.lambda_plus(), env.lambda_minus(), nF);
                          row.push_back(approx);
                          row.push_back(exact > 0.0 ? Cell{std::abs(approx - exact) / exact}
                                                    : Cell{});
                        } else {
                          row.insert(row.end(), {Cell{}, Cell{}});
                        }
                        rows.push_back(std::move(row));
                      }
                      return rows;
                    });
  }
  return run_grid(
      spec, with_params({"t", "delta", "nF_delta", "R_delta", "R_scaling", "rel_err"}),
      [&](const ParamPoint& pt, double t) {
        const InfoCurve curve(ModelParams{make_sys(spec, pt.s00), pt.env.env, spec.nE, t});
        std::vector<std::vector<Cell>> rows;
        for (double d : spec.delta) {
          const RedundancyResult r = redundancy(curve, d);
          const auto est = scaling_estimate(pt.env.env, t, spec.nE, d);
          auto row = param_cells(pt);
          row.push_back(t);
          row.push_back(d);
          row.push_back(r.nF_delta ? Cell{std::int64_t{*r.nF_delta}} : Cell{});
          row.push_back(r.nF_delta ? Cell{r.R_delta} : Cell{});
          row.push_back(optional_cell(est));
          row.push_back(r.nF_delta && est ? Cell{std::abs(*est - r.R_delta) / r.R_delta}
                                          : Cell{});
          rows.push_back(std::move(row));
        }
        return rows;
      });
}

VerifyOutcome verify(const SweepSpec& spec) {
  struct Job {
    int draw;
    ModelParams params;
  };
  // Draws are generated serially so the parameter sequence is fixed by the seed.
  std::mt19937_64 rng(spec.seed);
  std::vector<Job> jobs;
  for (int d = 0; d < spec.draws; ++d) {
    const int nE = 1 + d % spec.nE_max;
    jobs.push_back({d, oracle::random_model(rng, nE)});
  }
  std::vector<std::vector<oracle::IdentityReport>> reports(jobs.size());
  parallel_for(jobs.size(), thread_count(spec), [&](std::size_t i) {
    for (int nF = 1; nF <= jobs[i].params.nE; ++nF)
      reports[i].push_back(oracle::check_identities(jobs[i].params, nF));
  });

  VerifyOutcome out{{{"draw", "nE", "nF", "s00", "s01_re", "s01_im", "r00", "r01_re", "r01_im",
                      "t", "check", "oracle", "fast", "diff", "tol", "passed"},
                     {}},
                    true,
                    0};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const ModelParams& p = jobs[i].params;
    for (const auto& rep : reports[i]) {
      for (const auto& c : rep.checks) {
        out.table.rows.push_back({std::int64_t{jobs[i].draw}, std::int64_t{p.nE},
                                  std::int64_t{rep.nF}, p.sys.s00(), p.sys.s01().real(),
                                  p.sys.s01().imag(), p.env.r00(), p.env.r01().real(),
                                  p.env.r01().imag(), p.t, c.name, c.oracle, c.fast, c.diff,
                                  c.tol, c.passed});
        if (!c.passed) {
          out.all_passed = false;
          ++out.failures;
        }
      }
    }
  }
  return out;
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i)
    os << (i ? "," : "") << table.header[i];
  os << '\n';
  char buf[64];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
              if (std::isfinite(v)) {
                std::snprintf(buf, sizeof buf, "%.12g", v);
                os << buf;
              }
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
              os << v;
            } else if constexpr (std::is_same_v<T, std::string>) {
              os << v;
            } else if constexpr (std::is_same_v<T, bool>) {
              os << (v ? "true" : "false");
            }
          },
          row[i]);
    }
    os << '\n';
  }
}

void write_json(std::ostream& os, const Table& table, const SweepSpec& spec) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[table.header[i]] = std::visit(
          [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              return nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
              return std::isfinite(v) ? json(v) : json(nullptr);
            } else {
              return v;
            }
          },
          row[i]);
    }
    rows.push_back(std::move(obj));
  }
  json doc{{"spec", spec_to_json(spec)}, {"rows", std::move(rows)}, {"version", version()}};
  os << doc.dump(2) << '\n';
}

}  // namespace qdarwin::cli
