// qdarwin: sweeps of mutual information, discord and redundancy for a qubit
// decohered by a symmetric qubit environment.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdarwin/parallel.hpp"
#include "qdarwin/sweep.hpp"

namespace {

using qdarwin::cli::SweepSpec;
using qdarwin::cli::UsageError;

struct Flags {
  std::map<std::string, std::string> values;  // long name -> raw text
  std::string config;
  std::string figure;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--out", f.values["out"], "output file (default: stdout)");
  cmd->add_option("--format", f.values["format"], "csv | json");
  cmd->add_option("--threads", f.values["threads"], "worker threads (0: hardware)");
  cmd->add_option("--seed", f.values["seed"], "random seed");
  cmd->add_option("--config", f.config, "JSON file with flag values; flags override it");
}

void add_grid(CLI::App* cmd, Flags& f) {
  cmd->add_option("--figure", f.figure, "parameter preset for a figure panel, e.g. 3a");
  cmd->add_option("--s00", f.values["s00"], "system population grid");
  cmd->add_option("--s01", f.values["s01"], "|s01| (default: pure system)");
  cmd->add_option("--sigma", f.values["sigma"], "environment misalignment grid");
  cmd->add_option("--zeta", f.values["zeta"], "environment coherence fraction grid");
  cmd->add_option("--h", f.values["h"], "environment haziness grid");
  cmd->add_option("--h-ratio", f.values["h_ratio"], "haziness / capacity grid");
  cmd->add_option("--nE", f.values["nE"], "environment size");
  cmd->add_option("--t", f.values["t"], "time grid, a:b:count or list; 'pi' allowed");
  cmd->add_option("--nF", f.values["nF"], "fragment sizes, a:b[:step] or list");
  cmd->add_option("--delta", f.values["delta"], "information deficits");
}

// Flags given on the command line, as config-style JSON.
nlohmann::json flags_json(const CLI::App* cmd, const Flags& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, text] : f.values) {
    std::string flag = "--" + name;
    if (name == "h_ratio") flag = "--h-ratio";
    if (name == "nE_max") flag = "--nE-max";
    if (cmd->get_option_no_throw(flag) == nullptr || cmd->count(flag) == 0) continue;
    if (name == "format" || name == "out" || name == "kind" || name == "s00" ||
        name == "sigma" || name == "zeta" || name == "h" || name == "h_ratio" || name == "t" ||
        name == "nF" || name == "delta") {
      j[name] = text;
    } else if (name == "s01") {
      j[name] = qdarwin::cli::parse_real(text);
    } else {
      std::size_t used = 0;
      try {
        j[name] = std::stoull(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size()) throw UsageError("--" + name + " expects an integer");
    }
  }
  return j;
}

SweepSpec build_spec(const std::string& command, const CLI::App* cmd, const Flags& f) {
  SweepSpec spec;
  nlohmann::json config = nlohmann::json::object();
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw UsageError("cannot open config file " + f.config);
    try {
      config = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
  }
  std::string figure = f.figure;
  if (figure.empty() && config.contains("figure")) figure = config["figure"].get<std::string>();
  if (!figure.empty()) qdarwin::cli::apply_figure(spec, command, figure);
  if (command == "verify") spec.format = "json";
  qdarwin::cli::apply_config(spec, config);
  qdarwin::cli::apply_config(spec, flags_json(cmd, f));
  spec.validate(command);
  return spec;
}

void emit(const qdarwin::cli::Table& table, const SweepSpec& spec) {
  std::ostringstream buf;
  if (spec.format == "json") {
    qdarwin::cli::write_json(buf, table, spec);
  } else {
    qdarwin::cli::write_csv(buf, table);
  }
  if (spec.out.empty()) {
    std::cout << buf.str();
    return;
  }
  std::ofstream file(spec.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + spec.out);
  file << buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Darwinism in a symmetric qubit environment"};
  app.set_version_flag("--version", qdarwin::cli::version());
  app.require_subcommand(1);
  // --h is the haziness grid, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");

  Flags surface, red, disc, scal, ver;
  auto* c_surface = app.add_subcommand("mi-surface", "I(S:F), discord and H_F gain over t and nF");
  auto* c_red = app.add_subcommand("redundancy", "R_delta, its scaling estimate and R_bar");
  auto* c_disc = app.add_subcommand("discord", "discord and its good-decoherence approximation");
  auto* c_scal = app.add_subcommand("scaling", "exact vs asymptotic redundancy or deviation");
  auto* c_ver = app.add_subcommand("verify", "compare the fast engine against brute force");

  for (auto [cmd, flags] : {std::pair{c_surface, &surface}, std::pair{c_red, &red},
                            std::pair{c_disc, &disc}, std::pair{c_scal, &scal}}) {
    add_common(cmd, *flags);
    add_grid(cmd, *flags);
  }
  c_scal->add_option("--kind", scal.values["kind"], "redundancy | deviation");
  add_common(c_ver, ver);
  c_ver->add_option("--nE-max", ver.values["nE_max"], "largest environment (<= 12)");
  c_ver->add_option("--draws", ver.values["draws"], "number of random parameter draws");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_ver->parsed()) {
      const SweepSpec spec = build_spec("verify", c_ver, ver);
      if (spec.threads) qdarwin::set_default_threads(spec.threads);
      const auto outcome = qdarwin::cli::verify(spec);
      emit(outcome.table, spec);
      std::cerr << (outcome.all_passed ? "verify: all checks passed"
                                       : "verify: " + std::to_string(outcome.failures) +
                                             " checks failed")
                << '\n';
      return outcome.all_passed ? 0 : 1;
    }
    const std::pair<CLI::App*, Flags*> table_cmds[] = {
        {c_surface, &surface}, {c_red, &red}, {c_disc, &disc}, {c_scal, &scal}};
    for (auto [cmd, flags] : table_cmds) {
      if (!cmd->parsed()) continue;
      const std::string name = cmd->get_name();
      const SweepSpec spec = build_spec(name, cmd, *flags);
      if (spec.threads) qdarwin::set_default_threads(spec.threads);
      if (name == "mi-surface") emit(qdarwin::cli::mi_surface(spec), spec);
      else if (name == "redundancy") emit(qdarwin::cli::redundancy_table(spec), spec);
      else if (name == "discord") emit(qdarwin::cli::discord_table(spec), spec);
      else emit(qdarwin::cli::scaling_table(spec), spec);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
