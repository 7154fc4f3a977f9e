// momentlab: run moment-map experiments from JSON configs.
//
//   momentlab run --config <path> [--seed <u64>] [--out <path>] [--format csv|json]
//   momentlab catalog list
//   momentlab check --rep <kind> [--j <half-int>] [--N <modes>] [--k <charge>] [--path <file>]
//
// Exit codes: 0 pass, 1 tolerance failure, 2 config error, 3 runtime error.

#include "momentlab/errors.hpp"
#include "momentlab/harness.hpp"
#include "momentlab/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace h = momentlab::harness;

namespace {

std::uint64_t env_seed() {
  const char* s = std::getenv("MOMENTLAB_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw h::ConfigError("MOMENTLAB_SEED", "MOMENTLAB_SEED must be a nonnegative integer");
  }
}

int finish(const h::Report& report, const h::ExperimentConfig& cfg) {
  if (cfg.out) {
    h::emit_report(report, *cfg.out, cfg.format);
  } else {
    std::cout << h::serialize_report(report, cfg.format);
  }
  std::cerr << (report.pass() ? "PASS" : "FAIL") << ' ' << report.experiment << ' ' << report.representation;
  for (const auto& c : report.checks) {
    std::cerr << "\n  " << c.operation << " defect=" << h::format_double(c.defect)
              << " tolerance=" << h::format_double(c.tolerance) << (c.pass ? " ok" : " FAILED");
  }
  std::cerr << '\n';
  return report.pass() ? h::kPass : h::kToleranceFailure;
}

void print_catalog() {
  std::cout << "su2         j = 0, 1/2, 1, ...    spin-j representation of su(2), dim 2j+1\n"
               "heisenberg  N >= 4                first N Hermite modes of the Schroedinger representation;\n"
               "                                  validity subspace = modes 0..N-3\n"
               "circle      k integer             U(1) character e^{ikt} on C\n"
               "direct_sum  parts = [...]         block-diagonal sum over a shared algebra\n"
               "custom      path = <file.json>    generators loaded from a representation document\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment mappings of finite-dimensional unitary representations"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a config-driven experiment");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  run->add_option("--config", config_path, "Experiment config (JSON)")->required();
  run->add_option("--seed", seed, "Seed override");
  run->add_option("--out", out, "Report path (default: stdout)");
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* cat = app.add_subcommand("catalog", "Built-in representations");
  cat->add_subcommand("list", "List built-in representations and their parameters");
  cat->require_subcommand(1);

  auto* chk = app.add_subcommand("check", "One-shot validity check on a representation");
  std::string kind;
  std::optional<double> j;
  std::optional<int> modes;
  std::optional<int> charge;
  std::optional<std::string> path;
  chk->add_option("--rep", kind, "su2 | heisenberg | circle | custom")->required();
  chk->add_option("--j", j, "spin (su2)");
  chk->add_option("--N", modes, "modes (heisenberg)");
  chk->add_option("--k", charge, "charge (circle)");
  chk->add_option("--path", path, "representation document (custom)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : h::kConfigError;
  }

  try {
    if (*run) {
      std::ifstream in(config_path);
      if (!in) throw h::ConfigError("config", "cannot open config '" + config_path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      auto cfg = h::parse_config(buf.str(), env_seed());
      if (seed) cfg.seed = *seed;
      if (out) cfg.out = *out;
      if (format) cfg.format = h::parse_format(*format);
      return finish(h::run_experiment(cfg), cfg);
    }
    if (*cat) {
      print_catalog();
      return h::kPass;
    }
    if (*chk) {
      nlohmann::json rep = {{"kind", kind}};
      if (j) rep["j"] = *j;
      if (modes) rep["N"] = *modes;
      if (charge) rep["k"] = *charge;
      if (path) rep["path"] = *path;
      const nlohmann::json doc = {{"rep", rep}, {"experiment", "validity"}, {"format", "csv"}};
      const auto cfg = h::parse_config(doc.dump());
      return finish(h::run_experiment(cfg), cfg);
    }
  } catch (const h::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return h::kConfigError;
  } catch (const momentlab::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return h::kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << '\n';
    return h::kRuntimeError;
  }
  return h::kPass;
}
