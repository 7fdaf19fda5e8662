#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "spinphase/cli/reports.hpp"
#include "spinphase/error.hpp"

namespace spinphase::cli {
namespace {

std::string find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return argv[i + 1];
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return {};
}

nlohmann::json load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

int default_jobs() {
  if (const char* env = std::getenv("SPINPHASE_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("SPINPHASE_JOBS must be a positive integer, got '") +
                          env + "'");
  }
  return 1;
}

struct CommonFlags {
  std::string format;
};

void add_common(CLI::App& cmd, CommonConfig& c, CommonFlags& flags) {
  flags.format = c.format == Format::csv ? "csv" : "json";
  cmd.add_option("--out", c.out, "Output path ('-' for standard output)");
  cmd.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--config", c.config_path, "JSON config file (flags override it)");
  cmd.add_option("--seed", c.seed, "Seed for deterministic start vectors");
  cmd.add_option("--tol", c.tol, "Solver and quadrature tolerance");
  cmd.add_option("--jobs", c.jobs, "Worker threads (default: SPINPHASE_JOBS or 1)");
}

void finish_common(CommonConfig& c, const CommonFlags& flags) {
  c.format = flags.format == "json" ? Format::json : Format::csv;
}

void emit(const Table& table, const nlohmann::ordered_json& config, const CommonConfig& c,
          std::ostream& out) {
  std::ostringstream buffer;
  if (c.format == Format::csv) write_csv(buffer, table, config);
  else write_json(buffer, table, config);
  if (c.out == "-") {
    out << buffer.str();
    return;
  }
  std::ofstream file(c.out, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidArgument("cannot write output file '" + c.out + "'");
  file << buffer.str();
  if (!file) throw InvalidArgument("failed writing output file '" + c.out + "'");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concurrence and Berry-phase numerics for spin chains", "spinphase"};
  app.require_subcommand(1);

  ToyConfig toy;
  IsingConfig ising;
  AfmConfig afm_cfg;
  BerryLoopConfig loop;
  CommonFlags toy_flags, ising_flags, afm_flags, loop_flags;

  auto* toy_cmd = app.add_subcommand("toy", "Two-spin model: Berry phases and concurrence vs theta");
  auto* ising_cmd = app.add_subcommand("ising", "Transverse XY chain: Berry phase and concurrence vs lambda");
  auto* afm_cmd = app.add_subcommand("afm", "Heisenberg ring: exact and ED concurrence");
  auto* loop_cmd = app.add_subcommand("berry-loop", "ED Wilson-loop Berry phase vs mode sum");

  try {
    const int jobs = default_jobs();
    toy.common.jobs = ising.common.jobs = afm_cfg.common.jobs = loop.common.jobs = jobs;

    const std::string config_path = find_config_path(argc, argv);
    if (!config_path.empty()) {
      const auto j = load_config_file(config_path);
      // Only the invoked subcommand's struct is used; the others absorb
      // nothing because apply_json is called after parsing picks one.
      std::string sub;
      for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "toy" || a == "ising" || a == "afm" || a == "berry-loop") {
          sub = a;
          break;
        }
      }
      if (sub == "toy") apply_json(j, toy);
      else if (sub == "ising") apply_json(j, ising);
      else if (sub == "afm") apply_json(j, afm_cfg);
      else if (sub == "berry-loop") apply_json(j, loop);
    }
  } catch (const InvalidArgument& e) {
    err << "spinphase: " << e.what() << "\n";
    return kExitConfig;
  }

  add_common(*toy_cmd, toy.common, toy_flags);
  toy_cmd->add_option("--theta-steps", toy.theta_steps, "Points on the theta grid over [0, pi]");
  toy_cmd->add_flag("--adiabatic", toy.adiabatic, "Add numerically evolved Berry phase columns");
  toy_cmd->add_option("--ratio", toy.ratio, "omega0 / field_scale for --adiabatic");
  toy_cmd->add_option("--field-scale", toy.field_scale, "Field energy scale kB");
  toy_cmd->add_option("--time-steps", toy.time_steps, "Time steps per drive period");

  add_common(*ising_cmd, ising.common, ising_flags);
  ising_cmd->add_option("--lambda-min", ising.lambda_min, "First lambda of the sweep");
  ising_cmd->add_option("--lambda-max", ising.lambda_max, "Last lambda of the sweep");
  ising_cmd->add_option("--lambda-steps", ising.lambda_steps, "Points in the lambda sweep");
  ising_cmd->add_option("--modes-n", ising.modes_n, "Odd chain length for the mode-sum mean");
  ising_cmd->add_option("--gamma", ising.gamma, "Anisotropy for the ED chain");
  ising_cmd->add_flag("--ed", ising.ed, "Add exact-diagonalization Wootters concurrence");
  ising_cmd->add_option("--n", ising.n, "ED chain length (periodic)");

  add_common(*afm_cmd, afm_cfg.common, afm_flags);
  afm_cmd->add_option("--n", afm_cfg.n_list, "Even ring sizes, comma separated")->delimiter(',');

  add_common(*loop_cmd, loop.common, loop_flags);
  loop_cmd->add_option("--n", loop.n, "Odd chain length");
  loop_cmd->add_option("--lambda", loop.lambdas, "Lambda values, comma separated")
      ->delimiter(',');
  loop_cmd->add_option("--steps", loop.steps, "Grid points on phi in [0, pi]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "spinphase: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (toy_cmd->parsed()) {
      finish_common(toy.common, toy_flags);
      emit(run_toy(toy), to_json(toy), toy.common, out);
    } else if (ising_cmd->parsed()) {
      finish_common(ising.common, ising_flags);
      emit(run_ising(ising), to_json(ising), ising.common, out);
    } else if (afm_cmd->parsed()) {
      finish_common(afm_cfg.common, afm_flags);
      emit(run_afm(afm_cfg), to_json(afm_cfg), afm_cfg.common, out);
    } else if (loop_cmd->parsed()) {
      finish_common(loop.common, loop_flags);
      emit(run_berry_loop(loop), to_json(loop), loop.common, out);
    }
  } catch (const InvalidArgument& e) {
    err << "spinphase: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NumericalFailure& e) {
    err << "spinphase: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace spinphase::cli
