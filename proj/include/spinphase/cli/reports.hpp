#pragma once
// Command front end: run configs, sweep tables, and CSV/JSON emission.
//
// Exit codes: 0 success, 2 usage or config error, 3 numerical failure.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace spinphase::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

enum class Format { csv, json };

struct CommonConfig {
  std::string out = "-";  // "-" is standard output
  Format format = Format::csv;
  std::string config_path;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int jobs = 1;
};

struct ToyConfig {
  CommonConfig common;
  int theta_steps = 101;
  bool adiabatic = false;
  double ratio = 0.01;  // omega0 / field_scale
  double field_scale = 1.0;
  int time_steps = 100'000;
};

struct IsingConfig {
  CommonConfig common;
  double lambda_min = 0.0;
  double lambda_max = 2.0;
  int lambda_steps = 21;
  int modes_n = 1001;  // odd chain length for the finite mode sum
  double gamma = 1.0;
  bool ed = false;
  int n = 12;  // ED chain length
};

struct AfmConfig {
  CommonConfig common;
  std::vector<int> n_list = {4, 8, 12};
};

struct BerryLoopConfig {
  CommonConfig common;
  int n = 5;
  std::vector<double> lambdas = {0.5};
  int steps = 512;
};

using Cell = std::variant<double, std::int64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Config validation; throws InvalidArgument.
void validate(const CommonConfig& c);
void validate(const ToyConfig& c);
void validate(const IsingConfig& c);
void validate(const AfmConfig& c);
void validate(const BerryLoopConfig& c);

// Sweeps. Rows come out in sweep order. Throw InvalidArgument or NumericalFailure.
Table run_toy(const ToyConfig& c);
Table run_ising(const IsingConfig& c);
Table run_afm(const AfmConfig& c);
Table run_berry_loop(const BerryLoopConfig& c);

nlohmann::ordered_json to_json(const ToyConfig& c);
nlohmann::ordered_json to_json(const IsingConfig& c);
nlohmann::ordered_json to_json(const AfmConfig& c);
nlohmann::ordered_json to_json(const BerryLoopConfig& c);

// Overlays keys from a JSON config object (flag names without dashes
// prefix, e.g. "theta-steps"). Unknown keys throw InvalidArgument.
void apply_json(const nlohmann::json& j, ToyConfig& c);
void apply_json(const nlohmann::json& j, IsingConfig& c);
void apply_json(const nlohmann::json& j, AfmConfig& c);
void apply_json(const nlohmann::json& j, BerryLoopConfig& c);

// CSV: "# config: <json>" line, header, one row per line, %.17g numbers,
// LF endings. Throws NumericalFailure on NaN or Inf.
void write_csv(std::ostream& os, const Table& table, const nlohmann::ordered_json& config);
// {"config": ..., "rows": [{...}, ...]}
void write_json(std::ostream& os, const Table& table, const nlohmann::ordered_json& config);

// Full command-line entry: `spinphase <toy|ising|afm|berry-loop> [flags]`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinphase::cli
