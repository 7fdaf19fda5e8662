#include <cmath>
#include <string>

#include "spinphase/cli/reports.hpp"
#include "spinphase/error.hpp"

namespace spinphase::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw InvalidArgument("format must be csv or json, got '" + s + "'");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

template <typename T>
T get_as(const json& v, const std::string& key) {
  try {
    return v.get<T>();
  } catch (const json::exception&) {
    throw InvalidArgument("config key '" + key + "' has the wrong type");
  }
}

// Returns true if the key belonged to the common set.
bool apply_common(const std::string& key, const json& v, CommonConfig& c) {
  if (key == "out") c.out = get_as<std::string>(v, key);
  else if (key == "format") c.format = parse_format(get_as<std::string>(v, key));
  else if (key == "seed") c.seed = get_as<std::uint64_t>(v, key);
  else if (key == "tol") c.tol = get_as<double>(v, key);
  else if (key == "jobs") c.jobs = get_as<int>(v, key);
  else if (key == "config") {}  // nested config references are ignored
  else return false;
  return true;
}

template <typename Config, typename Fn>
void apply_each(const json& j, Config& c, Fn&& specific) {
  if (!j.is_object()) throw InvalidArgument("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (apply_common(key, value, c.common)) continue;
    if (!specific(key, value)) throw InvalidArgument("unknown config key '" + key + "'");
  }
}

ordered_json common_json(const CommonConfig& c) {
  ordered_json j;
  j["out"] = c.out;
  j["format"] = format_name(c.format);
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["jobs"] = c.jobs;
  return j;
}

}  // namespace

void validate(const CommonConfig& c) {
  require(c.tol > 0.0 && std::isfinite(c.tol), "tol must be positive");
  require(c.jobs >= 1, "jobs must be >= 1");
  require(!c.out.empty(), "out path must not be empty");
}

void validate(const ToyConfig& c) {
  validate(c.common);
  require(c.theta_steps >= 1, "theta-steps must be >= 1 (empty theta grid)");
  require(c.ratio > 0.0 && std::isfinite(c.ratio), "ratio must be positive");
  require(c.field_scale > 0.0 && std::isfinite(c.field_scale), "field-scale must be positive");
  require(c.time_steps >= 100, "time-steps must be >= 100");
}

void validate(const IsingConfig& c) {
  validate(c.common);
  require(c.lambda_steps >= 1, "lambda-steps must be >= 1 (empty lambda range)");
  require(c.lambda_min >= 0.0 && std::isfinite(c.lambda_max) && c.lambda_max >= c.lambda_min,
          "lambda range must satisfy 0 <= lambda-min <= lambda-max");
  require(c.lambda_steps == 1 || c.lambda_max > c.lambda_min,
          "lambda-max must exceed lambda-min for more than one step");
  require(c.modes_n >= 3 && c.modes_n % 2 == 1, "modes-n must be odd and >= 3");
  require(c.gamma >= 0.0 && c.gamma <= 1.0, "gamma must lie in [0, 1]");
  if (c.ed) require(c.n >= 3 && c.n <= 16, "ED chain length n must lie in [3, 16]");
}

void validate(const AfmConfig& c) {
  validate(c.common);
  require(!c.n_list.empty(), "n list must not be empty");
  for (int n : c.n_list) {
    require(n == 2 || (n >= 4 && n <= 16 && n % 2 == 0),
            "AFM ring sizes must be even in [4, 16] (or 2), got " + std::to_string(n));
  }
}

void validate(const BerryLoopConfig& c) {
  validate(c.common);
  require(c.n >= 3 && c.n <= 16 && c.n % 2 == 1, "berry-loop n must be odd in [3, 16]");
  require(!c.lambdas.empty(), "lambda list must not be empty");
  for (double l : c.lambdas) require(l >= 0.0 && std::isfinite(l), "lambda must be >= 0");
  require(c.steps >= 8, "steps must be >= 8");
}

ordered_json to_json(const ToyConfig& c) {
  ordered_json j;
  j["command"] = "toy";
  j.update(common_json(c.common));
  j["theta-steps"] = c.theta_steps;
  j["adiabatic"] = c.adiabatic;
  j["ratio"] = c.ratio;
  j["field-scale"] = c.field_scale;
  j["time-steps"] = c.time_steps;
  return j;
}

ordered_json to_json(const IsingConfig& c) {
  ordered_json j;
  j["command"] = "ising";
  j.update(common_json(c.common));
  j["lambda-min"] = c.lambda_min;
  j["lambda-max"] = c.lambda_max;
  j["lambda-steps"] = c.lambda_steps;
  j["modes-n"] = c.modes_n;
  j["gamma"] = c.gamma;
  j["ed"] = c.ed;
  j["n"] = c.n;
  return j;
}

ordered_json to_json(const AfmConfig& c) {
  ordered_json j;
  j["command"] = "afm";
  j.update(common_json(c.common));
  j["n"] = c.n_list;
  return j;
}

ordered_json to_json(const BerryLoopConfig& c) {
  ordered_json j;
  j["command"] = "berry-loop";
  j.update(common_json(c.common));
  j["n"] = c.n;
  j["lambda"] = c.lambdas;
  j["steps"] = c.steps;
  return j;
}

void apply_json(const json& j, ToyConfig& c) {
  apply_each(j, c, [&](const std::string& key, const json& v) {
    if (key == "theta-steps") c.theta_steps = get_as<int>(v, key);
    else if (key == "adiabatic") c.adiabatic = get_as<bool>(v, key);
    else if (key == "ratio") c.ratio = get_as<double>(v, key);
    else if (key == "field-scale") c.field_scale = get_as<double>(v, key);
    else if (key == "time-steps") c.time_steps = get_as<int>(v, key);
    else if (key == "command") {}
    else return false;
    return true;
  });
}

void apply_json(const json& j, IsingConfig& c) {
  apply_each(j, c, [&](const std::string& key, const json& v) {
    if (key == "lambda-min") c.lambda_min = get_as<double>(v, key);
    else if (key == "lambda-max") c.lambda_max = get_as<double>(v, key);
    else if (key == "lambda-steps") c.lambda_steps = get_as<int>(v, key);
    else if (key == "modes-n") c.modes_n = get_as<int>(v, key);
    else if (key == "gamma") c.gamma = get_as<double>(v, key);
    else if (key == "ed") c.ed = get_as<bool>(v, key);
    else if (key == "n") c.n = get_as<int>(v, key);
    else if (key == "command") {}
    else return false;
    return true;
  });
}

void apply_json(const json& j, AfmConfig& c) {
  apply_each(j, c, [&](const std::string& key, const json& v) {
    if (key == "n") c.n_list = get_as<std::vector<int>>(v, key);
    else if (key == "command") {}
    else return false;
    return true;
  });
}

void apply_json(const json& j, BerryLoopConfig& c) {
  apply_each(j, c, [&](const std::string& key, const json& v) {
    if (key == "n") c.n = get_as<int>(v, key);
    else if (key == "lambda") c.lambdas = get_as<std::vector<double>>(v, key);
    else if (key == "steps") c.steps = get_as<int>(v, key);
    else if (key == "command") {}
    else return false;
    return true;
  });
}

}  // namespace spinphase::cli
