#pragma once

// fracml command-line front end. `run` is the whole program minus process
// plumbing so tests can drive it with in-memory streams.

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fracml/dynamics.hpp"
#include "fracml/sweep.hpp"

namespace fracml::cli {

enum ExitCode : int {
  kStable = 0,
  kUnstable = 1,
  kUndecided = 2,  // marginal or inconclusive
  kUsageError = 3,
};

/// Looks up environment variables; defaults to std::getenv.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const EnvLookup& env = {});

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulation run described by a config document.
struct SimulationConfig {
  SystemSpec system;
  std::size_t window = kDefaultWindow;
  double reference = 0.0;
};

/// Flag values that override the config file.
struct SimulationOverrides {
  std::optional<std::string> mode;
  std::optional<double> alpha, a0, a1, a2, mu, delta, eps;
  std::optional<std::size_t> n, horizon;
  std::optional<std::uint64_t> seed;
};

/// Parses a config document. Errors carry line/column for syntax problems
/// and the JSON path for schema problems.
nlohmann::json parse_document(const std::string& text);
SimulationConfig load_simulation(const nlohmann::json& doc,
                                 const SimulationOverrides& overrides);
MapSpec parse_map(const nlohmann::json& j, const std::string& path);

}  // namespace fracml::cli
