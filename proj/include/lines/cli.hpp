#ifndef LINES_CLI_HPP
#define LINES_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lines/invariants.hpp"

namespace lines::cli {

enum class Command { Compute, Sweep, Selftest };
enum class Engine { Residue, Schubert, Both };
enum class Output { Table, Json };

struct CliConfig {
  Command command = Command::Selftest;
  // compute
  int ambient = 0;
  int degree = 0;
  std::vector<int> insertions;
  // sweep
  int ambient_min = 0;
  int ambient_max = 0;
  bool calabi_yau = false;
  std::optional<int> sweep_degree;
  int points = 0;

  Engine engine = Engine::Residue;
  Output output = Output::Table;
  bool mirror_check = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagree = 3;

struct ParseResult {
  std::optional<CliConfig> config;
  int exit_code = kExitOk;  // meaningful when config is empty
  std::string message;      // diagnostic or help text
};

/// Parses argv. Malformed input yields no config, exit code 2 and a one-line
/// diagnostic; --help yields no config, exit code 0 and the help text.
ParseResult parse_args(int argc, const char* const* argv);

/// Executes a parsed configuration. Exit code 3 when engines (or the mirror
/// identity, with --mirror) disagree on any query.
int run(const CliConfig& config, std::ostream& out, std::ostream& err,
        const Engines& engines = Engines::standard());

/// parse_args followed by run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lines::cli

#endif  // LINES_CLI_HPP
