#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "incore/derivation.hpp"

namespace incore::cli {

enum class Subcommand { close, index, sigma, core, kappa, classify, equiv, laws, demo_pa_mi, satdemo };
enum class Format { text, json };

struct CommandRequest {
  Subcommand subcommand = Subcommand::close;
  std::vector<std::string> inputs;
  std::optional<std::string> sentence;
  Format format = Format::text;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t budget = kDefaultBudget;
  std::optional<std::size_t> all_depths;
  unsigned m = 3;
  std::string expr;
};

// Exit statuses. Analysis verdicts, "inconsistent" included, are successes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotDerivable = 2;
inline constexpr int kExitBudget = 3;

int run_command(const CommandRequest& req, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incore::cli
