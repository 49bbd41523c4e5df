#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "radix/error.hpp"

namespace radix::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,   // parse, validation, slot range
  kGateFailure = 3,    // NotRadicalAnnihilator, BadScreen
};

int exit_code_for(ErrorKind kind) noexcept;

enum class Format { Text, Json };

struct AnalyzeArgs {
  std::filesystem::path space;
};

struct LowerArgs {
  std::filesystem::path space;
  std::filesystem::path tensor;
  std::size_t slot = 1;
  std::optional<std::filesystem::path> out;
};

struct ContractArgs {
  std::filesystem::path space;
  std::filesystem::path tensor;
  std::string mode = "mixed";
  std::size_t k = 1;
  std::size_t l = 1;
  std::optional<std::filesystem::path> screen;
  std::optional<std::filesystem::path> out;
};

struct CheckArgs {
  std::filesystem::path space;
  std::filesystem::path tensor;
  std::string predicate = "radannih";
  std::size_t slot = 1;
};

// Each command writes its report to `out` and returns an exit code.
// Library errors propagate as radix::Error.
int cmd_analyze(const AnalyzeArgs& args, Format format, std::ostream& out);
int cmd_lower(const LowerArgs& args, Format format, std::ostream& out);
int cmd_contract(const ContractArgs& args, Format format, std::ostream& out);
int cmd_check(const CheckArgs& args, Format format, std::ostream& out);

/// Full command line (without the program name). Never throws.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace radix::cli
