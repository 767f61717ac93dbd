#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "eckardt/invariants.hpp"
#include "eckardt/lines.hpp"
#include "eckardt/serialize.hpp"

namespace eckardt::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 2, kInvalidInput = 3, kNumericFailure = 4 };

enum class EckardtMode { Exact, Numeric, Cross };

struct RunOptions {
  std::uint64_t seed = 1;
  double tol = 1e-6;
  int paths = 81;
  bool sample_multiplicities = false;
  std::size_t smoothness_samples = 100;
};

struct CommandResult {
  Json output;
  int exit_code = kOk;
};

TrackerConfig tracker_config(const RunOptions& opts);

CommandResult cmd_invariants(const SylvesterPoint& s, const RunOptions& opts);
CommandResult cmd_moduli_forward(const SylvesterPoint& s, const RunOptions& opts);
CommandResult cmd_moduli_inverse(const ModuliPoint& p, const RunOptions& opts);
CommandResult cmd_moduli_roundtrip(const SylvesterPoint& s, const RunOptions& opts);
CommandResult cmd_eckardt(const SylvesterPoint& s, EckardtMode mode, const RunOptions& opts);
CommandResult cmd_lines(const SylvesterPoint& s, const RunOptions& opts);
CommandResult cmd_sing_verify(const RunOptions& opts);

/// Parses inline "a,b,c,d,e" or a JSON file path.
SylvesterPoint read_sylvester(const std::string& arg);
ModuliPoint read_moduli(const std::string& arg);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eckardt::cli
