#pragma once

#include "dphlog/types.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dphlog {

/// Process exit statuses; one per failure family.
enum ExitStatus : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitEnumeration = 3,
  kExitKernel = 4,
  kExitCharacter = 5,
  kExitNumeric = 6,
};

int exit_status_for(ErrorCode code);

struct RunConfig {
  std::string subcommand;
  int rank = 5;
  std::uint64_t seed = 1;
  double tolerance = 1e-6;
  int threads = 0;
  std::string output;
  bool stretch = false;

  // enumerate/group
  bool count_only = false;
  std::string orbit;
  // certify
  bool randomize = false;
  bool quotient = false;
  // replay
  std::string input;
  // characters
  bool d5_full = false;
  // symbols
  bool check_asym = false;
  // numeric
  std::string gamma = "1/3";
  std::string pi = "5/2";
  int samples = 10;
};

/// The artifact of one command and whether its checks passed.
struct RunResult {
  int status = kExitOk;
  nlohmann::ordered_json artifact;
};

/// Runs one command. Library errors propagate as Error.
RunResult run(const RunConfig& config);

/// Parses argv, runs, writes the artifact (to --out or stdout) and returns
/// the exit status. Never throws.
int main_entry(int argc, char** argv);

}  // namespace dphlog
