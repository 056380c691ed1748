#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "whitehead/verify.hpp"

namespace whitehead::cli {

/// Exit codes: 0 success, 1 mathematical failure, 2 usage or I/O error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  int samples = 1000;
  std::optional<double> tol;  // meaning depends on the subcommand
  int restarts = 20;
  int max_iter = 200;
  bool json = false;
  std::string input;  // file path, "-" for stdin, empty for none
  std::string point;  // "t=..,tbar=..,s=..,sbar=..,r=.."
  std::string fix;    // sample: four assignments
  std::string free = "s";
};

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_solve(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_lift(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace whitehead::cli
