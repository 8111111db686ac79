#pragma once

#include <iosfwd>

#include "job_config.hpp"
#include "spheregreen/errors.hpp"

namespace spheregreen::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitResonance = 2,
  kExitDomain = 3,
  kExitNumeric = 4,
};

class UsageError : public Error {
 public:
  using Error::Error;
};

int cmd_solve(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_green(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_wavelet(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// Runs the configured command and maps library exceptions to exit codes.
int dispatch(const JobConfig& cfg, std::ostream& out, std::ostream& err);

// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace spheregreen::cli
