#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynalg {

// Entry point behind the `dynalg` binary; split out so tests can drive it
// in-process. Returns the process exit code:
//   0  run completed, all checks passed
//   1  run completed, at least one check failed (report still written)
//   2  configuration error (bad flags, unknown model, bad parameter grid)
//   3  output could not be written
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dynalg
