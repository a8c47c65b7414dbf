#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace graphlab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kStrictClaimsMismatch = 3,
};

/// Default upper bound on k for `verify` and `indices --k`.
inline constexpr unsigned kDefaultKCap = 10;

/// Runs one invocation. `args` excludes the program name; `kcap_env` is the
/// value of GRAPHLAB_KCAP, if set. Documents go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& kcap_env = std::nullopt);

}  // namespace graphlab::cli
