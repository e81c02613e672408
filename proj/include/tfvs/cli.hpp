#ifndef TFVS_CLI_HPP_
#define TFVS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tfvs::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kInputError = 2,
};

/// Seed used by sampling suites when --seed is not given.
inline constexpr std::uint64_t kDefaultCampaignSeed = 20100531;

/// Runs the command line `args` (args[0] is the program name) writing
/// results to `out` and diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfvs::cli

#endif  // TFVS_CLI_HPP_
