#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paraframe {

struct CliOptions {
  bool color = false;  // text-mode color; the binary enables it only on a tty
};

/// Full command dispatch. Exit codes: 0 success, 1 validation/classification
/// failure, 2 parse/usage error, 3 internal consistency failure (a verified
/// closed form disagreed with the direct computation).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                const CliOptions& options = {});

}  // namespace paraframe
