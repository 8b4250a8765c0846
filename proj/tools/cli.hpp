#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcadepth::cli {

enum ExitCode { kOk = 0, kPropertyFailed = 1, kInputError = 2, kCapExceeded = 3 };

/// Full command line, argv[0] included. Never throws; errors become exit codes
/// with a message on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcadepth::cli
