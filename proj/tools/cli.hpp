#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace munn::cli {

  inline constexpr int kExitOk           = 0;
  inline constexpr int kExitParse        = 2;
  inline constexpr int kExitCap          = 3;
  inline constexpr int kExitVerification = 4;

  // args[0] is the program name. Reports go to `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace munn::cli
