#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hatp4::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFound = 1;      // pattern found (check) or lemma failure (verify)
inline constexpr int kUsage = 2;      // usage or parse error
inline constexpr int kResource = 3;   // scale, budget or timeout

/// Entry point behind the `hatp4` executable. `args` excludes the program
/// name. Graph input is read from `in` unless --in names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hatp4::cli
