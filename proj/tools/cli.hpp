#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tlink/thompson.hpp"

namespace tlink::cli {

enum ExitCode { kOk = 0, kUsage = 1, kCheckFailed = 2 };

/// Expands "( ... )^k" groups, innermost first, into plain words. Negative k
/// repeats the inverse word.
std::string expand_powers(std::string_view text);

/// Parses a word with power sugar and returns its reduced pair.
TreePair element_of(std::string_view text);

/// One word per nonblank line; '#' starts a comment.
std::vector<std::string> read_words(const std::string& path);

/// Runs the command line `args` (without the program name). JSON or CSV
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlink::cli
