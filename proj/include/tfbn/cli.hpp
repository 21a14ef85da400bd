#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tfbn/error.hpp"
#include "tfbn/surface.hpp"
#include "tfbn/tf.hpp"

namespace tfbn::cli {

enum ExitCode : int { Ok = 0, InvalidInputExit = 2, OverflowExit = 3, ConsistencyFailure = 4 };

int exit_code_for(ErrorKind kind);

/// "a" or "a,b"; the number of entries must match the rank.
DivisorClass parse_class(const std::string& text, std::size_t rank, const std::string& what);
/// "lo..hi" or a single integer (lo = hi).
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const std::string& what);
/// "lo..hi" applied to every coordinate, or one "lo..hi" per coordinate separated by commas.
Window parse_window(const std::string& text, std::size_t rank);
Window default_window(std::size_t rank, std::int64_t c2);

/// key = value lines; '#' and ';' start comments, [section] headers are ignored.
std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text);

/// Runs the command line (without the program name). Report output goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfbn::cli
