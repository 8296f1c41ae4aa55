#pragma once

// Command implementations behind the filterlab CLI. Each returns its output
// and exit code instead of touching the process streams:
//   0  predicate holds / command succeeded
//   1  predicate fails / hypothesis of the requested extension fails
//   2  input or usage error

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "filterlab/enumerate.hpp"

namespace filterlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;

enum class CheckKind { Filter, Base, Ultrafilter, MaxFilter, Free, Fip, Frechet };
enum class ExtendTarget { Base, Filter, Ultrafilter };

struct CommandOutput {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

CommandOutput cmd_check(CheckKind kind, std::string_view document);
CommandOutput cmd_extend(ExtendTarget target, std::string_view document, bool trace = false);
CommandOutput cmd_enumerate(std::size_t n, EnumerationKind kind, bool count_only);

/// Full command line (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace filterlab::cli
