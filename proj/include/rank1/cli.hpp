#pragma once
// The `rank1` command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace rank1::cli {

/// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUndecided = 2;  // DepthLimited, NotApplicable, CapExceeded
inline constexpr int kUsage = 64;     // bad flags, unreadable file
inline constexpr int kInvalidSpec = 65;
inline constexpr int kInternal = 70;  // a certificate failed to verify

/// args excludes the program name. A spec path of "-" reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rank1::cli
