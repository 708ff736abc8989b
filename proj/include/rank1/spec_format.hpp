#pragma once
// Line-oriented text format for parameter specs.
//
//   # Chacon's transformation
//   period:
//   stage r=3 s=0,1
//
// `#` lines and blank lines are ignored. `preamble:` and `period:` open the
// two sections, each at most once; every `stage` line belongs to the most
// recent section. s holds exactly r-1 comma-separated naturals.

#include <istream>
#include <string>
#include <string_view>

#include "rank1/params.hpp"

namespace rank1 {

/// Parses and validates. Throws SpecError with 1-based line numbers.
ParameterSpec parse_spec(std::string_view text);
ParameterSpec parse_spec(std::istream& in);

/// Reads a file ("-" is stdin). Throws std::ios_base::failure when unreadable.
ParameterSpec parse_spec_file(const std::string& path);

std::string print_spec(const ParameterSpec& spec);

}  // namespace rank1
