#pragma once
// Named specs shared by the test suites.

#include <string>

#include "rank1/params.hpp"
#include "rank1/spec_format.hpp"

namespace rank1::fixtures {

inline Stage stage(std::size_t r, Word s) { return Stage{r, std::move(s)}; }

inline ParameterSpec chacon() { return ParameterSpec::periodic({stage(3, {0, 1})}); }
inline ParameterSpec mirror() { return ParameterSpec::periodic({stage(3, {1, 0})}); }
inline ParameterSpec tail(std::size_t r, Word s) { return ParameterSpec::periodic({stage(r, std::move(s))}); }

/// Chacon-like spec with the given binary prefix e: stage n uses (0,1) when
/// e(n) = 0 and (1,0) when e(n) = 1, then the periodic tail.
inline ParameterSpec chacon_like(const std::vector<int>& prefix, int tail_bit) {
  auto pick = [](int bit) { return bit ? stage(3, {1, 0}) : stage(3, {0, 1}); };
  std::vector<Stage> pre;
  for (int bit : prefix) pre.push_back(pick(bit));
  return ParameterSpec(std::move(pre), {pick(tail_bit)});
}

inline std::string data_file(const std::string& name) { return std::string(RANK1_DATA_DIR) + "/" + name; }

}  // namespace rank1::fixtures
