#pragma once
// Verdict engine: isomorphism, disjointness and minimal self-joinings for
// specs with periodic tails.
//
// A rule that only gives a sufficient condition never produces No when its
// hypotheses fail; it reports NotApplicable and names the failing condition.

#include <cstddef>
#include <optional>

#include "rank1/generate.hpp"
#include "rank1/params.hpp"
#include "rank1/verdict.hpp"

namespace rank1 {

struct DecideOptions {
  std::size_t depth = 12;   // stages consulted for specs without a tail
  std::size_t window = 20;  // alignment search bound
  std::size_t cap = kDefaultLetterCap;
};

/// Least N with s_n = t_n for all n >= N. Requires both tails.
std::optional<std::size_t> agreement_stage(const ParameterSpec& a, const ParameterSpec& b);

Verdict check_isomorphic(const ParameterSpec& a, const ParameterSpec& b, const DecideOptions& opts = {});

/// Aligns the two generating sequences at equal heights first; non-alignment
/// within the window is DepthLimited, never No.
Verdict check_isomorphic_general(const ParameterSpec& a, const ParameterSpec& b, const DecideOptions& opts = {});

Verdict check_disjoint(const ParameterSpec& a, const ParameterSpec& b, const DecideOptions& opts = {});

/// Sufficient conditions (a), (b), (c), (d′) on the parameters as given.
Verdict check_msj(const ParameterSpec& spec, const DecideOptions& opts = {});

/// Characterization for bounded transformations: No when some T^d is not
/// ergodic; Yes once a merged presentation meets (c) and (d′).
Verdict check_msj_ryzhikov(const ParameterSpec& spec, const DecideOptions& opts = {});

/// check_msj when it says Yes, else the characterization when it is
/// definite, else check_msj's NotApplicable with both explanations.
Verdict check_msj_combined(const ParameterSpec& spec, const DecideOptions& opts = {});

/// Re-checks the witnesses of a Yes or No from the specs alone. b is
/// required for two-spec rules. Other answers have nothing to check.
Check verify_verdict(const Verdict& verdict, const ParameterSpec& a, const ParameterSpec* b = nullptr);

}  // namespace rank1
