#pragma once
// Decision outcomes with the evidence that justifies them.
//
// Every Yes or No carries witnesses that verify_verdict() re-checks from the
// specs alone (⊥ on merged stages, residues of recomputed heights, stage
// comparisons) without running the decision procedure again.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rank1/answer.hpp"
#include "rank1/ergodic.hpp"
#include "rank1/generate.hpp"
#include "rank1/params.hpp"

namespace rank1 {

/// Which result fired. to_string gives the stable token used in output.
enum class Rule {
  None,
  NonIsomorphism,               // Thm3.1
  Disjointness,                 // Thm3.2
  DisjointnessBounded,          // Thm3.2-d′
  EventualAgreement,            // Cor2.3
  IsomorphismCriterion,         // Cor3.5-1
  DisjointnessCriterion,        // Cor3.5-2
  DisjointnessCriterionBounded, // Cor3.5-2′
  SelfJoinings,                 // Thm4.1
  SelfJoiningsBounded,          // Thm4.1-d′
  RyzhikovCriterion,            // Cor4.6
  EventualCommensurability,     // Thm5.1
};

std::string_view to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view token);

/// One named hypothesis of a sufficient condition and whether it held.
struct ConditionReport {
  std::string name;  // "a", "b", "c", "d′", "degenerate", ...
  bool holds = false;
  std::string detail;
  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

struct Verdict {
  Answer answer = Answer::DepthLimited;
  Rule rule = Rule::None;
  std::string reason;
  std::size_t depth_used = 0;

  std::optional<std::size_t> agreement;  // s_n = t_n for every n >= this
  std::optional<Alignment> alignment;    // stage offsets applied before the other witnesses
  std::optional<IncompatibilityTelescope> telescope;
  std::vector<EdTrace> ed_a;
  std::vector<EdTrace> ed_b;
  std::vector<ConditionReport> conditions;
  std::vector<CutPattern> presentation;  // successive telescopings of spec a
};

void print_text(std::ostream& os, const Verdict& v);

/// One `key: value` line per fact.
void print_machine(std::ostream& os, const Verdict& v);

/// Inverse of print_machine for the fields verify_verdict needs. Throws
/// std::invalid_argument on malformed lines.
Verdict parse_machine(std::istream& in);

}  // namespace rank1
