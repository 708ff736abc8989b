#pragma once
// Cutting/spacer parameter sequences in finite presentation.
//
// A ParameterSpec is an explicit preamble followed by an optional tail that
// repeats forever. Eventually periodic sequences are the class on which the
// "for all n" and "for infinitely many n" quantifiers of the decision rules
// reduce to finite checks; a spec without a tail only determines its
// preamble, and queries past it raise DepthLimited.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rank1/answer.hpp"
#include "rank1/error.hpp"
#include "rank1/words.hpp"

namespace rank1 {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// One step of a construction: r copies of v_n separated by the spacer
/// runs s(1), ..., s(r-1). Validity (r >= 2, lh(s) = r - 1) is checked by
/// validate(), not enforced on construction, so malformed input can be
/// reported rather than rejected outright.
struct Stage {
  std::size_t r = 2;
  Word s;

  /// Σ s(i).
  BigInt spacer_sum() const;
  friend bool operator==(const Stage&, const Stage&) = default;
};

class ParameterSpec {
 public:
  ParameterSpec() = default;
  ParameterSpec(std::vector<Stage> preamble, std::vector<Stage> period)
      : preamble_(std::move(preamble)), period_(std::move(period)) {}

  static ParameterSpec periodic(std::vector<Stage> period) { return {{}, std::move(period)}; }
  static ParameterSpec finite(std::vector<Stage> stages) { return {std::move(stages), {}}; }

  const std::vector<Stage>& preamble() const noexcept { return preamble_; }
  const std::vector<Stage>& period() const noexcept { return period_; }
  bool has_tail() const noexcept { return !period_.empty(); }
  bool empty() const noexcept { return preamble_.empty() && period_.empty(); }

  /// Whether stage n is determined.
  bool reaches(std::size_t n) const noexcept { return has_tail() || n < preamble_.size(); }

  /// stage(n) = preamble[n] for n < lh(preamble), else tail[(n - lh(preamble)) mod lh(tail)].
  const Stage& stage(std::size_t n) const;

  /// Phase of stage n inside the tail, for n past the preamble.
  std::size_t tail_phase(std::size_t n) const;

  /// The spec whose stage k is this spec's stage n + k.
  ParameterSpec drop(std::size_t n) const;

  /// Representation equality (same preamble and tail lists).
  friend bool operator==(const ParameterSpec&, const ParameterSpec&) = default;

 private:
  std::vector<Stage> preamble_;
  std::vector<Stage> period_;
};

/// Number of leading stages after which two periodic specs repeat jointly:
/// max preamble length plus the lcm of the tail lengths. Comparing stages
/// [0, horizon) decides any stagewise "for all n" between them.
std::size_t joint_horizon(const ParameterSpec& a, const ParameterSpec& b);

/// Same denoted stage sequence, regardless of presentation.
bool same_stage_sequence(const ParameterSpec& a, const ParameterSpec& b);

std::vector<SpecIssue> validate(const ParameterSpec& spec);

/// Throws SpecError listing every issue, or returns normally.
void require_valid(const ParameterSpec& spec);

struct Heights {
  std::vector<BigInt> values;  // h_0, ..., h_N

  const BigInt& operator[](std::size_t n) const { return values.at(n); }
  std::size_t depth() const noexcept { return values.empty() ? 0 : values.size() - 1; }
};

/// h_0 = 1, h_{n+1} = r_n h_n + Σ s_n(i), exactly.
Heights heights(const ParameterSpec& spec, std::size_t depth);

struct FiniteMeasureReport {
  bool finite = false;
  std::vector<BigRational> terms;         // (h_{n+1} - r_n h_n) / h_{n+1}
  std::vector<BigRational> partial_sums;  // running sums of terms
  std::string argument;
};

/// Summability of Σ (h_{n+1} - r_n h_n) / h_{n+1}. Requires a tail; bounded
/// tails always pass since h_n >= 2^n makes the series geometric.
FiniteMeasureReport finite_measure_check(const ParameterSpec& spec, std::size_t depth);

struct Bounds {
  std::size_t max_cut = 0;  // R
  Letter max_spacer = 0;    // S
  bool certified = false;   // false when only the preamble was scanned
};

Bounds bounds(const ParameterSpec& spec);

struct CommensurabilityResult {
  Answer answer = Answer::DepthLimited;
  std::optional<std::size_t> first_mismatch;
  std::size_t checked = 0;  // stages compared
};

/// Equal cutting values and equal spacer sums at every stage.
CommensurabilityResult commensurate(const ParameterSpec& a, const ParameterSpec& b, std::size_t depth);

struct Alignment {
  std::size_t n = 0;  // index into a's generating sequence
  std::size_t m = 0;  // index into b's generating sequence
  bool certified = false;
  friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Least (N, M) in lexicographic order, both <= window, with h^a_N = h^b_M
/// and the stages from there on commensurate. nullopt means none within the
/// window, which proves nothing about larger indices.
std::optional<Alignment> eventually_commensurate(const ParameterSpec& a, const ParameterSpec& b, std::size_t window);

struct DegeneracyReport {
  bool degenerate = false;
  Letter constant_value = 0;  // the eventual spacer value when degenerate
  std::size_t from_stage = 0;
};

/// V is simply built from some word iff every spacer value from some stage on
/// equals one constant; for a periodic tail that is "the tail uses one value".
DegeneracyReport degeneracy(const ParameterSpec& spec);

/// Distinct spacer values occurring at stages >= n, ascending. Requires a tail.
std::vector<Letter> spacer_values_from(const ParameterSpec& spec, std::size_t n);

}  // namespace rank1
