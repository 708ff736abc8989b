#pragma once
// Generating sequences, telescoping, and canonical-sequence analysis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rank1/params.hpp"
#include "rank1/words.hpp"

namespace rank1 {

inline constexpr std::size_t kDefaultLetterCap = 10'000'000;

/// v_0 = 0, v_{n+1} = v_n 1^{s_n(1)} v_n ... 1^{s_n(r_n - 1)} v_n.
///
/// Every v_n is an initial segment of v_N, so only v_N is stored and
/// word(n) is its prefix of length h_n.
class GeneratingSequence {
 public:
  GeneratingSequence(ParameterSpec spec, Heights heights, BinaryWord top);

  const ParameterSpec& spec() const noexcept { return spec_; }
  std::size_t depth() const noexcept { return heights_.depth(); }
  const Heights& heights() const noexcept { return heights_; }
  std::size_t height(std::size_t n) const;
  const BinaryWord& top() const noexcept { return top_; }

  std::span<const std::uint8_t> view(std::size_t n) const;
  BinaryWord word(std::size_t n) const { return BinaryWord(view(n)); }

 private:
  ParameterSpec spec_;
  Heights heights_;
  BinaryWord top_;
};

/// Throws DepthLimited past a tail-less spec and CapExceeded when h_N > cap.
GeneratingSequence expand(const ParameterSpec& spec, std::size_t depth, std::size_t cap = kDefaultLetterCap);

/// Largest N <= depth whose h_N fits under cap (and is reachable).
std::size_t affordable_depth(const ParameterSpec& spec, std::size_t depth, std::size_t cap = kDefaultLetterCap);

/// Stages [from, to) merged into one: r = Π r_j, s by iterated compose_stage.
Stage merge_stages(const ParameterSpec& spec, std::size_t from, std::size_t to);

/// Cut points n_0 = 0 < n_1 < ... . After the explicit points the cuts keep
/// advancing by repeat_steps cyclically; with no steps the pattern is finite.
struct CutPattern {
  std::vector<std::size_t> points{0};
  std::vector<std::size_t> repeat_steps;

  static CutPattern every(std::size_t step) { return {{0}, {step}}; }
};

/// Bound bookkeeping across a telescoping: merging at most k stages turns a
/// cutting bound R into R^k and leaves the spacer bound S unchanged.
struct TelescopeCertificate {
  Bounds input;
  Bounds output;
  std::size_t max_merge = 1;
  BigInt cut_bound;  // input.max_cut ^ max_merge

  bool holds() const { return BigInt(output.max_cut) <= cut_bound && output.max_spacer <= input.max_spacer; }
};

struct Telescoped {
  ParameterSpec spec;
  CutPattern pattern;
  std::vector<std::size_t> cuts;  // cut points materialized through one tail period
  TelescopeCertificate certificate;
};

/// expand(result.spec, k) reproduces v_{n_k} of the input verbatim.
Telescoped telescope(const ParameterSpec& spec, const CutPattern& pattern);

/// Finite cut list; the result has no tail.
ParameterSpec telescope(const ParameterSpec& spec, std::span<const std::size_t> cut_points);

/// Z-array and 1-run index over a binary word, answering "is prefix u built
/// from prefix v" in O(lh(u) / lh(v)) after linear preprocessing.
class PrefixIndex {
 public:
  explicit PrefixIndex(std::span<const std::uint8_t> word);

  std::size_t size() const noexcept { return z_.size(); }

  /// Gaps of prefix(host_len) over prefix(base_len), or nullopt if not built.
  std::optional<std::vector<std::size_t>> gaps(std::size_t base_len, std::size_t host_len) const;
  bool built(std::size_t base_len, std::size_t host_len) const { return gaps(base_len, host_len).has_value(); }
  bool simply_built(std::size_t base_len, std::size_t host_len) const;

 private:
  std::span<const std::uint8_t> word_;
  std::vector<std::uint32_t> z_;
  std::vector<std::uint32_t> ones_;
};

/// Lengths of every proper prefix u in F of v with u ≺ v, ascending.
std::vector<std::size_t> built_into_lengths(std::span<const std::uint8_t> v);
std::vector<BinaryWord> built_into(const BinaryWord& v);

struct CanonicalEntry {
  std::size_t length = 0;             // the word is the prefix of v_N of this length
  std::optional<std::size_t> stage;   // n with h_n = length, when it is a v_n
  bool canonical = true;              // canonical at this depth
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (lh u, lh w): u ≺ v ≺ w, u ≺_s w
};

/// Depth-relative canonical analysis of v_N. A non-canonical flag carries a
/// witness that persists at every larger depth; a canonical flag may still
/// be refuted deeper.
struct CanonicalReport {
  std::size_t depth = 0;
  std::vector<CanonicalEntry> built_into;  // every u ≺ v_N, ascending length
  std::vector<std::size_t> removable_stages;
  bool degenerate_flag = false;  // v_N simply built from some u
  std::optional<std::size_t> degenerate_witness;  // lh u

  std::vector<std::size_t> canonical_lengths() const;
};

CanonicalReport canonical_analysis(const ParameterSpec& spec, std::size_t depth, std::size_t cap = kDefaultLetterCap);

/// Stage n + 1 such that v_n ≺_s v_{n+2}, i.e. compose_stage(s_{n+1}, s_n)
/// is constant; such a v_{n+1} is never canonical. Scans all stage pairs of a
/// periodic spec (exact) or the explicit ones otherwise.
std::vector<std::size_t> structurally_removable_stages(const ParameterSpec& spec);

/// Merges structurally removable stages until none remain. The result's
/// stage sequence generates a subsequence of the input's v_n.
struct CanonicalPresentation {
  Telescoped telescoped;
  std::vector<std::size_t> removed;  // input stage indices dropped (first pass positions)
  std::size_t passes = 0;
};

CanonicalPresentation canonical_presentation(const ParameterSpec& spec);

/// Witness that merged stage k of the telescoped pair satisfies s'_k ⊥ t'_k.
struct IncompatibilityCertificate {
  std::size_t merged_index = 0;
  std::size_t first_stage = 0;   // n_k in the input indexing
  std::size_t merged_count = 0;  // n_{k+1} - n_k, 2 or 3
  Word s;
  Word t;
};

struct IncompatibilityTelescope {
  Telescoped a;
  Telescoped b;
  CutPattern pattern;
  std::vector<std::size_t> cuts;  // n_0, n_1, ... through one joint period
  std::size_t tail_from = 0;      // merged index where the periodic part starts
  std::vector<IncompatibilityCertificate> certificates;
  bool periodic = false;
};

/// Cut sequence n_0 = 0; n_{k+1} = n_k + 1 when s_{n_k} = t_{n_k}, else
/// n_k + 2 when s_{n_k + 1} is non-constant, else n_k + 3. Each merged
/// stage with s_{n_k} ≠ t_{n_k} must come out incompatible.
///
/// Throws NotCanonical when the three-stage branch meets a constant gap
/// word (the middle v is then not canonical), CertificateFailed if an
/// expected incompatibility does not hold.
IncompatibilityTelescope incompatibility_telescope(const ParameterSpec& a, const ParameterSpec& b, std::size_t depth);

/// Single-spec variant: n_{k+1} = n_k + 2 when s_{n_k+1} is non-constant,
/// else n_k + 3. Requires a periodic tail.
Telescoped nonconstant_gap_telescope(const ParameterSpec& spec);

}  // namespace rank1
