#pragma once
// The (E_d) criterion: for every N there is a stage n >= N and an index i
// with h_N + s_n(i) not divisible by d. For a periodic tail the pair
// (h_N mod d, stage phase) is eventually periodic in N, so finitely many N
// decide the quantifier.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rank1/params.hpp"

namespace rank1 {

/// For one N: stage n >= N, 1-based index i, value s_n(i) with h_N + value ≢ 0 (mod d).
struct EdWitness {
  std::size_t big_n = 0;
  std::size_t n = 0;
  std::size_t i = 0;
  Letter value = 0;
  friend bool operator==(const EdWitness&, const EdWitness&) = default;
};

/// An N at which every spacer value v at stages >= N has h_N + v ≡ 0 (mod d).
struct EdFailure {
  std::size_t big_n = 0;
  std::uint64_t h_mod = 0;
  std::vector<Letter> values;
  friend bool operator==(const EdFailure&, const EdFailure&) = default;
};

struct EdTrace {
  std::uint64_t d = 2;
  bool holds = false;
  std::optional<EdFailure> failure;   // first failing N when !holds
  std::vector<EdWitness> witnesses;   // one per N in [0, preperiod + cycle) when holds
  std::size_t preperiod = 0;          // states first repeat at preperiod + cycle
  std::size_t cycle = 0;
  std::vector<std::uint64_t> residues;  // h_N mod d for N in [0, preperiod + cycle]
  friend bool operator==(const EdTrace&, const EdTrace&) = default;
};

/// Exact decision of (E_d). Throws std::invalid_argument for d <= 1 and
/// DepthLimited without a periodic tail.
EdTrace ed_holds(const ParameterSpec& spec, std::uint64_t d);

/// Traces for d = 2, ..., upto (empty when upto < 2).
std::vector<EdTrace> totally_ergodic_up_to(const ParameterSpec& spec, std::uint64_t upto);

bool all_hold(const std::vector<EdTrace>& traces);

/// Outcome of re-checking a witness. detail names the first broken claim.
struct Check {
  bool ok = true;
  std::string detail;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const noexcept { return ok; }
};

/// Re-checks a trace against the spec using heights recomputed from scratch:
/// the residues, the state repetition that closes the cycle, and either
/// every per-N witness or the failing N.
Check verify_ed_trace(const EdTrace& trace, const ParameterSpec& spec);

}  // namespace rank1
