#pragma once
// Brute-force reference implementations and random generators for tests.
// Nothing here shares code with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "rank1/params.hpp"
#include "rank1/words.hpp"

namespace rank1::oracle {

using Letters = std::vector<std::uint64_t>;
using Bits = std::vector<std::uint8_t>;

template <typename T>
std::vector<std::size_t> naive_occurrences(const std::vector<T>& host, const std::vector<T>& pattern) {
  std::vector<std::size_t> out;
  if (pattern.empty() || pattern.size() > host.size()) return out;
  for (std::size_t k = 0; k + pattern.size() <= host.size(); ++k)
    if (std::equal(pattern.begin(), pattern.end(), host.begin() + static_cast<std::ptrdiff_t>(k))) out.push_back(k + 1);
  return out;
}

inline Letters sandwich_of(const Letters& s, std::uint64_t c) {
  Letters host = s;
  host.push_back(c);
  host.insert(host.end(), s.begin(), s.end());
  return host;
}

inline std::uint64_t max_letter(const Letters& s) { return s.empty() ? 0 : *std::max_element(s.begin(), s.end()); }

/// t occurs in no s c s for c in 0..max+L+1.
inline bool incompatible(const Letters& s, const Letters& t) {
  const std::uint64_t top = std::max(max_letter(s), max_letter(t)) + s.size() + 1;
  for (std::uint64_t c = 0; c <= top; ++c)
    if (!naive_occurrences(sandwich_of(s, c), t).empty()) return false;
  return true;
}

inline bool only_two_occurrences(const Letters& s) {
  const std::uint64_t top = max_letter(s) + s.size() + 1;
  for (std::uint64_t c = 0; c <= top; ++c) {
    const auto occ = naive_occurrences(sandwich_of(s, c), s);
    if (occ != std::vector<std::size_t>{1, s.size() + 2}) return false;
  }
  return true;
}

inline Letters compose(const Letters& outer, const Letters& inner) {
  Letters out = inner;
  for (std::uint64_t c : outer) {
    out.push_back(c);
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

/// v_N by the recursion, rebuilding every level from scratch.
inline Bits expand(const ParameterSpec& spec, std::size_t depth) {
  Bits v{0};
  for (std::size_t n = 0; n < depth; ++n) {
    const Stage& st = spec.stage(n);
    Bits next = v;
    for (Letter gap : st.s.letters()) {
      next.insert(next.end(), static_cast<std::size_t>(gap), 1);
      next.insert(next.end(), v.begin(), v.end());
    }
    v = std::move(next);
  }
  return v;
}

/// Every way to write u = v 1^{a_1} v ... 1^{a_n} v with n >= 1, by backtracking.
inline std::vector<std::vector<std::size_t>> all_decompositions(const Bits& u, const Bits& v) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> gaps;
  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (pos + v.size() > u.size()) return;
    if (!std::equal(v.begin(), v.end(), u.begin() + static_cast<std::ptrdiff_t>(pos))) return;
    const std::size_t after = pos + v.size();
    if (after == u.size()) {
      if (!gaps.empty()) out.push_back(gaps);
      return;
    }
    for (std::size_t a = 0; after + a < u.size(); ++a) {
      gaps.push_back(a);
      go(after + a);
      gaps.pop_back();
      if (u[after + a] != 1) break;
    }
  };
  go(0);
  return out;
}

/// (E_d) by direct search: every N up to a horizon past all preamble and
/// residue transients must see some later value v with h_N + v ≢ 0 mod d.
inline bool ed_holds(const ParameterSpec& spec, std::uint64_t d) {
  const std::size_t p = spec.preamble().size();
  const std::size_t l = spec.period().size();
  const std::size_t horizon = (p + l) * static_cast<std::size_t>(d) + p + 2;
  BigInt h = 1;
  for (std::size_t big_n = 0; big_n <= horizon; ++big_n) {
    bool ok = false;
    for (std::size_t n = big_n; n < big_n + p + l && !ok; ++n)
      for (Letter v : spec.stage(n).s.letters())
        if ((h + v) % d != 0) ok = true;
    if (!ok) return false;
    const Stage& st = spec.stage(big_n);
    h = BigInt(st.r) * h + st.spacer_sum();
  }
  return true;
}

/// Expected positions of v_m inside v_n, by tracking copies while building.
inline std::vector<std::size_t> expected_positions(const ParameterSpec& spec, std::size_t m, std::size_t n) {
  std::vector<std::size_t> pos{1};
  std::size_t len = static_cast<std::size_t>(expand(spec, m).size());
  for (std::size_t j = m; j < n; ++j) {
    const Stage& st = spec.stage(j);
    std::vector<std::size_t> next;
    std::size_t shift = 0;
    for (std::size_t i = 0; i < st.r; ++i) {
      for (std::size_t p : pos) next.push_back(p + shift);
      shift += len;
      if (i + 1 < st.r) shift += static_cast<std::size_t>(st.s.at(i + 1));
    }
    len = shift;
    pos = std::move(next);
  }
  return pos;
}

// Random generation.

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline Letters random_letters(Rng& rng, std::size_t len, std::uint64_t max_letter) {
  Letters out(len);
  for (auto& x : out) x = uniform(rng, 0, max_letter);
  return out;
}

inline Stage random_stage(Rng& rng, std::size_t max_r, std::uint64_t max_spacer) {
  Stage st;
  st.r = static_cast<std::size_t>(uniform(rng, 2, max_r));
  st.s = Word(random_letters(rng, st.r - 1, max_spacer));
  return st;
}

inline ParameterSpec random_spec(Rng& rng, std::size_t max_r, std::uint64_t max_spacer, std::size_t max_preamble = 3,
                                 std::size_t max_period = 3) {
  std::vector<Stage> pre(uniform(rng, 0, max_preamble)), per(uniform(rng, 1, max_period));
  for (auto& st : pre) st = random_stage(rng, max_r, max_spacer);
  for (auto& st : per) st = random_stage(rng, max_r, max_spacer);
  return {std::move(pre), std::move(per)};
}

inline Word to_word(const Letters& xs) { return Word(xs); }
inline Letters to_letters(const Word& w) { return {w.letters().begin(), w.letters().end()}; }
inline Bits to_bits(const BinaryWord& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace rank1::oracle
