#include "rank1/ergodic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rank1 {

namespace {

std::size_t phase_of(const ParameterSpec& spec, std::size_t n) {
  const std::size_t p = spec.preamble().size();
  return n < p ? n : p + spec.tail_phase(n);
}

std::uint64_t mod_of(const BigInt& x, std::uint64_t d) { return static_cast<std::uint64_t>(x % d); }

// Stages >= N realize every distinct stage of the spec within this window.
std::size_t stage_window_end(const ParameterSpec& spec, std::size_t big_n) {
  return std::max(big_n, spec.preamble().size()) + spec.period().size();
}

std::optional<EdWitness> find_witness(const ParameterSpec& spec, std::size_t big_n, std::uint64_t h_mod,
                                      std::uint64_t d) {
  for (std::size_t n = big_n; n < stage_window_end(spec, big_n); ++n) {
    const auto letters = spec.stage(n).s.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if ((h_mod + letters[i] % d) % d != 0) return EdWitness{big_n, n, i + 1, letters[i]};
    }
  }
  return std::nullopt;
}

}  // namespace

EdTrace ed_holds(const ParameterSpec& spec, std::uint64_t d) {
  if (d <= 1) throw std::invalid_argument("(E_d) needs d > 1");
  if (!spec.has_tail()) throw DepthLimited("(E_d) is decided only for specs with a periodic tail");

  EdTrace trace;
  trace.d = d;
  std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> seen;
  std::uint64_t h = 1 % d;
  for (std::size_t n = 0;; ++n) {
    trace.residues.push_back(h);
    const auto key = std::make_pair(h, phase_of(spec, n));
    if (auto it = seen.find(key); it != seen.end()) {
      trace.preperiod = it->second;
      trace.cycle = n - it->second;
      break;
    }
    seen.emplace(key, n);
    const Stage& st = spec.stage(n);
    h = static_cast<std::uint64_t>((BigInt(st.r % d) * h + st.spacer_sum()) % d);
  }

  trace.holds = true;
  for (std::size_t big_n = 0; big_n < trace.preperiod + trace.cycle; ++big_n) {
    const auto w = find_witness(spec, big_n, trace.residues[big_n], d);
    if (!w) {
      trace.holds = false;
      trace.failure = EdFailure{big_n, trace.residues[big_n], spacer_values_from(spec, big_n)};
      trace.witnesses.clear();
      break;
    }
    trace.witnesses.push_back(*w);
  }
  return trace;
}

std::vector<EdTrace> totally_ergodic_up_to(const ParameterSpec& spec, std::uint64_t upto) {
  std::vector<EdTrace> out;
  for (std::uint64_t d = 2; d <= upto; ++d) out.push_back(ed_holds(spec, d));
  return out;
}

bool all_hold(const std::vector<EdTrace>& traces) {
  return std::all_of(traces.begin(), traces.end(), [](const EdTrace& t) { return t.holds; });
}

Check verify_ed_trace(const EdTrace& trace, const ParameterSpec& spec) {
  const std::string tag = "(E_" + std::to_string(trace.d) + "): ";
  if (trace.d <= 1) return Check::fail(tag + "d must exceed 1");
  if (!spec.has_tail()) return Check::fail(tag + "spec has no periodic tail");
  const std::size_t end = trace.preperiod + trace.cycle;
  if (trace.cycle == 0 || trace.residues.size() != end + 1) return Check::fail(tag + "residue list does not span the cycle");

  const Heights h = heights(spec, end);
  for (std::size_t n = 0; n <= end; ++n) {
    if (mod_of(h[n], trace.d) != trace.residues[n])
      return Check::fail(tag + "h_" + std::to_string(n) + " mod d disagrees with the recomputed height");
  }
  if (trace.residues[end] != trace.residues[trace.preperiod] ||
      phase_of(spec, end) != phase_of(spec, trace.preperiod))
    return Check::fail(tag + "state at N=" + std::to_string(end) + " does not repeat N=" + std::to_string(trace.preperiod));

  if (trace.holds) {
    if (trace.witnesses.size() != end) return Check::fail(tag + "expected one witness per N below " + std::to_string(end));
    for (std::size_t k = 0; k < end; ++k) {
      const EdWitness& w = trace.witnesses[k];
      const std::string at = tag + "witness for N=" + std::to_string(k) + ": ";
      if (w.big_n != k || w.n < k) return Check::fail(at + "stage index out of range");
      const Word& s = spec.stage(w.n).s;
      if (w.i == 0 || w.i > s.length() || s.at(w.i) != w.value) return Check::fail(at + "s_n(i) does not match");
      if ((mod_of(h[k], trace.d) + w.value % trace.d) % trace.d == 0) return Check::fail(at + "h_N + value is divisible by d");
    }
    return Check::pass();
  }

  if (!trace.failure) return Check::fail(tag + "negative trace without a failing N");
  const EdFailure& f = *trace.failure;
  if (f.big_n > end) return Check::fail(tag + "failing N lies outside the cycle");
  const BigInt hn = heights(spec, f.big_n)[f.big_n];
  if (mod_of(hn, trace.d) != f.h_mod) return Check::fail(tag + "failing N has a different residue");
  if (spacer_values_from(spec, f.big_n) != f.values) return Check::fail(tag + "value set at stages >= N differs");
  for (Letter v : f.values)
    if ((f.h_mod + v % trace.d) % trace.d != 0) return Check::fail(tag + "value " + std::to_string(v) + " escapes the residue class");
  return Check::pass();
}

}  // namespace rank1
