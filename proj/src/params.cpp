#include "rank1/params.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rank1 {

SpecError::SpecError(std::vector<SpecIssue> issues)
    : Error([&] {
        std::ostringstream os;
        os << "invalid spec";
        for (const auto& issue : issues) {
          os << "; ";
          if (issue.line) os << "line " << issue.line << ": ";
          os << issue.message;
        }
        return os.str();
      }()),
      issues_(std::move(issues)) {}

BigInt Stage::spacer_sum() const {
  BigInt sum = 0;
  for (Letter x : s.letters()) sum += x;
  return sum;
}

const Stage& ParameterSpec::stage(std::size_t n) const {
  if (n < preamble_.size()) return preamble_[n];
  if (period_.empty()) {
    throw DepthLimited("stage " + std::to_string(n) + " lies beyond a spec with no periodic tail (" +
                       std::to_string(preamble_.size()) + " explicit stages)");
  }
  return period_[(n - preamble_.size()) % period_.size()];
}

std::size_t ParameterSpec::tail_phase(std::size_t n) const {
  if (period_.empty() || n < preamble_.size()) throw std::logic_error("tail_phase: stage is not in the tail");
  return (n - preamble_.size()) % period_.size();
}

ParameterSpec ParameterSpec::drop(std::size_t n) const {
  if (n <= preamble_.size()) {
    return {std::vector<Stage>(preamble_.begin() + static_cast<std::ptrdiff_t>(n), preamble_.end()), period_};
  }
  if (period_.empty()) return {};
  std::vector<Stage> rotated = period_;
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(tail_phase(n)), rotated.end());
  return periodic(std::move(rotated));
}

std::size_t joint_horizon(const ParameterSpec& a, const ParameterSpec& b) {
  if (!a.has_tail() || !b.has_tail()) throw DepthLimited("joint horizon needs two periodic tails");
  return std::max(a.preamble().size(), b.preamble().size()) + std::lcm(a.period().size(), b.period().size());
}

bool same_stage_sequence(const ParameterSpec& a, const ParameterSpec& b) {
  if (a.has_tail() != b.has_tail()) return false;
  if (!a.has_tail()) return a.preamble() == b.preamble();
  const std::size_t horizon = joint_horizon(a, b);
  for (std::size_t n = 0; n < horizon; ++n)
    if (!(a.stage(n) == b.stage(n))) return false;
  return true;
}

std::vector<SpecIssue> validate(const ParameterSpec& spec) {
  std::vector<SpecIssue> issues;
  if (spec.empty()) issues.push_back({0, 0, "spec has no stages"});
  auto check = [&](const Stage& st, std::size_t index, const char* where) {
    if (st.r < 2) {
      issues.push_back({0, index, std::string(where) + " stage " + std::to_string(index) + ": cutting value r=" +
                                      std::to_string(st.r) + " must be at least 2"});
    }
    if (st.s.length() + 1 != st.r) {
      issues.push_back({0, index, std::string(where) + " stage " + std::to_string(index) + ": spacer word has length " +
                                      std::to_string(st.s.length()) + " but r-1 = " +
                                      std::to_string(st.r == 0 ? 0 : st.r - 1) + " is required"});
    }
  };
  for (std::size_t i = 0; i < spec.preamble().size(); ++i) check(spec.preamble()[i], i, "preamble");
  for (std::size_t i = 0; i < spec.period().size(); ++i) check(spec.period()[i], spec.preamble().size() + i, "period");
  return issues;
}

void require_valid(const ParameterSpec& spec) {
  auto issues = validate(spec);
  if (!issues.empty()) throw SpecError(std::move(issues));
}

Heights heights(const ParameterSpec& spec, std::size_t depth) {
  Heights out;
  out.values.reserve(depth + 1);
  out.values.emplace_back(1);
  for (std::size_t n = 0; n < depth; ++n) {
    const Stage& st = spec.stage(n);
    out.values.push_back(BigInt(st.r) * out.values.back() + st.spacer_sum());
  }
  return out;
}

FiniteMeasureReport finite_measure_check(const ParameterSpec& spec, std::size_t depth) {
  if (!spec.has_tail()) throw DepthLimited("finite-measure check needs a periodic tail");
  const Bounds b = bounds(spec);
  const Heights h = heights(spec, depth);

  FiniteMeasureReport report;
  report.finite = true;
  BigRational running = 0;
  for (std::size_t n = 0; n < depth; ++n) {
    const BigInt excess = h[n + 1] - BigInt(spec.stage(n).r) * h[n];
    BigRational term(excess, h[n + 1]);
    running += term;
    report.terms.push_back(term);
    report.partial_sums.push_back(running);
  }
  std::ostringstream os;
  os << "bounded parameters R=" << b.max_cut << " S=" << b.max_spacer
     << ": each term is at most S(R-1)/h_{n+1} and h_n >= 2^n, so the series is dominated by a geometric series";
  report.argument = os.str();
  return report;
}

Bounds bounds(const ParameterSpec& spec) {
  Bounds out;
  auto scan = [&](const Stage& st) {
    out.max_cut = std::max(out.max_cut, st.r);
    for (Letter x : st.s.letters()) out.max_spacer = std::max(out.max_spacer, x);
  };
  for (const auto& st : spec.preamble()) scan(st);
  for (const auto& st : spec.period()) scan(st);
  out.certified = spec.has_tail();
  return out;
}

namespace {

bool stages_commensurate(const Stage& x, const Stage& y) { return x.r == y.r && x.spacer_sum() == y.spacer_sum(); }

}  // namespace

CommensurabilityResult commensurate(const ParameterSpec& a, const ParameterSpec& b, std::size_t depth) {
  CommensurabilityResult out;
  const bool exact = a.has_tail() && b.has_tail();
  std::size_t limit = exact ? joint_horizon(a, b) : depth;
  if (!a.has_tail()) limit = std::min(limit, a.preamble().size());
  if (!b.has_tail()) limit = std::min(limit, b.preamble().size());
  for (std::size_t n = 0; n < limit; ++n) {
    ++out.checked;
    if (!stages_commensurate(a.stage(n), b.stage(n))) {
      out.answer = Answer::No;
      out.first_mismatch = n;
      return out;
    }
  }
  out.answer = exact ? Answer::Yes : Answer::DepthLimited;
  return out;
}

std::optional<Alignment> eventually_commensurate(const ParameterSpec& a, const ParameterSpec& b, std::size_t window) {
  auto reach = [](const ParameterSpec& s, std::size_t w) { return s.has_tail() ? w : std::min(w, s.preamble().size()); };
  const Heights ha = heights(a, reach(a, window));
  const Heights hb = heights(b, reach(b, window));

  for (std::size_t n = 0; n <= ha.depth(); ++n) {
    for (std::size_t m = 0; m <= hb.depth(); ++m) {
      if (ha[n] != hb[m]) continue;
      const ParameterSpec da = a.drop(n);
      const ParameterSpec db = b.drop(m);
      if (da.empty() || db.empty()) continue;
      const auto result = commensurate(da, db, window);
      if (result.answer == Answer::No) continue;
      return Alignment{n, m, result.answer == Answer::Yes};
    }
  }
  return std::nullopt;
}

DegeneracyReport degeneracy(const ParameterSpec& spec) {
  if (!spec.has_tail()) throw DepthLimited("degeneracy is decided only for specs with a periodic tail");
  const auto values = spacer_values_from(spec, spec.preamble().size());
  DegeneracyReport out;
  if (values.size() != 1) return out;
  out.degenerate = true;
  out.constant_value = values.front();
  std::size_t from = spec.preamble().size();
  while (from > 0) {
    const Word& s = spec.preamble()[from - 1].s;
    const bool same = std::all_of(s.letters().begin(), s.letters().end(), [&](Letter x) { return x == out.constant_value; });
    if (!same) break;
    --from;
  }
  out.from_stage = from;
  return out;
}

std::vector<Letter> spacer_values_from(const ParameterSpec& spec, std::size_t n) {
  if (!spec.has_tail()) throw DepthLimited("spacer values at all later stages need a periodic tail");
  std::set<Letter> values;
  for (const auto& st : spec.period()) values.insert(st.s.letters().begin(), st.s.letters().end());
  for (std::size_t k = n; k < spec.preamble().size(); ++k)
    values.insert(spec.preamble()[k].s.letters().begin(), spec.preamble()[k].s.letters().end());
  return {values.begin(), values.end()};
}

}  // namespace rank1
