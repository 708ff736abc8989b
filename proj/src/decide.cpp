#include "rank1/decide.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "rank1/ergodic.hpp"

namespace rank1 {

namespace {

Verdict depth_limited(std::string reason, std::size_t depth) {
  Verdict v;
  v.answer = Answer::DepthLimited;
  v.reason = std::move(reason);
  v.depth_used = depth;
  return v;
}

Verdict not_applicable(Rule rule, std::string reason, ConditionReport failed) {
  Verdict v;
  v.answer = Answer::NotApplicable;
  v.rule = rule;
  v.reason = std::move(reason);
  v.conditions.push_back(std::move(failed));
  return v;
}

std::optional<Verdict> reject_tailless(const ParameterSpec& a, const ParameterSpec* b, const DecideOptions& opts) {
  if (a.has_tail() && (!b || b->has_tail())) return std::nullopt;
  return depth_limited("a spec without a periodic tail determines only finitely many stages", opts.depth);
}

std::optional<Verdict> reject_degenerate(Rule rule, const ParameterSpec& a, const ParameterSpec* b) {
  for (const auto* spec : {&a, b}) {
    if (!spec) continue;
    const auto deg = degeneracy(*spec);
    if (!deg.degenerate) continue;
    const std::string who = spec == &a ? "a" : "b";
    std::ostringstream os;
    os << "every spacer value from stage " << deg.from_stage << " on equals " << deg.constant_value
       << ", so the word of " << who << " is simply built from a finite word";
    return not_applicable(rule, "degenerate rank-one word; the decision rules assume non-degenerate words",
                          {"non-degenerate", false, os.str()});
  }
  return std::nullopt;
}

std::vector<const Stage*> distinct_stages(const ParameterSpec& spec) {
  std::vector<const Stage*> out;
  auto add = [&](const Stage& st) {
    for (const Stage* seen : out)
      if (*seen == st) return;
    out.push_back(&st);
  };
  for (const auto& st : spec.preamble()) add(st);
  for (const auto& st : spec.period()) add(st);
  return out;
}

// The c that creates a hidden occurrence of s in s c s, if any.
std::optional<Letter> hidden_occurrence_value(const Word& s) {
  const std::set<Letter> candidates(s.letters().begin(), s.letters().end());
  for (Letter c : candidates)
    if (occurrences(sandwich(s, c), s).size() > 2) return c;
  return std::nullopt;
}

ConditionReport condition_c(const ParameterSpec& spec) {
  for (const Stage* st : distinct_stages(spec)) {
    if (only_two_occurrences(st->s)) continue;
    std::ostringstream os;
    os << "s=" << st->s;
    if (const auto c = hidden_occurrence_value(st->s)) os << " occurs a third time in s (" << *c << ") s";
    return {"c", false, os.str()};
  }
  return {"c", true, "every spacer word occurs only as the two demonstrated copies in s (c) s"};
}

ConditionReport condition_dprime(const std::vector<EdTrace>& traces, Letter bound) {
  for (const auto& t : traces)
    if (!t.holds) return {"d′", false, "(E_" + std::to_string(t.d) + ") fails at N=" + std::to_string(t.failure->big_n)};
  return {"d′", true, "(E_d) holds for every 1 < d <= S=" + std::to_string(bound)};
}

ParameterSpec apply_patterns(const ParameterSpec& spec, const std::vector<CutPattern>& patterns) {
  ParameterSpec out = spec;
  for (const auto& p : patterns) out = telescope(out, p).spec;
  return out;
}

// Isomorphism logic for commensurate, non-degenerate specs with tails.
Verdict iso_core(const ParameterSpec& a, const ParameterSpec& b, const DecideOptions& opts, Rule rule_yes,
                 Rule rule_no) {
  if (const auto n = agreement_stage(a, b)) {
    Verdict v;
    v.answer = Answer::Yes;
    v.rule = rule_yes;
    v.agreement = n;
    v.depth_used = joint_horizon(a, b);
    v.reason = "s_n = t_n for every n >= " + std::to_string(*n) + ", so (v_N, w_N) is a replacement scheme";
    return v;
  }
  IncompatibilityTelescope t;
  try {
    t = incompatibility_telescope(a, b, opts.depth);
  } catch (const NotCanonical& e) {
    return not_applicable(rule_no, "the presentation is not canonical; merge the removable stage first",
                          {"canonical", false, e.what()});
  }
  if (!t.a.certificate.holds()) throw CertificateFailed("merged cutting values exceed the propagated bound");
  Verdict v;
  v.answer = Answer::No;
  v.rule = rule_no;
  v.depth_used = t.cuts.back();
  v.reason = "the tails differ, and after merging the merged spacer words are incompatible at every differing stage";
  v.telescope = std::move(t);
  return v;
}

Check verify_agreement(const ParameterSpec& a, const ParameterSpec& b, std::size_t big_n) {
  if (!a.has_tail() || !b.has_tail()) return Check::fail("agreement needs two periodic tails");
  if (commensurate(a, b, 0).answer != Answer::Yes) return Check::fail("parameters are not commensurate");
  if (degeneracy(a).degenerate || degeneracy(b).degenerate) return Check::fail("degenerate word");
  const std::size_t start = std::max({big_n, a.preamble().size(), b.preamble().size()});
  const std::size_t stop = start + std::lcm(a.period().size(), b.period().size());
  for (std::size_t n = big_n; n < stop; ++n)
    if (!(a.stage(n) == b.stage(n))) return Check::fail("stage " + std::to_string(n) + " differs");
  return Check::pass();
}

Check verify_telescope(const ParameterSpec& a, const ParameterSpec& b, const IncompatibilityTelescope& t) {
  if (!a.has_tail() || !b.has_tail()) return Check::fail("incompatibility witnesses need two periodic tails");
  if (commensurate(a, b, 0).answer != Answer::Yes) return Check::fail("parameters are not commensurate");
  if (degeneracy(a).degenerate || degeneracy(b).degenerate) return Check::fail("degenerate word");
  const auto& cuts = t.cuts;
  if (cuts.size() < 2 || cuts.front() != 0) return Check::fail("cut list must start at 0 and contain a merged stage");
  for (std::size_t k = 1; k < cuts.size(); ++k)
    if (cuts[k] <= cuts[k - 1] || cuts[k] - cuts[k - 1] > 3) return Check::fail("cut steps must lie in 1..3");
  if (t.tail_from + 1 >= cuts.size()) return Check::fail("repeating part of the cut list is empty");

  const std::size_t joint_start = std::max(a.preamble().size(), b.preamble().size());
  const std::size_t joint_period = std::lcm(a.period().size(), b.period().size());
  const std::size_t loop_start = cuts[t.tail_from];
  if (loop_start < joint_start || (cuts.back() - loop_start) % joint_period != 0)
    return Check::fail("cut list does not close a joint period of the tails");

  const Bounds in = bounds(a);
  const BigInt cube = boost::multiprecision::pow(BigInt(in.max_cut), 3);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (BigInt(merge_stages(a, cuts[k], cuts[k + 1]).r) > cube)
      return Check::fail("merged stage " + std::to_string(k) + " exceeds R^3");
  }

  bool in_loop = false;
  for (const auto& c : t.certificates) {
    const std::string at = "certificate " + std::to_string(c.merged_index) + ": ";
    if (c.merged_index + 1 >= cuts.size() || cuts[c.merged_index] != c.first_stage ||
        cuts[c.merged_index + 1] - c.first_stage != c.merged_count)
      return Check::fail(at + "does not match the cut list");
    if (merge_stages(a, c.first_stage, c.first_stage + c.merged_count).s != c.s ||
        merge_stages(b, c.first_stage, c.first_stage + c.merged_count).s != c.t)
      return Check::fail(at + "merged spacer words differ from the recomputed ones");
    if (!incompatible(c.s, c.t)) return Check::fail(at + "s' and t' are not incompatible");
    if (c.merged_index >= t.tail_from) in_loop = true;
  }
  if (!in_loop) return Check::fail("no incompatibility in the repeating part, so not infinitely often");
  return Check::pass();
}

const EdTrace* find_trace(const std::vector<EdTrace>& traces, std::uint64_t d, bool holds) {
  for (const auto& t : traces)
    if (t.d == d && t.holds == holds) return &t;
  return nullptr;
}

Check verify_presentation(const Verdict& v, const ParameterSpec& a) {
  if (!a.has_tail()) return Check::fail("conditions need a periodic tail");
  ParameterSpec p;
  try {
    p = apply_patterns(a, v.presentation);
  } catch (const std::exception& e) {
    return Check::fail(std::string("cannot rebuild the merged presentation: ") + e.what());
  }
  if (!condition_c(p).holds) return Check::fail("(c) fails on the merged presentation");
  const Bounds bp = bounds(p);
  for (std::uint64_t d = 2; d <= bp.max_spacer; ++d) {
    const EdTrace* t = find_trace(v.ed_a, d, true);
    if (!t) return Check::fail("no holding (E_" + std::to_string(d) + ") trace");
    if (auto c = verify_ed_trace(*t, a); !c) return c;
  }
  return Check::pass();
}

}  // namespace

std::optional<std::size_t> agreement_stage(const ParameterSpec& a, const ParameterSpec& b) {
  const std::size_t horizon = joint_horizon(a, b);
  std::size_t n = std::max(a.preamble().size(), b.preamble().size());
  for (std::size_t k = n; k < horizon; ++k)
    if (!(a.stage(k) == b.stage(k))) return std::nullopt;
  while (n > 0 && a.stage(n - 1) == b.stage(n - 1)) --n;
  return n;
}

Verdict check_isomorphic(const ParameterSpec& a, const ParameterSpec& b, const DecideOptions& opts) {
  if (auto v = reject_tailless(a, &b, opts)) return *v;
  if (auto v = reject_degenerate(Rule::NonIsomorphism, a, &b)) return *v;
  if (commensurate(a, b, opts.depth).answer == Answer::No) return check_isomorphic_general(a, b, opts);
  return iso_core(a, b, opts, Rule::EventualAgreement, Rule::NonIsomorphism);
}

Verdict check_isomorphic_general(const ParameterSpec& a, const ParameterSpec& b, const DecideOptions& opts) {
  if (auto v = reject_tailless(a, &b, opts)) return *v;
  if (auto v = reject_degenerate(Rule::EventualCommensurability, a, &b)) return *v;
  const auto alignment = eventually_commensurate(a, b, opts.window);
  if (!alignment) {
    return depth_limited("no equal heights with commensurate continuations within window " + std::to_string(opts.window) +
                             "; this does not show that none exists",
                         opts.window);
  }
  Verdict v = iso_core(a.drop(alignment->n), b.drop(alignment->m), opts, Rule::EventualCommensurability,
                       Rule::EventualCommensurability);
  v.alignment = alignment;
  v.depth_used += std::max(alignment->n, alignment->m);
  return v;
}

Verdict check_disjoint(const ParameterSpec& a, const ParameterSpec& b, const DecideOptions& opts) {
  if (auto v = reject_tailless(a, &b, opts)) return *v;
  if (auto v = reject_degenerate(Rule::DisjointnessCriterionBounded, a, &b)) return *v;
  if (const auto comm = commensurate(a, b, opts.depth); comm.answer == Answer::No) {
    return not_applicable(Rule::DisjointnessCriterionBounded, "the criterion needs commensurate parameters",
                          {"commensurate", false, "stage " + std::to_string(*comm.first_mismatch) + " differs"});
  }
  if (const auto n = agreement_stage(a, b)) {
    Verdict v;
    v.answer = Answer::No;
    v.rule = Rule::IsomorphismCriterion;
    v.agreement = n;
    v.depth_used = joint_horizon(a, b);
    v.reason = "s_n = t_n from stage " + std::to_string(*n) + " on, so the transformations are isomorphic";
    return v;
  }

  const Letter bound = std::max(bounds(a).max_spacer, bounds(b).max_spacer);
  Verdict v;
  v.ed_a = totally_ergodic_up_to(a, bound);
  v.ed_b = totally_ergodic_up_to(b, bound);
  for (std::size_t i = 0; i < v.ed_a.size(); ++i) {
    if (v.ed_a[i].holds || v.ed_b[i].holds) continue;
    v.answer = Answer::No;
    v.rule = Rule::DisjointnessCriterion;
    v.depth_used = joint_horizon(a, b);
    v.reason = "neither T^" + std::to_string(v.ed_a[i].d) + " nor S^" + std::to_string(v.ed_a[i].d) +
               " is ergodic: a common cyclic factor";
    return v;
  }

  Verdict iso = iso_core(a, b, opts, Rule::DisjointnessCriterionBounded, Rule::DisjointnessCriterionBounded);
  if (iso.answer != Answer::No) return iso;
  v.answer = Answer::Yes;
  v.rule = Rule::DisjointnessCriterionBounded;
  v.telescope = std::move(iso.telescope);
  v.depth_used = iso.depth_used;
  v.reason = "s_n ≠ t_n infinitely often with incompatible merged stages, and for each 1 < d <= D=" +
             std::to_string(bound) + " one of T^d, S^d is ergodic";
  return v;
}

Verdict check_msj(const ParameterSpec& spec, const DecideOptions& opts) {
  if (auto v = reject_tailless(spec, nullptr, opts)) return *v;
  const Bounds b = bounds(spec);
  Verdict v;
  v.rule = Rule::SelfJoiningsBounded;
  v.depth_used = spec.preamble().size() + spec.period().size();
  v.conditions.push_back({"a", true, "r_n <= R=" + std::to_string(b.max_cut)});
  v.conditions.push_back({"b", true, "s_n(i) <= S=" + std::to_string(b.max_spacer)});
  v.conditions.push_back(condition_c(spec));
  v.ed_a = totally_ergodic_up_to(spec, b.max_spacer);
  v.conditions.push_back(condition_dprime(v.ed_a, b.max_spacer));

  std::string failed;
  for (const auto& c : v.conditions)
    if (!c.holds) failed += (failed.empty() ? "" : ", ") + c.name;
  if (failed.empty()) {
    v.answer = Answer::Yes;
    v.reason = "bounded parameters meeting (c) and (d′): minimal self-joinings of all orders";
  } else {
    v.answer = Answer::NotApplicable;
    v.reason = "condition " + failed + " fails; these conditions are sufficient only";
  }
  return v;
}

Verdict check_msj_ryzhikov(const ParameterSpec& spec, const DecideOptions& opts) {
  if (auto v = reject_tailless(spec, nullptr, opts)) return *v;
  const Bounds b = bounds(spec);
  Verdict v;
  v.rule = Rule::RyzhikovCriterion;
  v.depth_used = spec.preamble().size() + spec.period().size();
  v.ed_a = totally_ergodic_up_to(spec, b.max_spacer);
  for (const auto& t : v.ed_a) {
    if (t.holds) continue;
    v.answer = Answer::No;
    v.reason = "T^" + std::to_string(t.d) + " is not ergodic, so T is not totally ergodic";
    v.ed_a = {t};
    return v;
  }
  if (auto d = reject_degenerate(Rule::RyzhikovCriterion, spec, nullptr)) return *d;

  std::vector<std::vector<CutPattern>> candidates{{}};
  try {
    const CanonicalPresentation canon = canonical_presentation(spec);
    const Telescoped merged = nonconstant_gap_telescope(canon.telescoped.spec);
    candidates.push_back({canon.telescoped.pattern, merged.pattern});
  } catch (const Error& e) {
    return not_applicable(Rule::RyzhikovCriterion, "no canonical presentation", {"canonical", false, e.what()});
  }
  for (auto& patterns : candidates) {
    const ParameterSpec p = apply_patterns(spec, patterns);
    ConditionReport c = condition_c(p);
    if (!c.holds) continue;
    v.answer = Answer::Yes;
    v.presentation = std::move(patterns);
    v.conditions = {std::move(c), condition_dprime(v.ed_a, b.max_spacer)};
    v.reason = "totally ergodic, and a presentation generating a subsequence of v_n meets (c) and (d′)";
    return v;
  }
  return depth_limited("condition (c) fails on the merged canonical presentation; canonical boundedness not certified",
                       opts.depth);
}

Verdict check_msj_combined(const ParameterSpec& spec, const DecideOptions& opts) {
  Verdict direct = check_msj(spec, opts);
  if (direct.answer == Answer::Yes) return direct;
  Verdict characterization = check_msj_ryzhikov(spec, opts);
  if (characterization.answer == Answer::Yes || characterization.answer == Answer::No) return characterization;
  if (!characterization.reason.empty()) direct.reason += "; characterization: " + characterization.reason;
  return direct;
}

Check verify_verdict(const Verdict& v, const ParameterSpec& a, const ParameterSpec* b) {
  if (v.answer != Answer::Yes && v.answer != Answer::No) return Check::pass();
  const bool pair_rule = v.rule != Rule::SelfJoinings && v.rule != Rule::SelfJoiningsBounded &&
                         v.rule != Rule::RyzhikovCriterion && v.rule != Rule::None;
  if (pair_rule && !b) return Check::fail("this rule compares two specs; the second spec is missing");
  try {
    switch (v.rule) {
      case Rule::EventualAgreement:
      case Rule::IsomorphismCriterion:
        if (!v.agreement) return Check::fail("missing agreement stage");
        return verify_agreement(a, *b, *v.agreement);
      case Rule::NonIsomorphism:
        if (!v.telescope) return Check::fail("missing incompatibility witnesses");
        return verify_telescope(a, *b, *v.telescope);
      case Rule::EventualCommensurability: {
        if (!v.alignment) return Check::fail("missing alignment");
        const auto [n, m, certified] = *v.alignment;
        if (heights(a, n)[n] != heights(*b, m)[m]) return Check::fail("aligned heights differ");
        const ParameterSpec da = a.drop(n), db = b->drop(m);
        if (v.answer == Answer::Yes) {
          if (!v.agreement) return Check::fail("missing agreement stage");
          return verify_agreement(da, db, *v.agreement);
        }
        if (!v.telescope) return Check::fail("missing incompatibility witnesses");
        return verify_telescope(da, db, *v.telescope);
      }
      case Rule::DisjointnessCriterion: {
        const Letter bound = std::max(bounds(a).max_spacer, bounds(*b).max_spacer);
        for (std::uint64_t d = 2; d <= bound; ++d) {
          const EdTrace* ta = find_trace(v.ed_a, d, false);
          const EdTrace* tb = find_trace(v.ed_b, d, false);
          if (ta && tb && verify_ed_trace(*ta, a) && verify_ed_trace(*tb, *b)) return Check::pass();
        }
        return Check::fail("no d <= D with verified failures of (E_d) for both specs");
      }
      case Rule::DisjointnessCriterionBounded: {
        if (!v.telescope) return Check::fail("missing incompatibility witnesses");
        if (auto c = verify_telescope(a, *b, *v.telescope); !c) return c;
        const Letter bound = std::max(bounds(a).max_spacer, bounds(*b).max_spacer);
        for (std::uint64_t d = 2; d <= bound; ++d) {
          const EdTrace* ta = find_trace(v.ed_a, d, true);
          const EdTrace* tb = find_trace(v.ed_b, d, true);
          const bool ok = (ta && verify_ed_trace(*ta, a)) || (tb && verify_ed_trace(*tb, *b));
          if (!ok) return Check::fail("no verified ergodic power for d=" + std::to_string(d));
        }
        return Check::pass();
      }
      case Rule::SelfJoinings:
      case Rule::SelfJoiningsBounded:
        if (v.answer != Answer::Yes) return Check::fail("this rule never answers No");
        return verify_presentation(v, a);
      case Rule::RyzhikovCriterion:
        if (v.answer == Answer::Yes) return verify_presentation(v, a);
        for (const auto& t : v.ed_a)
          if (!t.holds && verify_ed_trace(t, a)) return Check::pass();
        return Check::fail("no verified failure of (E_d)");
      case Rule::None: {
        // A bare (E_d) report: Yes when every listed d holds.
        if (v.ed_a.empty()) return Check::fail("no (E_d) traces to check");
        bool every = true;
        for (const auto& t : v.ed_a) {
          if (auto c = verify_ed_trace(t, a); !c) return c;
          every = every && t.holds;
        }
        if (every != (v.answer == Answer::Yes)) return Check::fail("answer disagrees with the traces");
        return Check::pass();
      }
      default:
        return Check::fail("rule " + std::string(to_string(v.rule)) + " has no witness format");
    }
  } catch (const std::exception& e) {
    return Check::fail(std::string("witness check raised: ") + e.what());
  }
}

}  // namespace rank1
