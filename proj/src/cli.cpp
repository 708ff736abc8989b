#include "rank1/cli.hpp"

#include <fstream>
#include <istream>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "rank1/decide.hpp"
#include "rank1/ergodic.hpp"
#include "rank1/generate.hpp"
#include "rank1/spec_format.hpp"
#include "rank1/symbolic.hpp"
#include "rank1/verdict.hpp"

namespace rank1::cli {

namespace {

constexpr std::size_t kMaxShownLetters = 4096;

struct Settings {
  std::string format = "text";
  std::size_t depth = 12;
  std::size_t window = 20;
  std::size_t cap = kDefaultLetterCap;

  bool machine() const { return format == "machine"; }
  DecideOptions decide() const { return {depth, window, cap}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParameterSpec load(const std::string& path, std::istream& in) {
  if (path == "-") return parse_spec(in);
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read spec file '" + path + "'");
  return parse_spec(file);
}

int exit_code(Answer a) {
  switch (a) {
    case Answer::Yes: return kYes;
    case Answer::No: return kNo;
    default: return kUndecided;
  }
}

int emit(std::ostream& out, const Settings& s, const std::string& command, const Verdict& v) {
  if (s.machine()) {
    out << "command: " << command << '\n';
    print_machine(out, v);
  } else {
    print_text(out, v);
  }
  return exit_code(v.answer);
}

int do_generate(const ParameterSpec& spec, const Settings& s, std::ostream& out) {
  const std::size_t depth = spec.has_tail() ? s.depth : std::min(s.depth, spec.preamble().size());
  const GeneratingSequence gen = expand(spec, depth, s.cap);
  for (std::size_t n = 0; n <= depth; ++n) {
    if (s.machine()) out << "height: " << n << ' ' << gen.heights()[n] << '\n';
    else out << "h_" << n << " = " << gen.heights()[n] << '\n';
  }
  for (std::size_t n = 0; n <= depth; ++n) {
    const std::size_t h = gen.height(n);
    if (h > kMaxShownLetters) {
      if (!s.machine()) out << "v_" << n << ": " << h << " letters (not shown)\n";
      continue;
    }
    const std::string word = to_string(gen.word(n));
    if (s.machine()) out << "word: " << n << ' ' << word << '\n';
    else out << "v_" << n << " = " << word << '\n';
  }
  if (spec.has_tail() && depth > 0) {
    const auto report = finite_measure_check(spec, depth);
    if (s.machine()) {
      out << "finite_measure: " << (report.finite ? 1 : 0) << '\n';
      for (std::size_t n = 0; n < report.terms.size(); ++n)
        out << "measure_term: " << n << ' ' << report.terms[n] << ' ' << report.partial_sums[n] << '\n';
    } else {
      out << "finite measure: " << (report.finite ? "yes" : "no") << " (" << report.argument << ")\n";
      for (std::size_t n = 0; n < report.terms.size(); ++n)
        out << "  term " << n << ": " << report.terms[n] << ", partial sum " << report.partial_sums[n] << '\n';
    }
  }
  return 0;
}

int do_canonical(const ParameterSpec& spec, const Settings& s, std::ostream& out) {
  const std::size_t reach = spec.has_tail() ? s.depth : std::min(s.depth, spec.preamble().size());
  const std::size_t depth = std::min(reach, affordable_depth(spec, reach, s.cap));
  if (depth < 2) throw DepthLimited("canonical analysis needs depth >= 2 within the letter cap");
  const CanonicalReport report = canonical_analysis(spec, depth, s.cap);
  const bool m = s.machine();
  out << (m ? "depth: " : "analysis depth: ") << report.depth << '\n';
  for (const auto& e : report.built_into) {
    if (m) {
      out << "built_into: " << e.length << ' ' << (e.stage ? std::to_string(*e.stage) : "-") << ' '
          << (e.canonical ? 1 : 0);
      if (e.witness) out << ' ' << e.witness->first << ' ' << e.witness->second;
      out << '\n';
    } else {
      out << "  prefix of length " << e.length;
      if (e.stage) out << " (v_" << *e.stage << ")";
      out << ": " << (e.canonical ? "canonical at this depth" : "not canonical");
      if (e.witness)
        out << " [u of length " << e.witness->first << " is simply built into w of length " << e.witness->second << "]";
      out << '\n';
    }
  }
  auto list = [](const std::vector<std::size_t>& xs) {
    std::string r;
    for (std::size_t x : xs) r += (r.empty() ? "" : ",") + std::to_string(x);
    return r.empty() ? std::string("-") : r;
  };
  out << (m ? "removable_stages: " : "removable stages: ") << list(report.removable_stages) << '\n';
  out << (m ? "degenerate_flag: " : "v_N simply built from a prefix: ") << (m ? (report.degenerate_flag ? "1" : "0")
                                                                              : (report.degenerate_flag ? "yes" : "no"))
      << '\n';
  if (spec.has_tail()) {
    const auto deg = degeneracy(spec);
    out << (m ? "degenerate: " : "degenerate (exact): ") << (m ? (deg.degenerate ? "1" : "0") : (deg.degenerate ? "yes" : "no"))
        << '\n';
    out << (m ? "structurally_removable: " : "structurally removable stages (exact): ")
        << list(structurally_removable_stages(spec)) << '\n';
  }
  return 0;
}

int do_ergodic(const ParameterSpec& spec, const Settings& s, std::optional<std::uint64_t> d,
               std::optional<std::uint64_t> upto, std::ostream& out) {
  std::vector<EdTrace> traces;
  if (d) traces.push_back(ed_holds(spec, *d));
  else traces = totally_ergodic_up_to(spec, upto ? *upto : bounds(spec).max_spacer);
  Verdict v;
  v.answer = all_hold(traces) ? Answer::Yes : Answer::No;
  v.reason = all_hold(traces) ? "(E_d) holds for every d checked" : "(E_d) fails for some d checked";
  v.ed_a = std::move(traces);
  if (s.machine()) {
    out << "command: ergodic\n";
    print_machine(out, v);
  } else {
    print_text(out, v);
  }
  return exit_code(v.answer);
}

int do_labels(const ParameterSpec& spec, const Settings& s, std::size_t level, std::size_t offset, std::ostream& out) {
  auto gen = std::make_shared<const GeneratingSequence>(expand(spec, level, s.cap));
  const PointedConfig config(gen, level, offset);
  const LabelVector lv = labels(config);
  for (std::size_t n = 0; n < lv.labels.size(); ++n) {
    const Label& l = lv.labels[n];
    const std::string lambda = l.lambda ? std::to_string(*l.lambda) : (s.machine() ? "inf" : "∞");
    const std::string kappa = l.kappa ? (*l.kappa > 0 ? "+1" : std::to_string(*l.kappa)) : (s.machine() ? "inf" : "∞");
    if (s.machine()) out << "label: " << n << ' ' << lambda << ' ' << kappa << '\n';
    else out << "λ_" << n << " = " << lambda << ", κ_" << n << " = " << kappa << '\n';
  }
  return 0;
}

int do_validate(const ParameterSpec& spec, const Settings& s, std::ostream& out) {
  const Bounds b = bounds(spec);
  if (s.machine()) {
    out << "valid: 1\npreamble_stages: " << spec.preamble().size() << "\nperiod_stages: " << spec.period().size()
        << "\nmax_cut: " << b.max_cut << "\nmax_spacer: " << b.max_spacer << "\nbounds_certified: " << (b.certified ? 1 : 0)
        << '\n';
  } else {
    out << "valid spec: " << spec.preamble().size() << " preamble stage(s), " << spec.period().size()
        << " repeating stage(s); R=" << b.max_cut << " S=" << b.max_spacer
        << (b.certified ? "" : " (explicit stages only)") << '\n'
        << print_spec(spec);
  }
  return 0;
}

int do_verify(const std::vector<ParameterSpec>& specs, std::istream& in, std::ostream& out) {
  const Verdict v = parse_machine(in);
  const Check c = verify_verdict(v, specs[0], specs.size() > 1 ? &specs[1] : nullptr);
  if (v.answer != Answer::Yes && v.answer != Answer::No) {
    out << "verified: n/a\nreason: " << to_string(v.answer) << " carries no certificate\n";
    return 0;
  }
  out << "verified: " << (c.ok ? "yes" : "no") << '\n';
  if (!c.ok) out << "reason: " << c.detail << '\n';
  return c.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for rank-one transformations given by cutting and spacer parameters", "rank1"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--depth", s.depth, "Stages to materialize or consult (default 12)");
  app.add_option("--window", s.window, "Alignment search window (default 20)");
  app.add_option("--cap", s.cap, "Largest word to materialize, in letters (default 10^7)");

  std::string spec_a, spec_b;
  std::optional<std::uint64_t> d, upto;
  std::size_t level = 0, offset = 0;
  std::vector<std::string> verify_specs;

  auto* gen = app.add_subcommand("generate", "Heights, words v_n, and the finite-measure series");
  gen->add_option("spec", spec_a, "Spec file, or - for stdin")->required();
  auto* canon = app.add_subcommand("canonical", "Built-from analysis of v_N and canonical flags");
  canon->add_option("spec", spec_a)->required();
  auto* erg = app.add_subcommand("ergodic", "Decide (E_d) for one d or for 2..D");
  erg->add_option("spec", spec_a)->required();
  auto* d_opt = erg->add_option("--d", d, "A single d > 1");
  erg->add_option("--upto", upto, "Every d in 2..D (default: the spacer bound S)")->excludes(d_opt);
  auto* iso = app.add_subcommand("check-iso", "Isomorphism of two specs");
  iso->add_option("a", spec_a)->required();
  iso->add_option("b", spec_b)->required();
  auto* dis = app.add_subcommand("check-disjoint", "Disjointness of two specs");
  dis->add_option("a", spec_a)->required();
  dis->add_option("b", spec_b)->required();
  auto* msj = app.add_subcommand("check-msj", "Minimal self-joinings of all orders");
  msj->add_option("spec", spec_a)->required();
  auto* lab = app.add_subcommand("labels", "Labels λ_n and κ_n of a marked position in v_N");
  lab->add_option("--spec", spec_a)->required();
  lab->add_option("--level", level)->required();
  lab->add_option("--offset", offset, "1-based position in v_N")->required();
  auto* val = app.add_subcommand("validate", "Parse and validate a spec");
  val->add_option("spec", spec_a)->required();
  auto* ver = app.add_subcommand("verify", "Re-check a machine-format verdict read from stdin");
  ver->add_option("specs", verify_specs, "The spec file(s) the verdict refers to")->required()->expected(1, 2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*ver) {
      for (const auto& p : verify_specs)
        if (p == "-") throw UsageError("verify reads the verdict from stdin; spec paths cannot be '-'");
      std::vector<ParameterSpec> specs;
      for (const auto& p : verify_specs) specs.push_back(load(p, in));
      return do_verify(specs, in, out);
    }
    if (spec_a == "-" && spec_b == "-") throw UsageError("only one spec can be read from stdin");
    const ParameterSpec a = load(spec_a, in);
    if (*gen) return do_generate(a, s, out);
    if (*canon) return do_canonical(a, s, out);
    if (*erg) return do_ergodic(a, s, d, upto, out);
    if (*lab) return do_labels(a, s, level, offset, out);
    if (*val) return do_validate(a, s, out);
    if (*msj) return emit(out, s, "check-msj", check_msj_combined(a, s.decide()));
    const ParameterSpec b = load(spec_b, in);
    if (*iso) return emit(out, s, "check-iso", check_isomorphic(a, b, s.decide()));
    if (*dis) return emit(out, s, "check-disjoint", check_disjoint(a, b, s.decide()));
    throw UsageError("no subcommand");
  } catch (const SpecError& e) {
    err << "rank1: " << e.what() << '\n';
    return kInvalidSpec;
  } catch (const UsageError& e) {
    err << "rank1: " << e.what() << '\n';
    return kUsage;
  } catch (const OutOfWindow& e) {
    err << "rank1: " << e.what() << '\n';
    return kUsage;
  } catch (const DepthLimited& e) {
    if (s.machine()) out << "answer: DepthLimited\nreason: " << e.what() << '\n';
    else err << "rank1: depth limited: " << e.what() << '\n';
    return kUndecided;
  } catch (const CapExceeded& e) {
    if (s.machine()) out << "answer: DepthLimited\nreason: " << e.what() << '\n';
    else err << "rank1: " << e.what() << '\n';
    return kUndecided;
  } catch (const CertificateFailed& e) {
    err << "rank1: certificate failed: " << e.what() << '\n';
    return kInternal;
  } catch (const std::invalid_argument& e) {
    err << "rank1: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "rank1: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace rank1::cli
