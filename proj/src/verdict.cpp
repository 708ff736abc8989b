#include "rank1/verdict.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rank1 {

namespace {

constexpr std::array<std::pair<Rule, std::string_view>, 12> kRuleTokens{{
    {Rule::None, "-"},
    {Rule::NonIsomorphism, "Thm3.1"},
    {Rule::Disjointness, "Thm3.2"},
    {Rule::DisjointnessBounded, "Thm3.2-d′"},
    {Rule::EventualAgreement, "Cor2.3"},
    {Rule::IsomorphismCriterion, "Cor3.5-1"},
    {Rule::DisjointnessCriterion, "Cor3.5-2"},
    {Rule::DisjointnessCriterionBounded, "Cor3.5-2′"},
    {Rule::SelfJoinings, "Thm4.1"},
    {Rule::SelfJoiningsBounded, "Thm4.1-d′"},
    {Rule::RyzhikovCriterion, "Cor4.6"},
    {Rule::EventualCommensurability, "Thm5.1"},
}};

template <typename T>
std::string join(const std::vector<T>& xs, std::string_view sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

template <typename T>
T parse_number(std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("expected a number, found '" + std::string(text) + "'");
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text) {
  std::vector<T> out;
  if (text.empty()) return out;
  const Word w = parse_word(text);
  for (const Letter x : w.letters()) out.push_back(static_cast<T>(x));
  return out;
}

std::vector<std::string> split_ws(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

void print_ed_machine(std::ostream& os, std::string_view who, const std::vector<EdTrace>& traces) {
  for (const auto& t : traces) {
    os << "ed." << who << ": " << t.d << ' ' << (t.holds ? 1 : 0) << ' ' << t.preperiod << ' ' << t.cycle << ' '
       << join(t.residues) << '\n';
    for (const auto& w : t.witnesses)
      os << "ed." << who << ".witness: " << t.d << ' ' << w.big_n << ' ' << w.n << ' ' << w.i << ' ' << w.value << '\n';
    if (t.failure) {
      os << "ed." << who << ".failure: " << t.d << ' ' << t.failure->big_n << ' ' << t.failure->h_mod << ' '
         << join(t.failure->values) << '\n';
    }
  }
}

void print_ed_text(std::ostream& os, std::string_view who, const std::vector<EdTrace>& traces) {
  for (const auto& t : traces) {
    os << "  (E_" << t.d << ") for " << who << ": " << (t.holds ? "holds" : "fails");
    os << " [h_N mod " << t.d << " = " << join(t.residues, " ") << "; cycle from N=" << t.preperiod << ", length "
       << t.cycle << "]\n";
    if (t.failure) {
      os << "    at N=" << t.failure->big_n << ": h_N ≡ " << t.failure->h_mod << " and every later spacer value in {"
         << join(t.failure->values, ", ") << "} gives h_N + v ≡ 0\n";
    }
  }
}

EdTrace& trace_for(std::vector<EdTrace>& traces, std::uint64_t d) {
  for (auto& t : traces)
    if (t.d == d) return t;
  throw std::invalid_argument("ed detail line before its trace header (d=" + std::to_string(d) + ")");
}

}  // namespace

std::string_view to_string(Rule rule) {
  for (const auto& [r, token] : kRuleTokens)
    if (r == rule) return token;
  return "?";
}

std::optional<Rule> parse_rule(std::string_view token) {
  for (const auto& [r, t] : kRuleTokens)
    if (t == token) return r;
  return std::nullopt;
}

void print_text(std::ostream& os, const Verdict& v) {
  os << "answer: " << to_string(v.answer);
  if (v.rule != Rule::None) os << " (" << to_string(v.rule) << ")";
  os << '\n';
  if (!v.reason.empty()) os << "reason: " << v.reason << '\n';
  os << "stages examined: " << v.depth_used << '\n';
  if (v.alignment) os << "alignment: v_" << v.alignment->n << " of a against w_" << v.alignment->m << " of b\n";
  if (v.agreement) os << "spacer words agree from stage " << *v.agreement << " on\n";
  if (v.telescope) {
    const auto& t = *v.telescope;
    os << "merged cut points: " << join(t.cuts, ", ");
    if (t.periodic) os << " (repeating from cut " << t.tail_from << ")";
    os << '\n';
    for (const auto& c : t.certificates) {
      os << "  merged stage " << c.merged_index << " (stages " << c.first_stage << ".."
         << c.first_stage + c.merged_count - 1 << "): " << c.s << " ⊥ " << c.t << '\n';
    }
    const auto& b = t.a.certificate;
    os << "bounds: R=" << b.input.max_cut << " S=" << b.input.max_spacer << "; merged R=" << b.output.max_cut
       << " <= R^" << b.max_merge << "=" << b.cut_bound << ", S unchanged\n";
  }
  for (std::size_t i = 0; i < v.presentation.size(); ++i) {
    const auto& p = v.presentation[i];
    os << "telescoping " << i + 1 << ": cut points " << join(p.points, ", ");
    if (!p.repeat_steps.empty()) os << " then steps " << join(p.repeat_steps, ", ") << " repeating";
    os << '\n';
  }
  for (const auto& c : v.conditions)
    os << "  condition " << c.name << ": " << (c.holds ? "holds" : "fails") << (c.detail.empty() ? "" : " - ") << c.detail
       << '\n';
  print_ed_text(os, "a", v.ed_a);
  print_ed_text(os, "b", v.ed_b);
}

void print_machine(std::ostream& os, const Verdict& v) {
  os << "answer: " << to_string(v.answer) << '\n';
  os << "rule: " << to_string(v.rule) << '\n';
  if (!v.reason.empty()) os << "reason: " << v.reason << '\n';
  os << "depth_used: " << v.depth_used << '\n';
  if (v.alignment)
    os << "alignment: " << v.alignment->n << ' ' << v.alignment->m << ' ' << (v.alignment->certified ? 1 : 0) << '\n';
  if (v.agreement) os << "agreement: " << *v.agreement << '\n';
  if (v.telescope) {
    const auto& t = *v.telescope;
    os << "telescope.periodic: " << (t.periodic ? 1 : 0) << '\n';
    os << "telescope.cuts: " << join(t.cuts) << '\n';
    os << "telescope.tail_from: " << t.tail_from << '\n';
    for (const auto& c : t.certificates) {
      os << "telescope.certificate: " << c.merged_index << ' ' << c.first_stage << ' ' << c.merged_count << ' '
         << to_string(c.s) << ' ' << to_string(c.t) << '\n';
    }
    const auto& b = t.a.certificate;
    os << "telescope.bounds: " << b.input.max_cut << ' ' << b.input.max_spacer << ' ' << b.output.max_cut << ' '
       << b.output.max_spacer << ' ' << b.max_merge << ' ' << b.cut_bound << '\n';
  }
  for (const auto& p : v.presentation) os << "presentation: " << join(p.points) << " | " << join(p.repeat_steps) << '\n';
  for (const auto& c : v.conditions) os << "condition: " << c.name << ' ' << (c.holds ? 1 : 0) << ' ' << c.detail << '\n';
  print_ed_machine(os, "a", v.ed_a);
  print_ed_machine(os, "b", v.ed_b);
}

Verdict parse_machine(std::istream& in) {
  Verdict v;
  bool saw_answer = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto colon = line.find(": ");
    const std::string key = line.substr(0, colon == std::string::npos ? line.size() : colon);
    const std::string value = colon == std::string::npos ? std::string() : line.substr(colon + 2);
    const auto fields = split_ws(value);
    auto need = [&](std::size_t n) {
      if (fields.size() < n)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": '" + key + "' needs " + std::to_string(n) + " fields");
    };
    try {
      if (key == "answer") {
        saw_answer = true;
        if (value == "Yes") v.answer = Answer::Yes;
        else if (value == "No") v.answer = Answer::No;
        else if (value == "DepthLimited") v.answer = Answer::DepthLimited;
        else if (value == "NotApplicable") v.answer = Answer::NotApplicable;
        else throw std::invalid_argument("unknown answer '" + value + "'");
      } else if (key == "rule") {
        const auto r = parse_rule(value);
        if (!r) throw std::invalid_argument("unknown rule '" + value + "'");
        v.rule = *r;
      } else if (key == "reason") {
        v.reason = value;
      } else if (key == "depth_used") {
        v.depth_used = parse_number<std::size_t>(value);
      } else if (key == "alignment") {
        need(3);
        v.alignment = Alignment{parse_number<std::size_t>(fields[0]), parse_number<std::size_t>(fields[1]), fields[2] == "1"};
      } else if (key == "agreement") {
        v.agreement = parse_number<std::size_t>(value);
      } else if (key.starts_with("telescope.")) {
        if (!v.telescope) v.telescope.emplace();
        auto& t = *v.telescope;
        if (key == "telescope.periodic") {
          t.periodic = value == "1";
        } else if (key == "telescope.cuts") {
          t.cuts = parse_list<std::size_t>(value);
        } else if (key == "telescope.tail_from") {
          t.tail_from = parse_number<std::size_t>(value);
        } else if (key == "telescope.certificate") {
          need(5);
          IncompatibilityCertificate c;
          c.merged_index = parse_number<std::size_t>(fields[0]);
          c.first_stage = parse_number<std::size_t>(fields[1]);
          c.merged_count = parse_number<std::size_t>(fields[2]);
          c.s = parse_word(fields[3]);
          c.t = parse_word(fields[4]);
          t.certificates.push_back(std::move(c));
        } else if (key == "telescope.bounds") {
          need(6);
          auto& b = t.a.certificate;
          b.input.max_cut = parse_number<std::size_t>(fields[0]);
          b.input.max_spacer = parse_number<Letter>(fields[1]);
          b.output.max_cut = parse_number<std::size_t>(fields[2]);
          b.output.max_spacer = parse_number<Letter>(fields[3]);
          b.max_merge = parse_number<std::size_t>(fields[4]);
          b.cut_bound = BigInt(fields[5]);
        } else {
          throw std::invalid_argument("unknown key '" + key + "'");
        }
      } else if (key == "presentation") {
        const auto bar = value.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("presentation needs 'points | steps'");
        CutPattern p;
        const auto points = split_ws(value.substr(0, bar));
        const auto steps = split_ws(value.substr(bar + 1));
        p.points = parse_list<std::size_t>(points.empty() ? "" : points[0]);
        p.repeat_steps = parse_list<std::size_t>(steps.empty() ? "" : steps[0]);
        v.presentation.push_back(std::move(p));
      } else if (key == "condition") {
        need(2);
        ConditionReport c{fields[0], fields[1] == "1", {}};
        const auto pos = value.find(' ', value.find(' ') + 1);
        if (pos != std::string::npos) c.detail = value.substr(pos + 1);
        v.conditions.push_back(std::move(c));
      } else if (key.starts_with("ed.a") || key.starts_with("ed.b")) {
        auto& traces = key[3] == 'a' ? v.ed_a : v.ed_b;
        const std::string_view kind = std::string_view(key).substr(4);
        if (kind.empty()) {
          need(5);
          EdTrace t;
          t.d = parse_number<std::uint64_t>(fields[0]);
          t.holds = fields[1] == "1";
          t.preperiod = parse_number<std::size_t>(fields[2]);
          t.cycle = parse_number<std::size_t>(fields[3]);
          t.residues = parse_list<std::uint64_t>(fields[4]);
          traces.push_back(std::move(t));
        } else if (kind == ".witness") {
          need(5);
          trace_for(traces, parse_number<std::uint64_t>(fields[0]))
              .witnesses.push_back({parse_number<std::size_t>(fields[1]), parse_number<std::size_t>(fields[2]),
                                    parse_number<std::size_t>(fields[3]), parse_number<Letter>(fields[4])});
        } else if (kind == ".failure") {
          need(4);
          trace_for(traces, parse_number<std::uint64_t>(fields[0])).failure =
              EdFailure{parse_number<std::size_t>(fields[1]), parse_number<std::uint64_t>(fields[2]),
                        parse_list<Letter>(fields[3])};
        } else {
          throw std::invalid_argument("unknown key '" + key + "'");
        }
      }
      // Other keys (command echo, spec names) are informational.
    } catch (const std::invalid_argument& e) {
      const std::string msg = e.what();
      if (msg.starts_with("line ")) throw;
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    }
  }
  if (!saw_answer) throw std::invalid_argument("no 'answer:' line in verdict");
  return v;
}

}  // namespace rank1
