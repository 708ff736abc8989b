#include "rank1/spec_format.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rank1 {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// "stage r=<int> s=<list>" with the fields in this order.
Stage parse_stage_line(std::string_view body, std::size_t line, std::vector<SpecIssue>& issues) {
  auto fail = [&](std::string msg) {
    issues.push_back({line, 0, std::move(msg)});
    return Stage{};
  };
  std::istringstream fields{std::string(body)};
  std::string keyword, rfield, sfield, extra;
  fields >> keyword >> rfield >> sfield;
  if (keyword != "stage") return fail("expected 'stage', found '" + keyword + "'");
  if (rfield.rfind("r=", 0) != 0) return fail("expected 'r=<int>' after 'stage'");
  if (sfield.rfind("s=", 0) != 0) return fail("expected 's=<int>,...' after the cutting value");
  if (fields >> extra) return fail("unexpected trailing text '" + extra + "'");

  Stage st;
  const std::string_view rtext = std::string_view(rfield).substr(2);
  const auto [ptr, ec] = std::from_chars(rtext.data(), rtext.data() + rtext.size(), st.r);
  if (rtext.empty() || ec != std::errc() || ptr != rtext.data() + rtext.size())
    return fail("cutting value '" + std::string(rtext) + "' is not a natural number");
  try {
    st.s = parse_word(std::string_view(sfield).substr(2));
  } catch (const std::invalid_argument& e) {
    return fail(std::string("spacer word: ") + e.what());
  }
  if (st.r < 2) issues.push_back({line, 0, "cutting value r=" + std::to_string(st.r) + " must be at least 2"});
  if (st.s.length() + 1 != st.r) {
    issues.push_back({line, 0, "spacer word has length " + std::to_string(st.s.length()) +
                                   ", expected lh(s) = r-1 = " + std::to_string(st.r == 0 ? 0 : st.r - 1)});
  }
  return st;
}

}  // namespace

ParameterSpec parse_spec(std::string_view text) {
  enum class Section { None, Preamble, Period };
  Section section = Section::None;
  bool seen_preamble = false, seen_period = false;
  std::size_t period_line = 0;
  std::vector<Stage> preamble, period;
  std::vector<SpecIssue> issues;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line == "preamble:") {
      if (seen_preamble) issues.push_back({line_no, 0, "duplicate 'preamble:' section"});
      if (seen_period) issues.push_back({line_no, 0, "'preamble:' must come before 'period:'"});
      seen_preamble = true;
      section = Section::Preamble;
      continue;
    }
    if (line == "period:") {
      if (seen_period) issues.push_back({line_no, 0, "duplicate 'period:' section"});
      seen_period = true;
      period_line = line_no;
      section = Section::Period;
      continue;
    }
    if (section == Section::None) {
      issues.push_back({line_no, 0, "stage line outside a 'preamble:' or 'period:' section"});
      continue;
    }
    Stage st = parse_stage_line(line, line_no, issues);
    auto& target = section == Section::Preamble ? preamble : period;
    target.push_back(std::move(st));
  }

  if (seen_period && period.empty()) issues.push_back({period_line, 0, "'period:' section has no stages"});
  if (issues.empty() && preamble.empty() && period.empty()) issues.push_back({0, 0, "spec has no stages"});
  if (!issues.empty()) throw SpecError(std::move(issues));

  ParameterSpec spec(std::move(preamble), std::move(period));
  require_valid(spec);
  return spec;
}

ParameterSpec parse_spec(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

ParameterSpec parse_spec_file(const std::string& path) {
  if (path == "-") return parse_spec(std::cin);
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read spec file '" + path + "'");
  return parse_spec(in);
}

std::string print_spec(const ParameterSpec& spec) {
  std::ostringstream os;
  auto emit = [&](const Stage& st) { os << "stage r=" << st.r << " s=" << to_string(st.s) << '\n'; };
  if (!spec.preamble().empty()) {
    os << "preamble:\n";
    for (const auto& st : spec.preamble()) emit(st);
  }
  if (spec.has_tail()) {
    os << "period:\n";
    for (const auto& st : spec.period()) emit(st);
  }
  return os.str();
}

}  // namespace rank1
