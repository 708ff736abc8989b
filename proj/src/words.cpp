#include "rank1/words.hpp"

#include <charconv>
#include <sstream>

namespace rank1 {

namespace {

// Does t match s^(c)^s at 1-indexed offset j, where L = lh(s) = lh(t)?
bool matches_sandwich_at(const Word& s, Letter c, const Word& t, std::size_t j) {
  const std::size_t len = s.length();
  for (std::size_t i = 1; i <= len; ++i) {
    const std::size_t p = j + i - 1;
    Letter host;
    if (p <= len)
      host = s.at(p);
    else if (p == len + 1)
      host = c;
    else
      host = s.at(p - len - 1);
    if (host != t.at(i)) return false;
  }
  return true;
}

// Some offset j in [2, L+1] hosts t once the middle letter is forced.
bool has_hidden_occurrence(const Word& s, const Word& t) {
  const std::size_t len = s.length();
  for (std::size_t j = 2; j <= len + 1; ++j) {
    const Letter forced = t.at(len + 2 - j);
    if (matches_sandwich_at(s, forced, t, j)) return true;
  }
  return false;
}

}  // namespace

Word sandwich(const Word& s, Letter c) {
  Word out = s;
  out.push_back(c);
  out.append(s);
  return out;
}

bool in_f(std::span<const std::uint8_t> w) {
  if (w.empty() || w.front() != 0 || w.back() != 0) return false;
  return std::all_of(w.begin(), w.end(), [](std::uint8_t b) { return b <= 1; });
}

bool incompatible(const Word& s, const Word& t) {
  if (s.length() != t.length()) throw std::invalid_argument("incompatible: words must have equal length");
  if (s.empty()) throw std::invalid_argument("incompatible: words must be nonempty");
  if (s == t) return false;
  return !has_hidden_occurrence(s, t);
}

bool only_two_occurrences(const Word& s) {
  if (s.empty()) throw std::invalid_argument("only_two_occurrences: word must be nonempty");
  return !has_hidden_occurrence(s, s);
}

Word compose_stage(const Word& outer_gapword, const Word& inner) {
  if (outer_gapword.empty()) throw std::invalid_argument("compose_stage: outer gap word must be nonempty");
  Word out;
  out.raw().reserve((outer_gapword.length() + 1) * inner.length() + outer_gapword.length());
  out.append(inner);
  for (Letter gap : outer_gapword.letters()) {
    out.push_back(gap);
    out.append(inner);
  }
  return out;
}

BinaryWord Decomposition::reassemble() const {
  BinaryWord out = base;
  for (std::size_t gap : gaps) {
    out.append_run(1, gap);
    out.append(base);
  }
  return out;
}

std::optional<Decomposition> decompose(const BinaryWord& u, const BinaryWord& v) {
  if (!in_f(u) || !in_f(v)) throw std::invalid_argument("decompose: both words must lie in F");
  const auto host = u.letters();
  const auto base = v.letters();
  const std::size_t n = host.size();
  const std::size_t len = base.size();

  Decomposition out;
  out.base = v;
  std::size_t pos = 0;  // 0-indexed start of the next expected copy
  while (true) {
    if (pos + len > n) return std::nullopt;
    if (!std::equal(base.begin(), base.end(), host.begin() + static_cast<std::ptrdiff_t>(pos))) return std::nullopt;
    out.expected_positions.push_back(pos + 1);
    pos += len;
    if (pos == n) break;
    std::size_t ones = 0;
    while (pos < n && host[pos] == 1) {
      ++pos;
      ++ones;
    }
    out.gaps.push_back(ones);
  }
  if (out.gaps.empty()) return std::nullopt;  // u = v is not built from v
  return out;
}

bool is_simply_built(const BinaryWord& u, const BinaryWord& v) {
  const auto d = decompose(u, v);
  return d && is_constant<std::size_t>(d->gaps);
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (Letter x : w.letters()) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os.str();
}

std::string to_string(const BinaryWord& w) {
  std::string out;
  out.reserve(w.length());
  for (std::uint8_t b : w.letters()) out.push_back(static_cast<char>('0' + b));
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field = text.substr(start, comma == std::string_view::npos ? text.size() - start : comma - start);
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("not a natural number: '" + std::string(field) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace rank1
