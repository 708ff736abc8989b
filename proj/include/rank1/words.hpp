#pragma once
// Finite-word calculus over the naturals and over {0,1}.
//
// Positions are 1-indexed everywhere in the public API: a word s has
// dom(s) = {1, ..., lh(s)} and an occurrence "at position k" means the
// pattern equals s restricted to [k, k + lh(pattern) - 1].

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rank1 {

using Letter = std::uint64_t;

template <typename T>
class BasicWord {
 public:
  using value_type = T;

  BasicWord() = default;
  BasicWord(std::initializer_list<T> letters) : letters_(letters) {}
  explicit BasicWord(std::vector<T> letters) : letters_(std::move(letters)) {}
  explicit BasicWord(std::span<const T> letters) : letters_(letters.begin(), letters.end()) {}

  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Letter at 1-indexed position i.
  T at(std::size_t i) const {
    if (i == 0 || i > letters_.size()) throw std::out_of_range("word position out of range");
    return letters_[i - 1];
  }

  std::span<const T> letters() const noexcept { return letters_; }
  std::vector<T>& raw() noexcept { return letters_; }
  const std::vector<T>& raw() const noexcept { return letters_; }

  /// s restricted to [k, l], 1-indexed and inclusive.
  BasicWord slice(std::size_t k, std::size_t l) const {
    if (k == 0 || k > l || l > letters_.size()) throw std::out_of_range("bad slice bounds");
    return BasicWord(std::span<const T>(letters_).subspan(k - 1, l - k + 1));
  }

  BasicWord prefix(std::size_t len) const {
    if (len > letters_.size()) throw std::out_of_range("prefix longer than word");
    return BasicWord(std::span<const T>(letters_).first(len));
  }

  void append(const BasicWord& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  }
  void push_back(T letter) { letters_.push_back(letter); }
  void append_run(T letter, std::size_t count) { letters_.insert(letters_.end(), count, letter); }

  friend bool operator==(const BasicWord&, const BasicWord&) = default;
  friend auto operator<=>(const BasicWord&, const BasicWord&) = default;

 private:
  std::vector<T> letters_;
};

/// Words over the naturals: spacer words s_n and their compositions.
using Word = BasicWord<Letter>;
/// Binary words; members of F start and end with 0.
using BinaryWord = BasicWord<std::uint8_t>;

template <typename T>
BasicWord<T> concat(const BasicWord<T>& a, const BasicWord<T>& b) {
  BasicWord<T> out = a;
  out.append(b);
  return out;
}

/// s^n.
template <typename T>
BasicWord<T> power(const BasicWord<T>& s, std::size_t n) {
  BasicWord<T> out;
  out.raw().reserve(s.length() * n);
  for (std::size_t i = 0; i < n; ++i) out.append(s);
  return out;
}

/// s ^ (c) ^ s, the host word used by incompatibility and hidden occurrences.
Word sandwich(const Word& s, Letter c);

/// All positions k with pattern = host[k, k + lh(pattern) - 1], ascending.
template <typename T>
std::vector<std::size_t> occurrences(std::span<const T> host, std::span<const T> pattern) {
  if (pattern.empty()) throw std::invalid_argument("occurrences: empty pattern has no positions");
  std::vector<std::size_t> out;
  if (pattern.size() > host.size()) return out;
  for (std::size_t k = 0; k + pattern.size() <= host.size(); ++k) {
    if (std::equal(pattern.begin(), pattern.end(), host.begin() + static_cast<std::ptrdiff_t>(k)))
      out.push_back(k + 1);
  }
  return out;
}

template <typename T>
std::vector<std::size_t> occurrences(const BasicWord<T>& host, const BasicWord<T>& pattern) {
  return occurrences<T>(host.letters(), pattern.letters());
}

/// All letters equal. The empty word counts as constant.
template <typename T>
bool is_constant(std::span<const T> s) {
  return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

template <typename T>
bool is_constant(const BasicWord<T>& s) {
  return is_constant<T>(s.letters());
}

/// Member of F: binary, nonempty, starts and ends with 0.
bool in_f(std::span<const std::uint8_t> w);
inline bool in_f(const BinaryWord& w) { return in_f(w.letters()); }

/// s ⊥ t for equal-length words: t is not a subword of s^(c)^s for any c.
///
/// A length-L window of s^(c)^s at offset j in [2, L+1] covers the middle
/// letter, which forces c = t(L + 2 - j); offsets 1 and L + 2 are the two
/// demonstrated copies of s. So at most L + 1 hosts need inspecting.
bool incompatible(const Word& s, const Word& t);

/// For every c, s occurs in s^(c)^s only at positions 1 and lh(s) + 2.
bool only_two_occurrences(const Word& s);

/// inner ^ (outer(1)) ^ inner ^ ... ^ (outer(m)) ^ inner.
///
/// With outer the spacer word of a coarser stage and inner the gap word of
/// the finer stage, the result is the gap word of the merged stage.
Word compose_stage(const Word& outer_gapword, const Word& inner);

/// Witness for v ≺ u: u = v 1^{a_1} v ... v 1^{a_n} v with n >= 1.
struct Decomposition {
  BinaryWord base;
  std::vector<std::size_t> gaps;                // a_1, ..., a_n
  std::vector<std::size_t> expected_positions;  // n + 1 starting positions, 1-indexed

  BinaryWord reassemble() const;
};

/// The unique decomposition of u over v, or nullopt (NotBuilt).
/// Throws std::invalid_argument if either input is not in F.
std::optional<Decomposition> decompose(const BinaryWord& u, const BinaryWord& v);

/// v ≺_s u: decompose succeeds and all gaps are equal.
bool is_simply_built(const BinaryWord& u, const BinaryWord& v);

std::string to_string(const Word& w);        // "0,1,0"
std::string to_string(const BinaryWord& w);  // "0010"
Word parse_word(std::string_view text);      // inverse of to_string(Word); "" is the empty word

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '(' << to_string(w) << ')'; }
inline std::ostream& operator<<(std::ostream& os, const BinaryWord& w) { return os << to_string(w); }

}  // namespace rank1
