#pragma once

#include <string_view>

namespace rank1 {

/// Outcome of a decision. NotApplicable means a sufficient-condition rule
/// did not fire (some hypothesis failed); it is never a negative answer.
enum class Answer { Yes, No, DepthLimited, NotApplicable };

constexpr std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "Yes";
    case Answer::No: return "No";
    case Answer::DepthLimited: return "DepthLimited";
    case Answer::NotApplicable: return "NotApplicable";
  }
  return "?";
}

}  // namespace rank1
