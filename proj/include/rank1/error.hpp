#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rank1 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query reached beyond what a finitely presented spec determines
/// (no periodic tail, or depth beyond the explicit stages).
class DepthLimited : public Error {
 public:
  using Error::Error;
};

/// Materializing a word would exceed the configured letter cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A position-based query left the finite window of a pointed configuration.
class OutOfWindow : public Error {
 public:
  using Error::Error;
};

/// A replacement scheme whose expected-occurrence positions disagree.
class SchemeInvalid : public Error {
 public:
  using Error::Error;
};

/// A certificate that the construction guarantees failed to verify.
/// Always indicates a violated precondition or a bug; never swallowed.
class CertificateFailed : public Error {
 public:
  using Error::Error;
};

/// The presentation has a stage that is provably not on the canonical
/// generating sequence (v_n simply built from v_{n-2}'s successor chain).
class NotCanonical : public Error {
 public:
  NotCanonical(std::string what, std::size_t removable_stage)
      : Error(std::move(what)), removable_stage_(removable_stage) {}
  std::size_t removable_stage() const noexcept { return removable_stage_; }

 private:
  std::size_t removable_stage_;
};

struct SpecIssue {
  std::size_t line = 0;   // 0 when not tied to a source line
  std::size_t stage = 0;  // index in the stage sequence
  std::string message;
};

/// Syntax or validation failure of a parameter spec.
class SpecError : public Error {
 public:
  explicit SpecError(std::vector<SpecIssue> issues);
  const std::vector<SpecIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<SpecIssue> issues_;
};

}  // namespace rank1
