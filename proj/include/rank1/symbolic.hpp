#pragma once
// Points of the subshift modelled at finite scale.
//
// A PointedConfig is v_N with one of its positions p marked as coordinate 0,
// so coordinate x is position p + x of v_N. Queries that need letters or
// expected occurrences outside v_N raise OutOfWindow.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "rank1/generate.hpp"

namespace rank1 {

/// 1-based positions of the expected occurrences of v_m in v_n, from the
/// stage structure (not substring search). Requires m <= n <= gen depth.
std::vector<std::size_t> expected_positions(const GeneratingSequence& gen, std::size_t m, std::size_t n);

class PointedConfig {
 public:
  /// offset is a 1-based position in v_level.
  PointedConfig(std::shared_ptr<const GeneratingSequence> gen, std::size_t level, std::size_t offset);

  const GeneratingSequence& gen() const noexcept { return *gen_; }
  const std::shared_ptr<const GeneratingSequence>& gen_ptr() const noexcept { return gen_; }
  std::size_t level() const noexcept { return level_; }
  std::size_t offset() const noexcept { return offset_; }

  /// Window of coordinates covered by v_level.
  std::int64_t first_coordinate() const noexcept;
  std::int64_t last_coordinate() const noexcept;
  std::uint8_t at(std::int64_t coordinate) const;

  friend bool operator==(const PointedConfig& x, const PointedConfig& y) {
    return x.gen_ == y.gen_ && x.level_ == y.level_ && x.offset_ == y.offset_;
  }

 private:
  std::shared_ptr<const GeneratingSequence> gen_;
  std::size_t level_;
  std::size_t offset_;
};

/// λ_n and κ_n; nullopt stands for ∞ (coordinate 0 lies in a spacer at level n or below).
struct Label {
  std::optional<std::size_t> lambda;
  std::optional<int> kappa;
  friend bool operator==(const Label&, const Label&) = default;
};

struct LabelVector {
  std::vector<Label> labels;  // index n = 0, ..., level - 1
};

/// Throws OutOfWindow when n + 1 > level.
Label label(const PointedConfig& config, std::size_t n);
LabelVector labels(const PointedConfig& config);

/// Coordinate where the expected v_n containing coordinate 0 begins, or
/// nullopt when coordinate 0 is in no expected v_n. Requires n <= level.
std::optional<std::int64_t> expected_start(const PointedConfig& config, std::size_t n);

struct Interval {
  std::int64_t c = 0;
  std::int64_t d = 0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intersection of the coordinate ranges of the expected v_n containing
/// coordinate 0 in each config; nullopt when disjoint. Throws OutOfWindow if
/// either config has coordinate 0 outside every expected v_n.
std::optional<Interval> overlap_interval(const PointedConfig& x, const PointedConfig& y, std::size_t n);

/// v = v_m of source at level Ls and w = w_k of target at level Lt.
struct ReplacementScheme {
  std::shared_ptr<const GeneratingSequence> source;
  std::size_t source_stage = 0;
  std::size_t source_level = 0;
  std::shared_ptr<const GeneratingSequence> target;
  std::size_t target_stage = 0;
  std::size_t target_level = 0;

  ReplacementScheme inverse() const {
    return {target, target_stage, target_level, source, source_stage, source_level};
  }
};

/// Throws SchemeInvalid unless the two words have the same length and the
/// expected occurrences of v and w sit at the same positions.
void check_scheme(const ReplacementScheme& scheme);

/// Replaces every expected v by w. Positions are preserved, so the image has
/// the same offset in the target word. Throws SchemeInvalid for an invalid
/// scheme or a config not drawn from the scheme's source window.
PointedConfig replace(const PointedConfig& config, const ReplacementScheme& scheme);

}  // namespace rank1
