#include "rank1/symbolic.hpp"

#include <string>

namespace rank1 {

namespace {

struct Descent {
  std::vector<Label> labels;                          // index n < level
  std::vector<std::optional<std::size_t>> starts;     // index n <= level, 1-based in v_level
};

Descent descend(const GeneratingSequence& gen, std::size_t level, std::size_t offset) {
  Descent out;
  out.labels.resize(level);
  out.starts.resize(level + 1);
  out.starts[level] = 1;
  for (std::size_t j = level; j-- > 0;) {
    if (!out.starts[j + 1]) break;
    const std::size_t q = offset - *out.starts[j + 1] + 1;  // position inside v_{j+1}
    const Stage& st = gen.spec().stage(j);
    const std::size_t h = gen.height(j);
    std::size_t pos = 1;
    for (std::size_t i = 0; i < st.r; ++i) {
      if (q >= pos && q < pos + h) {
        const int kappa = i == 0 ? -1 : (i + 1 == st.r ? 1 : 0);
        out.labels[j] = {i + 1, kappa};
        out.starts[j] = *out.starts[j + 1] + pos - 1;
        break;
      }
      pos += h;
      if (i + 1 < st.r) {
        pos += static_cast<std::size_t>(st.s.letters()[i]);
        if (q < pos) break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::size_t> expected_positions(const GeneratingSequence& gen, std::size_t m, std::size_t n) {
  if (m > n || n > gen.depth()) throw std::invalid_argument("expected_positions needs m <= n <= depth");
  std::vector<std::size_t> positions{1};
  for (std::size_t j = m; j < n; ++j) {
    const Stage& st = gen.spec().stage(j);
    const std::size_t h = gen.height(j);
    std::vector<std::size_t> next;
    next.reserve(positions.size() * st.r);
    std::size_t shift = 0;
    for (std::size_t i = 0; i < st.r; ++i) {
      for (std::size_t p : positions) next.push_back(shift + p);
      shift += h;
      if (i + 1 < st.r) shift += static_cast<std::size_t>(st.s.letters()[i]);
    }
    positions = std::move(next);
  }
  return positions;
}

PointedConfig::PointedConfig(std::shared_ptr<const GeneratingSequence> gen, std::size_t level, std::size_t offset)
    : gen_(std::move(gen)), level_(level), offset_(offset) {
  if (!gen_) throw std::invalid_argument("PointedConfig needs a generating sequence");
  if (level_ > gen_->depth()) throw OutOfWindow("level " + std::to_string(level_) + " exceeds the materialized depth");
  if (offset_ < 1 || offset_ > gen_->height(level_))
    throw OutOfWindow("offset " + std::to_string(offset_) + " lies outside v_" + std::to_string(level_));
}

std::int64_t PointedConfig::first_coordinate() const noexcept { return 1 - static_cast<std::int64_t>(offset_); }

std::int64_t PointedConfig::last_coordinate() const noexcept {
  return static_cast<std::int64_t>(gen_->height(level_)) - static_cast<std::int64_t>(offset_);
}

std::uint8_t PointedConfig::at(std::int64_t coordinate) const {
  if (coordinate < first_coordinate() || coordinate > last_coordinate())
    throw OutOfWindow("coordinate " + std::to_string(coordinate) + " is outside the window");
  return gen_->top().letters()[static_cast<std::size_t>(static_cast<std::int64_t>(offset_) + coordinate - 1)];
}

Label label(const PointedConfig& config, std::size_t n) {
  if (n + 1 > config.level())
    throw OutOfWindow("λ_" + std::to_string(n) + " needs the enclosing v_" + std::to_string(n + 1) +
                      ", beyond level " + std::to_string(config.level()));
  return descend(config.gen(), config.level(), config.offset()).labels[n];
}

LabelVector labels(const PointedConfig& config) {
  return {descend(config.gen(), config.level(), config.offset()).labels};
}

std::optional<std::int64_t> expected_start(const PointedConfig& config, std::size_t n) {
  if (n > config.level())
    throw OutOfWindow("v_" + std::to_string(n) + " is beyond level " + std::to_string(config.level()));
  const auto start = descend(config.gen(), config.level(), config.offset()).starts[n];
  if (!start) return std::nullopt;
  return static_cast<std::int64_t>(*start) - static_cast<std::int64_t>(config.offset());
}

std::optional<Interval> overlap_interval(const PointedConfig& x, const PointedConfig& y, std::size_t n) {
  const auto lx = expected_start(x, n);
  const auto ly = expected_start(y, n);
  if (!lx || !ly) throw OutOfWindow("coordinate 0 is not inside an expected v_" + std::to_string(n));
  const auto hx = static_cast<std::int64_t>(x.gen().height(n));
  const auto hy = static_cast<std::int64_t>(y.gen().height(n));
  const Interval out{std::max(*lx, *ly), std::min(*lx + hx - 1, *ly + hy - 1)};
  if (out.c > out.d) return std::nullopt;
  return out;
}

void check_scheme(const ReplacementScheme& scheme) {
  if (!scheme.source || !scheme.target) throw SchemeInvalid("scheme needs both generating sequences");
  if (scheme.source_level > scheme.source->depth() || scheme.target_level > scheme.target->depth())
    throw SchemeInvalid("scheme level exceeds the materialized depth");
  if (scheme.source->height(scheme.source_level) != scheme.target->height(scheme.target_level))
    throw SchemeInvalid("the two windows have different lengths");
  const auto pv = expected_positions(*scheme.source, scheme.source_stage, scheme.source_level);
  const auto pw = expected_positions(*scheme.target, scheme.target_stage, scheme.target_level);
  if (pv != pw) throw SchemeInvalid("expected occurrences of v and w sit at different positions");
}

PointedConfig replace(const PointedConfig& config, const ReplacementScheme& scheme) {
  if (config.gen_ptr() != scheme.source || config.level() != scheme.source_level)
    throw SchemeInvalid("configuration is not a window of the scheme's source");
  check_scheme(scheme);
  return PointedConfig(scheme.target, scheme.target_level, config.offset());
}

}  // namespace rank1
