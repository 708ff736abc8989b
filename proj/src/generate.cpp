#include "rank1/generate.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rank1 {

GeneratingSequence::GeneratingSequence(ParameterSpec spec, Heights heights, BinaryWord top)
    : spec_(std::move(spec)), heights_(std::move(heights)), top_(std::move(top)) {}

std::size_t GeneratingSequence::height(std::size_t n) const { return heights_[n].convert_to<std::size_t>(); }

std::span<const std::uint8_t> GeneratingSequence::view(std::size_t n) const {
  if (n > depth()) throw DepthLimited("v_" + std::to_string(n) + " was not materialized (depth " + std::to_string(depth()) + ")");
  return top_.letters().first(height(n));
}

GeneratingSequence expand(const ParameterSpec& spec, std::size_t depth, std::size_t cap) {
  Heights h = heights(spec, depth);
  if (h[depth] > cap) {
    std::ostringstream os;
    os << "v_" << depth << " has " << h[depth] << " letters, above the cap of " << cap;
    throw CapExceeded(os.str());
  }
  std::vector<std::uint8_t> buf;
  buf.reserve(h[depth].convert_to<std::size_t>());
  buf.push_back(0);
  for (std::size_t n = 0; n < depth; ++n) {
    const Stage& st = spec.stage(n);
    const std::size_t len = buf.size();
    for (std::size_t i = 0; i + 1 < st.r; ++i) {
      buf.insert(buf.end(), static_cast<std::size_t>(st.s.letters()[i]), std::uint8_t{1});
      const std::size_t old = buf.size();
      buf.resize(old + len);
      std::copy_n(buf.data(), len, buf.data() + old);
    }
    if (BigInt(buf.size()) != h[n + 1]) throw std::logic_error("expand: word length disagrees with the height recursion");
  }
  return GeneratingSequence(spec, std::move(h), BinaryWord(std::move(buf)));
}

std::size_t affordable_depth(const ParameterSpec& spec, std::size_t depth, std::size_t cap) {
  BigInt h = 1;
  std::size_t n = 0;
  while (n < depth && spec.reaches(n)) {
    const Stage& st = spec.stage(n);
    const BigInt next = BigInt(st.r) * h + st.spacer_sum();
    if (next > cap) break;
    h = next;
    ++n;
  }
  return n;
}

Stage merge_stages(const ParameterSpec& spec, std::size_t from, std::size_t to) {
  if (from >= to) throw std::invalid_argument("merge_stages: empty stage range");
  Stage merged = spec.stage(from);
  for (std::size_t j = from + 1; j < to; ++j) {
    const Stage& outer = spec.stage(j);
    if (merged.r > std::numeric_limits<std::size_t>::max() / outer.r) throw std::overflow_error("merged cutting value overflows");
    merged.r *= outer.r;
    merged.s = compose_stage(outer.s, merged.s);
  }
  return merged;
}

namespace {

void check_pattern(const CutPattern& pattern) {
  if (pattern.points.empty() || pattern.points.front() != 0) throw std::invalid_argument("cut points must start at 0");
  for (std::size_t i = 1; i < pattern.points.size(); ++i)
    if (pattern.points[i] <= pattern.points[i - 1]) throw std::invalid_argument("cut points must be strictly increasing");
  for (std::size_t step : pattern.repeat_steps)
    if (step == 0) throw std::invalid_argument("cut steps must be positive");
}

TelescopeCertificate certify(const ParameterSpec& in, const ParameterSpec& out, std::size_t max_merge) {
  TelescopeCertificate c;
  c.input = bounds(in);
  c.output = bounds(out);
  c.max_merge = max_merge;
  c.cut_bound = boost::multiprecision::pow(BigInt(c.input.max_cut), static_cast<unsigned>(max_merge));
  return c;
}

}  // namespace

Telescoped telescope(const ParameterSpec& spec, const CutPattern& pattern) {
  check_pattern(pattern);
  std::vector<Stage> merged;
  std::vector<std::size_t> cuts{0};
  std::size_t max_merge = 1;
  auto add = [&](std::size_t from, std::size_t to) {
    merged.push_back(merge_stages(spec, from, to));
    max_merge = std::max(max_merge, to - from);
    cuts.push_back(to);
  };
  for (std::size_t i = 1; i < pattern.points.size(); ++i) add(pattern.points[i - 1], pattern.points[i]);

  if (pattern.repeat_steps.empty()) {
    ParameterSpec out = ParameterSpec::finite(std::move(merged));
    auto cert = certify(spec, out, max_merge);
    return {std::move(out), pattern, std::move(cuts), std::move(cert)};
  }
  if (!spec.has_tail()) throw DepthLimited("a repeating cut pattern needs a periodic tail");

  // Once past the preamble, (tail phase, step index) determines every later
  // merged stage, so its first repetition closes the period.
  const std::size_t preamble = spec.preamble().size();
  const std::size_t period = spec.period().size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  std::size_t pos = pattern.points.back();
  std::size_t j = 0;
  std::size_t tail_from = 0;
  while (true) {
    if (pos >= preamble) {
      const auto key = std::make_pair((pos - preamble) % period, j);
      if (auto it = seen.find(key); it != seen.end()) {
        tail_from = it->second;
        break;
      }
      seen.emplace(key, merged.size());
    }
    const std::size_t next = pos + pattern.repeat_steps[j];
    add(pos, next);
    pos = next;
    j = (j + 1) % pattern.repeat_steps.size();
  }
  std::vector<Stage> head(merged.begin(), merged.begin() + static_cast<std::ptrdiff_t>(tail_from));
  std::vector<Stage> tail(merged.begin() + static_cast<std::ptrdiff_t>(tail_from), merged.end());
  ParameterSpec out(std::move(head), std::move(tail));
  auto cert = certify(spec, out, max_merge);
  return {std::move(out), pattern, std::move(cuts), std::move(cert)};
}

ParameterSpec telescope(const ParameterSpec& spec, std::span<const std::size_t> cut_points) {
  CutPattern pattern{{cut_points.begin(), cut_points.end()}, {}};
  return telescope(spec, pattern).spec;
}

PrefixIndex::PrefixIndex(std::span<const std::uint8_t> word) : word_(word), z_(word.size()), ones_(word.size() + 1, 0) {
  const std::size_t n = word.size();
  if (n > std::numeric_limits<std::uint32_t>::max()) throw CapExceeded("prefix index supports at most 2^32-1 letters");
  if (n == 0) return;
  z_[0] = static_cast<std::uint32_t>(n);
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t z = 0;
    if (i < r) z = std::min<std::size_t>(r - i, z_[i - l]);
    while (i + z < n && word[z] == word[i + z]) ++z;
    z_[i] = static_cast<std::uint32_t>(z);
    if (i + z > r) {
      l = i;
      r = i + z;
    }
  }
  for (std::size_t i = n; i-- > 0;) ones_[i] = word[i] == 1 ? ones_[i + 1] + 1 : 0;
}

std::optional<std::vector<std::size_t>> PrefixIndex::gaps(std::size_t base_len, std::size_t host_len) const {
  if (base_len == 0 || host_len > size() || word_[base_len - 1] != 0) return std::nullopt;
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (true) {
    if (pos + base_len > host_len || z_[pos] < base_len) return std::nullopt;
    pos += base_len;
    if (pos == host_len) break;
    const std::size_t run = ones_[pos];
    pos += run;
    if (pos >= host_len) return std::nullopt;
    out.push_back(run);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

bool PrefixIndex::simply_built(std::size_t base_len, std::size_t host_len) const {
  const auto g = gaps(base_len, host_len);
  return g && is_constant<std::size_t>(*g);
}

std::vector<std::size_t> built_into_lengths(std::span<const std::uint8_t> v) {
  if (!in_f(v)) throw std::invalid_argument("built_into: word must lie in F");
  const PrefixIndex index(v);
  std::vector<std::size_t> out;
  for (std::size_t len = 1; 2 * len <= v.size(); ++len) {
    if (v[len - 1] != 0) continue;
    if (index.built(len, v.size())) out.push_back(len);
  }
  return out;
}

std::vector<BinaryWord> built_into(const BinaryWord& v) {
  std::vector<BinaryWord> out;
  for (std::size_t len : built_into_lengths(v.letters())) out.push_back(v.prefix(len));
  return out;
}

std::vector<std::size_t> CanonicalReport::canonical_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& e : built_into)
    if (e.canonical) out.push_back(e.length);
  return out;
}

CanonicalReport canonical_analysis(const ParameterSpec& spec, std::size_t depth, std::size_t cap) {
  const GeneratingSequence gen = expand(spec, depth, cap);
  const auto top = gen.top().letters();
  const PrefixIndex index(top);

  CanonicalReport report;
  report.depth = depth;
  std::vector<std::size_t> lengths = built_into_lengths(top);
  std::map<std::size_t, std::size_t> stage_of_length;
  for (std::size_t n = 0; n <= depth; ++n) stage_of_length.emplace(gen.height(n), n);

  // Candidates for w also include v_N itself.
  std::vector<std::size_t> hosts = lengths;
  hosts.push_back(top.size());
  const std::size_t count = hosts.size();
  std::vector<std::vector<char>> built(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) built[i][j] = index.built(hosts[i], hosts[j]);

  for (std::size_t iv = 0; iv < lengths.size(); ++iv) {
    CanonicalEntry entry;
    entry.length = lengths[iv];
    if (auto it = stage_of_length.find(entry.length); it != stage_of_length.end()) entry.stage = it->second;
    for (std::size_t iu = 0; iu < iv && !entry.witness; ++iu) {
      if (!built[iu][iv]) continue;
      for (std::size_t iw = iv + 1; iw < count; ++iw) {
        if (built[iv][iw] && index.simply_built(hosts[iu], hosts[iw])) {
          entry.witness = std::make_pair(hosts[iu], hosts[iw]);
          break;
        }
      }
    }
    entry.canonical = !entry.witness;
    if (!entry.canonical && entry.stage) report.removable_stages.push_back(*entry.stage);
    report.built_into.push_back(entry);
  }
  for (std::size_t len : lengths) {
    if (index.simply_built(len, top.size())) {
      report.degenerate_flag = true;
      report.degenerate_witness = len;
      break;
    }
  }
  return report;
}

std::vector<std::size_t> structurally_removable_stages(const ParameterSpec& spec) {
  const std::size_t span = spec.has_tail() ? spec.preamble().size() + spec.period().size() : spec.preamble().size();
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n + 1 < span || (spec.has_tail() && n < span); ++n) {
    if (!spec.reaches(n + 1)) break;
    if (is_constant(compose_stage(spec.stage(n + 1).s, spec.stage(n).s))) out.push_back(n + 1);
  }
  return out;
}

CanonicalPresentation canonical_presentation(const ParameterSpec& spec) {
  if (!spec.has_tail()) throw DepthLimited("canonical presentation needs a periodic tail");
  const std::size_t preamble = spec.preamble().size();
  const std::size_t period = spec.period().size();

  // Kept cut positions in [0, preamble + period); the tail ones repeat with
  // the period. A middle kept position is dropped when its neighbours are
  // related by a constant gap word.
  std::vector<std::size_t> kept(preamble + period);
  std::iota(kept.begin(), kept.end(), 0);
  CanonicalPresentation out;
  while (true) {
    const auto tail_begin = std::lower_bound(kept.begin(), kept.end(), preamble);
    std::vector<std::size_t> tail(tail_begin, kept.end());
    if (tail.empty()) throw Error("every tail stage is removable: the canonical sequence is finite (degenerate word)");
    std::vector<std::size_t> walk(kept.begin(), tail_begin);
    for (std::size_t rep = 0; rep < 3; ++rep)
      for (std::size_t p : tail) walk.push_back(p + rep * period);

    std::set<std::size_t> drop;
    for (std::size_t i = 0; i + 2 < walk.size(); ++i) {
      const Stage merged = merge_stages(spec, walk[i], walk[i + 2]);
      if (!is_constant(merged.s)) continue;
      const std::size_t middle = walk[i + 1];
      drop.insert(middle < preamble ? middle : preamble + (middle - preamble) % period);
    }
    if (drop.empty()) break;
    if (out.passes == 0) out.removed.assign(drop.begin(), drop.end());
    ++out.passes;
    std::erase_if(kept, [&](std::size_t p) { return drop.contains(p); });
  }

  const auto tail_begin = std::lower_bound(kept.begin(), kept.end(), preamble);
  CutPattern pattern;
  pattern.points.assign(kept.begin(), tail_begin);
  pattern.points.push_back(*tail_begin);
  std::vector<std::size_t> tail(tail_begin, kept.end());
  for (std::size_t i = 1; i < tail.size(); ++i) pattern.repeat_steps.push_back(tail[i] - tail[i - 1]);
  pattern.repeat_steps.push_back(tail.front() + period - tail.back());
  if (out.passes > 1) {
    out.removed.clear();
    for (std::size_t p = 0; p < preamble + period; ++p)
      if (!std::binary_search(kept.begin(), kept.end(), p)) out.removed.push_back(p);
  }
  out.telescoped = telescope(spec, pattern);
  return out;
}

IncompatibilityTelescope incompatibility_telescope(const ParameterSpec& a, const ParameterSpec& b, std::size_t depth) {
  if (commensurate(a, b, depth).answer == Answer::No)
    throw std::invalid_argument("incompatibility_telescope: parameters are not commensurate");

  IncompatibilityTelescope out;
  out.periodic = a.has_tail() && b.has_tail();
  const std::size_t joint_start = out.periodic ? std::max(a.preamble().size(), b.preamble().size()) : 0;
  const std::size_t joint_period = out.periodic ? std::lcm(a.period().size(), b.period().size()) : 0;
  std::size_t limit = depth;
  if (!a.has_tail()) limit = std::min(limit, a.preamble().size());
  if (!b.has_tail()) limit = std::min(limit, b.preamble().size());

  std::vector<std::size_t> cuts{0};
  std::map<std::size_t, std::size_t> seen;  // joint phase -> cut index
  std::size_t tail_from = 0;
  while (true) {
    const std::size_t n = cuts.back();
    if (out.periodic && n >= joint_start) {
      const std::size_t phase = (n - joint_start) % joint_period;
      if (auto it = seen.find(phase); it != seen.end()) {
        tail_from = it->second;
        break;
      }
      seen.emplace(phase, cuts.size() - 1);
    }
    if (!out.periodic && n >= limit) break;

    std::size_t step = 1;
    if (!(a.stage(n) == b.stage(n))) {
      if (!out.periodic && n + 2 > limit) break;
      if (!is_constant(a.stage(n + 1).s)) {
        step = 2;
      } else {
        if (!out.periodic && n + 3 > limit) break;
        if (is_constant(compose_stage(a.stage(n + 2).s, a.stage(n + 1).s))) {
          throw NotCanonical("v_" + std::to_string(n + 2) + " is not canonical: v_" + std::to_string(n + 1) +
                                 " is simply built into v_" + std::to_string(n + 3),
                             n + 2);
        }
        step = 3;
      }
    }
    cuts.push_back(n + step);
  }

  if (out.periodic) {
    out.pattern.points.assign(cuts.begin(), cuts.begin() + static_cast<std::ptrdiff_t>(tail_from) + 1);
    for (std::size_t k = tail_from + 1; k < cuts.size(); ++k) out.pattern.repeat_steps.push_back(cuts[k] - cuts[k - 1]);
  } else {
    out.pattern.points = cuts;
  }
  out.tail_from = tail_from;
  out.cuts = cuts;
  out.a = telescope(a, out.pattern);
  out.b = telescope(b, out.pattern);

  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const std::size_t n = cuts[k];
    if (a.stage(n) == b.stage(n)) continue;
    IncompatibilityCertificate cert;
    cert.merged_index = k;
    cert.first_stage = n;
    cert.merged_count = cuts[k + 1] - n;
    cert.s = merge_stages(a, n, cuts[k + 1]).s;
    cert.t = merge_stages(b, n, cuts[k + 1]).s;
    if (!incompatible(cert.s, cert.t)) {
      throw CertificateFailed("merged stage " + std::to_string(k) + " (stages " + std::to_string(n) + ".." +
                              std::to_string(cuts[k + 1] - 1) + ") is not incompatible: s'=" + to_string(cert.s) +
                              " t'=" + to_string(cert.t));
    }
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

Telescoped nonconstant_gap_telescope(const ParameterSpec& spec) {
  if (!spec.has_tail()) throw DepthLimited("the merging construction needs a periodic tail");
  const std::size_t preamble = spec.preamble().size();
  const std::size_t period = spec.period().size();
  std::vector<std::size_t> cuts{0};
  std::map<std::size_t, std::size_t> seen;
  std::size_t tail_from = 0;
  while (true) {
    const std::size_t n = cuts.back();
    if (n >= preamble) {
      const std::size_t phase = (n - preamble) % period;
      if (auto it = seen.find(phase); it != seen.end()) {
        tail_from = it->second;
        break;
      }
      seen.emplace(phase, cuts.size() - 1);
    }
    cuts.push_back(n + (is_constant(spec.stage(n + 1).s) ? 3 : 2));
  }
  CutPattern pattern;
  pattern.points.assign(cuts.begin(), cuts.begin() + static_cast<std::ptrdiff_t>(tail_from) + 1);
  for (std::size_t k = tail_from + 1; k < cuts.size(); ++k) pattern.repeat_steps.push_back(cuts[k] - cuts[k - 1]);
  return telescope(spec, pattern);
}

}  // namespace rank1
