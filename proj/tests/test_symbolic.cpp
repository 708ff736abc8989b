#include <gtest/gtest.h>

#include <memory>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rank1/symbolic.hpp"

namespace rank1 {
namespace {

using fixtures::chacon;
using fixtures::mirror;
using oracle::Rng;

std::shared_ptr<const GeneratingSequence> generate(const ParameterSpec& spec, std::size_t depth) {
  return std::make_shared<const GeneratingSequence>(expand(spec, depth));
}

TEST(ExpectedPositions, SpecExamples) {
  const auto gen = generate(chacon(), 3);
  EXPECT_EQ(expected_positions(*gen, 1, 2), (std::vector<std::size_t>{1, 5, 10}));
  EXPECT_EQ(expected_positions(*gen, 0, 2).size(), 9u);
  EXPECT_EQ(expected_positions(*gen, 2, 3), (std::vector<std::size_t>{1, 14, 28}));
  EXPECT_EQ(expected_positions(*gen, 2, 2), (std::vector<std::size_t>{1}));
}

TEST(ExpectedPositions, MatchRecursionOracleAndTheUniqueParse) {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const ParameterSpec spec = oracle::random_spec(rng, 4, 3);
    const std::size_t depth = affordable_depth(spec, 6, 50'000);
    const auto gen = generate(spec, depth);
    for (std::size_t m = 0; m < depth; ++m) {
      for (std::size_t n = m + 1; n <= depth; ++n) {
        const auto positions = expected_positions(*gen, m, n);
        ASSERT_EQ(positions, oracle::expected_positions(spec, m, n));
        const auto parse = decompose(gen->word(n), gen->word(m));
        ASSERT_TRUE(parse);
        ASSERT_EQ(parse->expected_positions, positions);
      }
    }
  }
}

TEST(Labels, SpecExamples) {
  const auto gen = generate(chacon(), 2);
  const Label first = label(PointedConfig(gen, 2, 1), 1);
  EXPECT_EQ(first.lambda, 1u);
  EXPECT_EQ(first.kappa, -1);
  const Label second = label(PointedConfig(gen, 2, 6), 1);
  EXPECT_EQ(second.lambda, 2u);
  EXPECT_EQ(second.kappa, 0);
  const Label spacer = label(PointedConfig(gen, 2, 9), 1);
  EXPECT_FALSE(spacer.lambda);
  EXPECT_FALSE(spacer.kappa);
}

TEST(Labels, WindowErrors) {
  const auto gen = generate(chacon(), 2);
  EXPECT_THROW(PointedConfig(gen, 2, 0), OutOfWindow);
  EXPECT_THROW(PointedConfig(gen, 2, 14), OutOfWindow);
  EXPECT_THROW(PointedConfig(gen, 3, 1), OutOfWindow);
  const PointedConfig x(gen, 2, 1);
  EXPECT_THROW(label(x, 2), OutOfWindow);
  EXPECT_THROW(x.at(13), OutOfWindow);
  EXPECT_EQ(x.at(0), 0u);
  EXPECT_EQ(x.first_coordinate(), 0);
  EXPECT_EQ(x.last_coordinate(), 12);
}

TEST(Labels, KappaFollowsLambdaAndPositionsReassemble) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ParameterSpec spec = oracle::random_spec(rng, 4, 2);
    const std::size_t depth = affordable_depth(spec, 6, 20'000);
    if (depth == 0) continue;
    const auto gen = generate(spec, depth);
    for (std::size_t p = 1; p <= gen->height(depth); p += 1 + p / 7) {
      const PointedConfig x(gen, depth, p);
      const auto all = labels(x);
      ASSERT_EQ(all.labels.size(), depth);
      for (std::size_t n = 0; n < depth; ++n) {
        const Label& l = all.labels[n];
        const std::size_t r = spec.stage(n).r;
        if (!l.lambda) {
          EXPECT_FALSE(l.kappa);
          EXPECT_FALSE(expected_start(x, n));
          continue;
        }
        ASSERT_GE(*l.lambda, 1u);
        ASSERT_LE(*l.lambda, r);
        const int want = *l.lambda == 1 ? -1 : (*l.lambda == r ? 1 : 0);
        EXPECT_EQ(l.kappa, want);
        // The λ-th copy of v_n inside the expected v_{n+1} holds coordinate 0.
        const auto outer = expected_start(x, n + 1), inner = expected_start(x, n);
        ASSERT_TRUE(outer && inner);
        const auto copies = expected_positions(*gen, n, n + 1);
        EXPECT_EQ(*inner - *outer + 1, static_cast<std::int64_t>(copies[*l.lambda - 1]));
        EXPECT_LE(*inner, 0);
        EXPECT_GT(*inner + static_cast<std::int64_t>(gen->height(n)), 0);
      }
    }
  }
}

TEST(Overlap, FullIntervalForEqualConfigs) {
  const auto gen = generate(chacon(), 4);
  const PointedConfig x(gen, 4, 17);
  const auto i = overlap_interval(x, x, 3);
  ASSERT_TRUE(i);
  EXPECT_EQ(i->d - i->c + 1, 40);
  EXPECT_THROW(overlap_interval(PointedConfig(gen, 4, 9), x, 1), OutOfWindow);
}


TEST(Overlap, MatchingOrCentreLabelsForceLongOverlap) {
  const auto gen = generate(chacon(), 8);
  Rng rng(48);
  int hypotheses = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const PointedConfig x(gen, 8, oracle::uniform(rng, 1, gen->height(8)));
    const PointedConfig y(gen, 8, oracle::uniform(rng, 1, gen->height(8)));
    for (std::size_t n = 1; n <= 8; ++n) {
      const Label lx = label(x, n - 1), ly = label(y, n - 1);
      const bool same = lx.lambda && lx.lambda == ly.lambda;
      const bool centre = lx.kappa == 0 && ly.kappa.has_value();
      if (!same && !centre) continue;
      ++hypotheses;
      const auto i = overlap_interval(x, y, n);
      ASSERT_TRUE(i);
      ASSERT_GE(i->d - i->c, static_cast<std::int64_t>(gen->height(n - 1)));
    }
  }
  EXPECT_GT(hypotheses, 1000);
}

TEST(Overlap, EqualLabelsGiveAConstantShift) {
  const auto gen = generate(chacon(), 8);
  Rng rng(49);
  int matched = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const PointedConfig x(gen, 8, oracle::uniform(rng, 1, gen->height(8)));
    const PointedConfig y(gen, 8, oracle::uniform(rng, 1, gen->height(8)));
    const auto lx = labels(x).labels, ly = labels(y).labels;
    const std::size_t n0 = 5;
    bool agree = true;
    for (std::size_t n = n0; n < 8; ++n) agree = agree && lx[n].lambda && lx[n] == ly[n];
    if (!agree) continue;
    ++matched;
    const std::int64_t shift = *expected_start(x, n0) - *expected_start(y, n0);
    for (std::size_t n = n0; n <= 8; ++n) EXPECT_EQ(*expected_start(x, n) - *expected_start(y, n), shift);
    for (std::int64_t c = x.first_coordinate(); c <= x.last_coordinate(); ++c) {
      const std::int64_t cy = c - shift;
      if (cy >= y.first_coordinate() && cy <= y.last_coordinate()) ASSERT_EQ(x.at(c), y.at(cy));
    }
  }
  EXPECT_GT(matched, 100);
}

TEST(Overlap, CentreLabelDensity) {
  const auto gen = generate(chacon(), 10);
  Rng rng(50);
  std::size_t centre = 0, finite = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const PointedConfig x(gen, 10, oracle::uniform(rng, 1, gen->height(10)));
    for (const Label& l : labels(x).labels) {
      if (!l.kappa) continue;
      ++finite;
      if (*l.kappa == 0) ++centre;
    }
  }
  EXPECT_GE(static_cast<double>(centre) / static_cast<double>(finite), 1.0 / 3.0 - 0.05);
}

TEST(Replacement, IdentitySchemeIsIdentity) {
  const auto gen = generate(chacon(), 4);
  const ReplacementScheme scheme{gen, 2, 4, gen, 2, 4};
  EXPECT_NO_THROW(check_scheme(scheme));
  const PointedConfig x(gen, 4, 23);
  EXPECT_EQ(replace(x, scheme), x);
}

TEST(Replacement, EventuallyAgreeingSpecsGiveAScheme) {
  const auto e = generate(fixtures::chacon_like({1, 1, 0, 1, 1}, 0), 8);
  const auto c = generate(chacon(), 8);
  const ReplacementScheme scheme{e, 5, 8, c, 5, 8};
  ASSERT_NO_THROW(check_scheme(scheme));
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PointedConfig x(e, 8, oracle::uniform(rng, 1, e->height(8)));
    const PointedConfig image = replace(x, scheme);
    EXPECT_EQ(image.offset(), x.offset());
    EXPECT_EQ(&image.gen(), c.get());
    EXPECT_EQ(replace(image, scheme.inverse()), x);
    // Labels above the agreement stage are untouched.
    const auto lx = labels(x).labels, li = labels(image).labels;
    for (std::size_t n = 5; n < 8; ++n) EXPECT_EQ(lx[n], li[n]);
  }
}

TEST(Replacement, MismatchedPositionsAreInvalid) {
  const auto a = generate(chacon(), 2);
  const auto b = generate(mirror(), 2);
  const ReplacementScheme scheme{a, 1, 2, b, 1, 2};
  EXPECT_THROW(check_scheme(scheme), SchemeInvalid);
  EXPECT_THROW(replace(PointedConfig(a, 2, 1), scheme), SchemeInvalid);
  const ReplacementScheme lengths{a, 1, 2, a, 0, 2};
  EXPECT_THROW(check_scheme(lengths), SchemeInvalid);
}

}  // namespace
}  // namespace rank1
