#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rank1/params.hpp"

namespace rank1 {
namespace {

using fixtures::chacon;
using fixtures::mirror;
using fixtures::stage;
using fixtures::tail;

TEST(Validate, ChaconIsValid) { EXPECT_TRUE(validate(chacon()).empty()); }

TEST(Validate, RejectsBadStages) {
  EXPECT_FALSE(validate(tail(2, {0, 1})).empty());
  EXPECT_FALSE(validate(tail(1, {})).empty());
  EXPECT_THROW(require_valid(ParameterSpec{}), SpecError);
}

TEST(Stage, IndexingThroughPreambleAndTail) {
  const ParameterSpec spec({stage(2, {5})}, {stage(3, {0, 1}), stage(2, {4})});
  EXPECT_EQ(spec.stage(0).s, (Word{5}));
  EXPECT_EQ(spec.stage(1).s, (Word{0, 1}));
  EXPECT_EQ(spec.stage(2).s, (Word{4}));
  EXPECT_EQ(spec.stage(5).s, (Word{0, 1}));
  EXPECT_EQ(spec.tail_phase(4), 1u);
  EXPECT_EQ(spec.drop(2).stage(0).s, (Word{4}));
  EXPECT_THROW(ParameterSpec::finite({stage(2, {0})}).stage(1), DepthLimited);
}

TEST(Heights, SpecExamples) {
  const Heights h = heights(chacon(), 3);
  EXPECT_EQ(h.values, (std::vector<BigInt>{1, 4, 13, 40}));
  EXPECT_EQ(heights(mirror(), 0).values, (std::vector<BigInt>{1}));
  EXPECT_EQ(heights(tail(2, {0}), 2).values, (std::vector<BigInt>{1, 2, 4}));
}

TEST(Heights, ExactBeyondMachineWords) {
  const Heights h = heights(chacon(), 60);
  BigInt expected = 1;
  for (int n = 0; n < 60; ++n) expected = 3 * expected + 1;
  EXPECT_EQ(h[60], expected);
  EXPECT_GT(h[60], BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(FiniteMeasure, ChaconTerms) {
  const auto report = finite_measure_check(chacon(), 3);
  EXPECT_TRUE(report.finite);
  EXPECT_EQ(report.terms, (std::vector<BigRational>{BigRational(1, 4), BigRational(1, 13), BigRational(1, 40)}));
  EXPECT_EQ(report.partial_sums.back(), BigRational(1, 4) + BigRational(1, 13) + BigRational(1, 40));
}

TEST(FiniteMeasure, ZeroSpacersGiveZeroTerms) {
  const auto report = finite_measure_check(tail(3, {0, 0}), 5);
  EXPECT_TRUE(report.finite);
  for (const auto& t : report.terms) EXPECT_EQ(t, 0);
  EXPECT_THROW(finite_measure_check(ParameterSpec::finite({stage(2, {0})}), 1), DepthLimited);
}

TEST(Bounds, SpecExamples) {
  const Bounds c = bounds(chacon());
  EXPECT_EQ(c.max_cut, 3u);
  EXPECT_EQ(c.max_spacer, 1u);
  EXPECT_TRUE(c.certified);
  const Bounds b = bounds(ParameterSpec::periodic({stage(2, {5}), stage(4, {0, 0, 2})}));
  EXPECT_EQ(b.max_cut, 4u);
  EXPECT_EQ(b.max_spacer, 5u);
  EXPECT_FALSE(bounds(ParameterSpec::finite({stage(2, {7})})).certified);
}

TEST(Commensurate, SpecExamples) {
  EXPECT_EQ(commensurate(chacon(), mirror(), 12).answer, Answer::Yes);
  const auto mismatch = commensurate(chacon(), tail(3, {1, 1}), 12);
  EXPECT_EQ(mismatch.answer, Answer::No);
  EXPECT_EQ(mismatch.first_mismatch, 0u);
  EXPECT_EQ(commensurate(chacon(), chacon(), 12).answer, Answer::Yes);
  EXPECT_EQ(commensurate(ParameterSpec::finite({stage(3, {0, 1})}), chacon(), 12).answer, Answer::DepthLimited);
}

TEST(Commensurate, JointHorizonCoversEveryStagePair) {
  oracle::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const ParameterSpec a = oracle::random_spec(rng, 3, 2);
    const ParameterSpec b = oracle::random_spec(rng, 3, 2);
    bool agree = true;
    for (std::size_t n = 0; n < 60; ++n)
      agree = agree && a.stage(n).r == b.stage(n).r && a.stage(n).spacer_sum() == b.stage(n).spacer_sum();
    EXPECT_EQ(commensurate(a, b, 0).answer == Answer::Yes, agree);
  }
}

TEST(EventuallyCommensurate, SpecExamples) {
  EXPECT_EQ(eventually_commensurate(chacon(), chacon(), 20), (Alignment{0, 0, true}));
  const ParameterSpec shifted({stage(2, {0}), stage(2, {0})}, {stage(3, {0, 1})});
  const auto found = eventually_commensurate(chacon(), shifted, 20);
  ASSERT_TRUE(found);
  const Heights ha = heights(chacon(), found->n), hb = heights(shifted, found->m);
  EXPECT_EQ(ha[found->n], hb[found->m]);
  EXPECT_EQ(commensurate(chacon().drop(found->n), shifted.drop(found->m), 0).answer, Answer::Yes);
  EXPECT_FALSE(eventually_commensurate(chacon(), tail(2, {0}), 20));
}

TEST(Degeneracy, ConstantTailIsDegenerate) {
  const auto d = degeneracy(ParameterSpec({stage(2, {3}), stage(2, {1})}, {stage(2, {1})}));
  EXPECT_TRUE(d.degenerate);
  EXPECT_EQ(d.constant_value, 1u);
  EXPECT_EQ(d.from_stage, 1u);
  EXPECT_FALSE(degeneracy(chacon()).degenerate);
  EXPECT_FALSE(degeneracy(ParameterSpec::periodic({stage(2, {1}), stage(2, {0})})).degenerate);
}

TEST(SpacerValues, UnionOfLaterPreambleAndTail) {
  const ParameterSpec spec({stage(2, {7}), stage(2, {4})}, {stage(3, {0, 1})});
  EXPECT_EQ(spacer_values_from(spec, 0), (std::vector<Letter>{0, 1, 4, 7}));
  EXPECT_EQ(spacer_values_from(spec, 1), (std::vector<Letter>{0, 1, 4}));
  EXPECT_EQ(spacer_values_from(spec, 9), (std::vector<Letter>{0, 1}));
}

}  // namespace
}  // namespace rank1
