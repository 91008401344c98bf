// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"

#include "divlab/costbenefit.hpp"

using namespace divlab;
using divlab::test::random_pmf;

namespace {

const Alphabet kBinary({"z1", "z2"});
const Alphabet kQuad({"A", "B", "C", "D"});
const Pmf kArteriesQ(kQuad, {0.1, 0.878, 0.002, 0.02});
const Pmf kFalseOutput(kQuad, {0.0, 0.0, 1.0, 0.0});

}  // namespace

TEST_CASE("benefit with kl distortion") {
  const Pmf input(kBinary, {0.99, 0.01});
  const Pmf output = one_hot(kBinary, 0);
  const BenefitBreakdown b =
      benefit_kl(input, output, Pmf(kBinary, {0.7, 0.3}));
  CHECK(b.potential_distortion == doctest::Approx(1.12).epsilon(1e-2));
  CHECK(b.alphabet_compression ==
        doctest::Approx(shannon_entropy(input)).epsilon(1e-12));
  CHECK(b.benefit ==
        doctest::Approx(b.alphabet_compression - b.potential_distortion));

  const BenefitBreakdown self = benefit_kl(input, output, input);
  CHECK(self.potential_distortion == 0.0);
  CHECK(self.benefit == doctest::Approx(self.alphabet_compression));

  const Pmf input2(kBinary, {0.9999, 0.0001});
  CHECK(benefit_kl(input2, output, Pmf(kBinary, {0.99, 0.01}))
            .potential_distortion == doctest::Approx(0.05).epsilon(1e-1));

  // Infinite distortion propagates to -inf benefit.
  const BenefitBreakdown inf_b =
      benefit_kl(one_hot(kBinary, 0), output, one_hot(kBinary, 1));
  CHECK(std::isinf(inf_b.potential_distortion));
  CHECK(std::isinf(inf_b.benefit));
  CHECK(inf_b.benefit < 0);
}

TEST_CASE("bounded benefit reference values") {
  const Pmf b_hot = one_hot(kQuad, 1);
  const BenefitBreakdown js_b =
      benefit_bounded(kArteriesQ, kFalseOutput, b_hot, MeasureId::js());
  CHECK(js_b.hmax == doctest::Approx(2.0));
  CHECK(js_b.benefit == doctest::Approx(0.500).epsilon(2e-3));

  CHECK(benefit_bounded(kArteriesQ, kFalseOutput, b_hot, MeasureId::dnew(2))
            .benefit == doctest::Approx(0.586).epsilon(1e-3));
  CHECK(benefit_bounded(kArteriesQ, kFalseOutput, b_hot, MeasureId::dncm(1))
            .benefit == doctest::Approx(0.296).epsilon(2e-3));
  CHECK(benefit_bounded(kArteriesQ, kFalseOutput, one_hot(kQuad, 0),
                        MeasureId::dnew(2))
            .benefit == doctest::Approx(-1.038).epsilon(1e-3));

  const BenefitBreakdown self = benefit_bounded(
      kArteriesQ, kFalseOutput, kArteriesQ, MeasureId::dnew(2));
  CHECK(self.potential_distortion == 0.0);
  CHECK(self.benefit == doctest::Approx(self.alphabet_compression));

  for (const auto& m :
       {MeasureId::kl(), MeasureId::minkowski(2), MeasureId::cond_entropy()}) {
    CHECK_THROWS_WITH_AS(
        benefit_bounded(kArteriesQ, kFalseOutput, b_hot, m),
        doctest::Contains("UnsupportedMeasure"), Error);
  }
}

TEST_CASE("final benefit formula uses dnew k=2") {
  CHECK(benefit_final(kArteriesQ, kFalseOutput, one_hot(kQuad, 1)).benefit ==
        doctest::Approx(0.586).epsilon(1e-3));

  const Pmf qprime(kQuad, {0.30, 0.57, 0.03, 0.10});
  CHECK(shannon_entropy(qprime) == doctest::Approx(1.467).epsilon(1e-3));
  CHECK(benefit_final(qprime, kFalseOutput, one_hot(kQuad, 2)).benefit ==
        doctest::Approx(0.212).epsilon(1e-2));
}

TEST_CASE("hmax override") {
  const BenefitBreakdown b = benefit_bounded(
      kArteriesQ, kFalseOutput, one_hot(kQuad, 1), MeasureId::js(), 8.0);
  CHECK(b.hmax == 8.0);
  CHECK(b.potential_distortion == doctest::Approx(8.0 * 0.0639).epsilon(1e-2));
}

TEST_CASE("cost and ratio") {
  BenefitBreakdown b;
  b.benefit = 0.105;
  const BenefitBreakdown r = with_cost(b, 9.27);
  CHECK(r.cost == doctest::Approx(9.27));
  CHECK(*r.ratio == doctest::Approx(0.0113).epsilon(1e-2));

  b.benefit = -0.005;
  CHECK(*with_cost(b, 14.65).ratio == doctest::Approx(-0.000341).epsilon(1e-3));

  b.benefit = 0.0;
  CHECK(*with_cost(b, 3.0).ratio == 0.0);

  CHECK_THROWS_WITH_AS(with_cost(b, 0.0), doctest::Contains("NonPositiveCost"),
                       Error);
  CHECK_THROWS_AS(with_cost(b, -1.0), Error);
}

TEST_CASE("arteries sign pattern: only answer B gains") {
  for (const auto& m : {MeasureId::js(), MeasureId::dnew(1), MeasureId::dnew(2),
                        MeasureId::dncm(1), MeasureId::dncm(2)}) {
    for (std::size_t i = 0; i < 4; ++i) {
      const double benefit =
          benefit_bounded(kArteriesQ, kFalseOutput, one_hot(kQuad, i), m)
              .benefit;
      if (i == 1) {
        CHECK(benefit > 0.0);
      } else {
        CHECK(benefit < 0.0);
      }
    }
  }
}

TEST_CASE("bounded benefit floor and maximizer") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick_n(2, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const Alphabet a = Alphabet::indexed(pick_n(rng));
    const Pmf input = random_pmf(a, rng);
    const Pmf output = random_pmf(a, rng);
    const double floor = shannon_entropy(input) - shannon_entropy(output) -
                         max_entropy(a);
    const double best =
        benefit_bounded(input, output, input, MeasureId::dnew(2)).benefit;
    for (int probe = 0; probe < 20; ++probe) {
      const Pmf reconstruction = random_pmf(a, rng);
      const double b =
          benefit_bounded(input, output, reconstruction, MeasureId::dnew(2))
              .benefit;
      CHECK(b >= floor - 1e-12);
      CHECK(b <= best + 1e-12);
    }
  }
}
