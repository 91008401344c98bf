// SPDX-License-Identifier: Apache-2.0
#include "divlab/costbenefit.hpp"

namespace divlab {
namespace {

void require_reconstruction_alphabet(const Pmf& input,
                                     const Pmf& reconstruction) {
  if (input.alphabet() != reconstruction.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch,
                "reconstruction must share the input alphabet");
  }
}

}  // namespace

BenefitBreakdown benefit_kl(const Pmf& input, const Pmf& output,
                            const Pmf& reconstruction) {
  require_reconstruction_alphabet(input, reconstruction);
  BenefitBreakdown out;
  out.measure = MeasureId::kl();
  out.hmax = max_entropy(input.alphabet());
  out.alphabet_compression = shannon_entropy(input) - shannon_entropy(output);
  out.potential_distortion = kl_divergence(reconstruction, input).total;
  out.benefit = out.alphabet_compression - out.potential_distortion;
  return out;
}

BenefitBreakdown benefit_bounded(const Pmf& input, const Pmf& output,
                                 const Pmf& reconstruction,
                                 const MeasureId& measure,
                                 std::optional<double> hmax_override) {
  if (!measure.unit_bounded()) {
    throw Error(ErrorCode::UnsupportedMeasure,
                "bounded benefit requires js, dnew, or dncm; got " +
                    measure.str());
  }
  require_reconstruction_alphabet(input, reconstruction);
  BenefitBreakdown out;
  out.measure = measure;
  out.hmax = hmax_override.value_or(max_entropy(input.alphabet()));
  out.alphabet_compression = shannon_entropy(input) - shannon_entropy(output);
  out.potential_distortion =
      out.hmax * compute(measure, reconstruction, input).total;
  out.benefit = out.alphabet_compression - out.potential_distortion;
  return out;
}

BenefitBreakdown benefit_final(const Pmf& input, const Pmf& output,
                               const Pmf& reconstruction,
                               std::optional<double> hmax_override) {
  return benefit_bounded(input, output, reconstruction, MeasureId::dnew(2.0),
                         hmax_override);
}

BenefitBreakdown with_cost(BenefitBreakdown b, double cost) {
  if (!(cost > 0.0)) {
    throw Error(ErrorCode::NonPositiveCost, "cost must be positive");
  }
  b.cost = cost;
  b.ratio = b.benefit / cost;
  return b;
}

}  // namespace divlab
