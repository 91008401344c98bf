// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "divlab/divergence.hpp"
#include "divlab/pmf.hpp"

namespace divlab {

/// The information-theoretic cost-benefit decomposition of one lossy process:
///
///   alphabet_compression = H(input) - H(output)
///   potential_distortion = divergence of the reconstruction from the input
///   benefit              = alphabet_compression - potential_distortion
///   ratio                = benefit / cost (when a cost is attached)
///
/// With a unit-bounded measure the distortion is scaled by the input
/// alphabet's maximum entropy, so 0 <= potential_distortion <= hmax. With KL
/// it can be infinite, in which case benefit is -inf.
struct BenefitBreakdown {
  double alphabet_compression = 0.0;  // bits
  double potential_distortion = 0.0;  // bits; may be +inf for KL
  double benefit = 0.0;               // bits; may be -inf for KL
  double hmax = 0.0;                  // bits
  MeasureId measure;
  std::optional<double> cost;   // caller-chosen unit, e.g. seconds
  std::optional<double> ratio;  // bits per cost unit
};

/// Original formulation: distortion measured directly by KL in bits.
/// `reconstruction` must share the input's alphabet; the output may live on a
/// different (e.g. aggregated) alphabet.
BenefitBreakdown benefit_kl(const Pmf& input, const Pmf& output,
                            const Pmf& reconstruction);

/// Bounded formulation: distortion = H_max(input) * D(reconstruction||input)
/// where D is one of the unit-bounded measures (JS, Dnew, Dncm). `hmax_override`
/// substitutes a caller-pinned maximum entropy for log2(n).
BenefitBreakdown benefit_bounded(const Pmf& input, const Pmf& output,
                                 const Pmf& reconstruction,
                                 const MeasureId& measure,
                                 std::optional<double> hmax_override = {});

/// The selected production formula: benefit_bounded with Dnew at k = 2.
BenefitBreakdown benefit_final(const Pmf& input, const Pmf& output,
                               const Pmf& reconstruction,
                               std::optional<double> hmax_override = {});

/// Attaches a cost and fills ratio = benefit / cost. cost must be positive.
BenefitBreakdown with_cost(BenefitBreakdown b, double cost);

}  // namespace divlab
