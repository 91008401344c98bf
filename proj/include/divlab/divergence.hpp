// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "divlab/measure.hpp"
#include "divlab/pmf.hpp"

namespace divlab {

/// Total divergence plus its per-letter decomposition.
///
/// For the entropic measures (KL, scaled KL, JS, Dnew, Dncm, conditional
/// entropy) the per-letter contributions sum to the total. For Minkowski the
/// per-letter entries are the pre-root terms |p_i - q_i|^k, so they sum to
/// total^k; the k-th root is not separable per letter.
///
/// KL and its derivatives can be genuinely infinite (some p_i > 0 where
/// q_i = 0). That is reported as a value, not an exception: `infinite` is set
/// and `total` is +inf.
struct DivergenceResult {
  MeasureId measure;
  double total = 0.0;
  std::vector<double> per_letter;
  bool infinite = false;
};

/// D_KL(P||Q) = sum p_i log2(p_i / q_i), in bits. Non-negative, asymmetric,
/// unbounded; infinite when supp(P) is not contained in supp(Q).
DivergenceResult kl_divergence(const Pmf& p, const Pmf& q);

/// KL with Q floored at `floor_q` and renormalized first. Experimentation
/// aid only; none of the reference values use it.
DivergenceResult kl_divergence_clamped(const Pmf& p, const Pmf& q,
                                       double floor_q);

/// CE(P, Q) = -sum p_i log2 q_i = H(P) + D_KL(P||Q). +inf when KL is.
double cross_entropy(const Pmf& p, const Pmf& q);

/// Jensen-Shannon divergence with base-2 logs: symmetric, bounded by [0, 1].
DivergenceResult js_divergence(const Pmf& p, const Pmf& q);

/// H(P|Q) = H(P) - I(P;Q) under the supplied joint distribution. Bounded by
/// [0, H(P)]; equals H(P) under independence.
double conditional_entropy(const Pmf& p, const Pmf& q, const JointPmf& r,
                           double marginal_tolerance = 1e-6);

/// D_new(P||Q) = 1/2 sum (p_i + q_i) log2(|p_i - q_i|^k + 1), k > 0.
/// Symmetric, bounded by [0, 1].
DivergenceResult d_new(const Pmf& p, const Pmf& q, double k);

/// D_ncm(P||Q) = sum p_i log2(|p_i - q_i|^k + 1), k > 0.
/// Bounded by [0, 1]; not symmetric in general.
DivergenceResult d_ncm(const Pmf& p, const Pmf& q, double k);

/// Minkowski distance (sum |p_i - q_i|^k)^(1/k), k > 0. Bounded by 2^(1/k).
DivergenceResult minkowski(const Pmf& p, const Pmf& q, double k);

/// Uniform dispatch over MeasureId. CondEntropy requires `r`; every other
/// measure ignores it. ScaledKL multiplies total and per-letter terms by its
/// factor.
DivergenceResult compute(const MeasureId& measure, const Pmf& p, const Pmf& q,
                         const JointPmf* r = nullptr);

}  // namespace divlab
