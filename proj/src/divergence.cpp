// SPDX-License-Identifier: Apache-2.0
#include "divlab/divergence.hpp"

#include <cmath>
#include <limits>

namespace divlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_same_alphabet(const Pmf& p, const Pmf& q) {
  if (p.alphabet() != q.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch,
                "measures require both PMFs on the same alphabet");
  }
}

void require_positive_k(double k) {
  if (!(k > 0.0)) {
    throw Error(ErrorCode::NonPositiveK, "k must be > 0");
  }
}

}  // namespace

DivergenceResult kl_divergence(const Pmf& p, const Pmf& q) {
  require_same_alphabet(p, q);
  DivergenceResult out{MeasureId::kl(), 0.0, {}, false};
  out.per_letter.resize(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    if (pi <= 0.0) continue;  // 0 * log(0/q) == 0 for any q
    if (q[i] <= 0.0) {
      out.per_letter[i] = kInf;
      out.infinite = true;
      continue;
    }
    out.per_letter[i] = pi * std::log2(pi / q[i]);
  }
  if (out.infinite) {
    out.total = kInf;
  } else {
    for (double v : out.per_letter) out.total += v;
  }
  return out;
}

DivergenceResult kl_divergence_clamped(const Pmf& p, const Pmf& q,
                                       double floor_q) {
  if (!(floor_q > 0.0)) {
    throw Error(ErrorCode::BadArgument, "floor must be positive");
  }
  std::vector<double> floored = q.probs();
  for (double& v : floored) v = std::max(v, floor_q);
  const Pmf q2 = Pmf(q.alphabet(), std::move(floored), 1.0).renormalized();
  return kl_divergence(p, q2);
}

double cross_entropy(const Pmf& p, const Pmf& q) {
  require_same_alphabet(p, q);
  double ce = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    if (pi <= 0.0) continue;
    if (q[i] <= 0.0) return kInf;
    ce -= pi * std::log2(q[i]);
  }
  return ce;
}

DivergenceResult js_divergence(const Pmf& p, const Pmf& q) {
  require_same_alphabet(p, q);
  DivergenceResult out{MeasureId::js(), 0.0, {}, false};
  out.per_letter.resize(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double pi = p[i];
    const double qi = q[i];
    const double m2 = pi + qi;  // 2 * mixture weight
    double term = 0.0;
    if (pi > 0.0) term += pi * std::log2(2.0 * pi / m2);
    if (qi > 0.0) term += qi * std::log2(2.0 * qi / m2);
    out.per_letter[i] = 0.5 * term;
    out.total += out.per_letter[i];
  }
  return out;
}

double conditional_entropy(const Pmf& p, const Pmf& q, const JointPmf& r,
                           double marginal_tolerance) {
  require_same_alphabet(p, q);
  if (p.alphabet() != r.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch,
                "joint distribution is on a different alphabet");
  }
  const auto rows = r.row_sums();
  const auto cols = r.col_sums();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(rows[i] - p[i]) > marginal_tolerance ||
        std::abs(cols[i] - q[i]) > marginal_tolerance) {
      throw Error(ErrorCode::MarginalMismatch,
                  "joint marginals do not reproduce P and Q at letter " +
                      std::to_string(i));
    }
  }
  const std::size_t n = p.size();
  double mutual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double rij = r.at(i, j);
      if (rij <= 0.0) continue;
      mutual += rij * std::log2(rij / (p[i] * q[j]));
    }
  }
  return shannon_entropy(p) - mutual;
}

DivergenceResult d_new(const Pmf& p, const Pmf& q, double k) {
  require_same_alphabet(p, q);
  require_positive_k(k);
  DivergenceResult out{MeasureId::dnew(k), 0.0, {}, false};
  out.per_letter.resize(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = std::abs(p[i] - q[i]);
    out.per_letter[i] =
        0.5 * (p[i] + q[i]) * std::log2(std::pow(diff, k) + 1.0);
    out.total += out.per_letter[i];
  }
  return out;
}

DivergenceResult d_ncm(const Pmf& p, const Pmf& q, double k) {
  require_same_alphabet(p, q);
  require_positive_k(k);
  DivergenceResult out{MeasureId::dncm(k), 0.0, {}, false};
  out.per_letter.resize(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = std::abs(p[i] - q[i]);
    out.per_letter[i] = p[i] * std::log2(std::pow(diff, k) + 1.0);
    out.total += out.per_letter[i];
  }
  return out;
}

DivergenceResult minkowski(const Pmf& p, const Pmf& q, double k) {
  require_same_alphabet(p, q);
  require_positive_k(k);
  DivergenceResult out{MeasureId::minkowski(k), 0.0, {}, false};
  out.per_letter.resize(p.size(), 0.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.per_letter[i] = std::pow(std::abs(p[i] - q[i]), k);
    sum += out.per_letter[i];
  }
  out.total = std::pow(sum, 1.0 / k);
  return out;
}

DivergenceResult compute(const MeasureId& measure, const Pmf& p, const Pmf& q,
                         const JointPmf* r) {
  switch (measure.kind) {
    case MeasureId::Kind::KL:
      return kl_divergence(p, q);
    case MeasureId::Kind::ScaledKL: {
      DivergenceResult out = kl_divergence(p, q);
      out.measure = measure;
      out.total *= measure.factor;
      for (double& v : out.per_letter) v *= measure.factor;
      return out;
    }
    case MeasureId::Kind::JS:
      return js_divergence(p, q);
    case MeasureId::Kind::CondEntropy: {
      if (r == nullptr) {
        throw Error(ErrorCode::MissingJoint,
                    "cond requires a joint distribution");
      }
      // Decomposed by output letter: the entropy term minus that letter's
      // share of the mutual information.
      DivergenceResult out{measure, 0.0, {}, false};
      out.total = conditional_entropy(p, q, *r);
      const std::size_t n = p.size();
      out.per_letter.resize(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        double m = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          const double rij = r->at(i, j);
          if (rij > 0.0) m += rij * std::log2(rij / (p[i] * q[j]));
        }
        out.per_letter[i] = -plog2p(p[i]) - m;
      }
      return out;
    }
    case MeasureId::Kind::Dnew:
      return d_new(p, q, measure.k);
    case MeasureId::Kind::Dncm:
      return d_ncm(p, q, measure.k);
    case MeasureId::Kind::Minkowski:
      return minkowski(p, q, measure.k);
  }
  throw Error(ErrorCode::BadMeasureSpec, "unknown measure kind");
}

}  // namespace divlab
