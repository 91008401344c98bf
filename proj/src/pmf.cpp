// SPDX-License-Identifier: Apache-2.0
#include "divlab/pmf.hpp"

#include <cmath>
#include <unordered_set>
#include <utility>

namespace divlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorCode::DuplicateLetter: return "DuplicateLetter";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NegativeMass: return "NegativeMass";
    case ErrorCode::MassNotUnit: return "MassNotUnit";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
    case ErrorCode::XiOutOfRange: return "XiOutOfRange";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::MarginalMismatch: return "MarginalMismatch";
    case ErrorCode::NonPositiveK: return "NonPositiveK";
    case ErrorCode::MissingJoint: return "MissingJoint";
    case ErrorCode::UnsupportedMeasure: return "UnsupportedMeasure";
    case ErrorCode::NonPositiveCost: return "NonPositiveCost";
    case ErrorCode::ZeroProbabilityLetter: return "ZeroProbabilityLetter";
    case ErrorCode::AnswerOutOfRange: return "AnswerOutOfRange";
    case ErrorCode::UnknownQuestion: return "UnknownQuestion";
    case ErrorCode::MissingScore: return "MissingScore";
    case ErrorCode::UnknownCandidate: return "UnknownCandidate";
    case ErrorCode::UnknownCriterion: return "UnknownCriterion";
    case ErrorCode::GridEmpty: return "GridEmpty";
    case ErrorCode::BadMeasureSpec: return "BadMeasureSpec";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "Error";
}

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw Error(ErrorCode::EmptyAlphabet, "alphabet must have at least one letter");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : letters_) {
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::DuplicateLetter, "duplicate letter '" + l + "'");
    }
  }
}

Alphabet Alphabet::indexed(std::size_t n, std::string_view prefix) {
  std::vector<std::string> letters;
  letters.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    letters.push_back(std::string(prefix) + std::to_string(i));
  }
  return Alphabet(std::move(letters));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view letter) const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == letter) return i;
  }
  return std::nullopt;
}

Pmf::Pmf(Alphabet alphabet, std::vector<double> p, double tolerance)
    : alphabet_(std::move(alphabet)), p_(std::move(p)), tolerance_(tolerance) {
  if (p_.size() != alphabet_.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "got " + std::to_string(p_.size()) + " probabilities for " +
                    std::to_string(alphabet_.size()) + " letters");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!(p_[i] >= 0.0)) {  // also rejects NaN
      throw Error(ErrorCode::NegativeMass,
                  "p[" + std::to_string(i) + "] = " + std::to_string(p_[i]));
    }
    sum += p_[i];
  }
  if (std::abs(sum - 1.0) > tolerance_) {
    throw Error(ErrorCode::MassNotUnit,
                "probabilities sum to " + std::to_string(sum));
  }
}

Pmf Pmf::renormalized() const {
  double sum = 0.0;
  for (double v : p_) sum += v;
  if (sum <= 0.0) {
    throw Error(ErrorCode::MassNotUnit, "cannot renormalize zero mass");
  }
  std::vector<double> q(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i) q[i] = p_[i] / sum;
  return Pmf(alphabet_, std::move(q), tolerance_);
}

JointPmf::JointPmf(Alphabet alphabet, std::vector<double> row_major,
                   double tolerance)
    : alphabet_(std::move(alphabet)), r_(std::move(row_major)) {
  const std::size_t n = alphabet_.size();
  if (r_.size() != n * n) {
    throw Error(ErrorCode::LengthMismatch,
                "joint matrix must have n*n entries");
  }
  double sum = 0.0;
  for (double v : r_) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::NegativeMass, "negative joint probability");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw Error(ErrorCode::MassNotUnit,
                "joint probabilities sum to " + std::to_string(sum));
  }
}

double JointPmf::at(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  if (i >= n || j >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "joint index out of range");
  }
  return r_[i * n + j];
}

std::vector<double> JointPmf::row_sums() const {
  const std::size_t n = size();
  std::vector<double> sums(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sums[i] += r_[i * n + j];
  }
  return sums;
}

std::vector<double> JointPmf::col_sums() const {
  const std::size_t n = size();
  std::vector<double> sums(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sums[j] += r_[i * n + j];
  }
  return sums;
}

JointPmf JointPmf::independent(const Pmf& p, const Pmf& q) {
  if (p.alphabet() != q.alphabet()) {
    throw Error(ErrorCode::AlphabetMismatch,
                "joint requires a shared alphabet");
  }
  const std::size_t n = p.size();
  std::vector<double> r(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[i * n + j] = p[i] * q[j];
  }
  return JointPmf(p.alphabet(), std::move(r));
}

JointPmf JointPmf::diagonal(const Pmf& p) {
  const std::size_t n = p.size();
  std::vector<double> r(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = p[i];
  return JointPmf(p.alphabet(), std::move(r));
}

double plog2p(double p) {
  if (p <= 0.0) return 0.0;
  return p * std::log2(p);
}

double shannon_entropy(const Pmf& p) {
  double h = 0.0;
  for (double v : p.probs()) h -= plog2p(v);
  return h;
}

double max_entropy(const Alphabet& a) {
  return std::log2(static_cast<double>(a.size()));
}

Pmf one_hot(const Alphabet& a, std::size_t index) {
  if (index >= a.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "one_hot index " + std::to_string(index) + " for " +
                    std::to_string(a.size()) + " letters");
  }
  std::vector<double> p(a.size(), 0.0);
  p[index] = 1.0;
  return Pmf(a, std::move(p));
}

Pmf uniform(const Alphabet& a) {
  std::vector<double> p(a.size(), 1.0 / static_cast<double>(a.size()));
  return Pmf(a, std::move(p));
}

Pmf worst_case_pmf(std::size_t n, double epsilon) {
  if (n < 2) {
    throw Error(ErrorCode::BadArgument, "worst_case_pmf requires n >= 2");
  }
  const double cap = std::exp2(-static_cast<double>(n - 1));
  if (!(epsilon > 0.0) || !(epsilon < cap)) {
    throw Error(ErrorCode::EpsilonOutOfRange,
                "epsilon must be in (0, 2^-(n-1)); got " +
                    std::to_string(epsilon));
  }
  std::vector<double> q(n);
  q[n - 1] = epsilon;
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    q[i - 1] = (1.0 - epsilon) * std::exp2(-static_cast<double>(i));
  }
  q[0] = (1.0 - epsilon) * (0.5 + cap);
  return Pmf(Alphabet::indexed(n), std::move(q));
}

Pmf banded_estimate_pmf(std::size_t xi, std::size_t n) {
  if (n < 21) {
    throw Error(ErrorCode::BadArgument,
                "banded_estimate_pmf requires n >= 21");
  }
  if (xi < 8 || xi + 12 > n) {
    throw Error(ErrorCode::XiOutOfRange,
                "bands around xi=" + std::to_string(xi) +
                    " do not fit inside [1, " + std::to_string(n) + "]");
  }
  const double wild = 0.01 / static_cast<double>(n - 20);
  std::vector<double> q(n, wild);
  for (std::size_t i = xi - 7; i <= xi - 3; ++i) q[i - 1] = 0.026;
  for (std::size_t i = xi + 3; i <= xi + 12; ++i) q[i - 1] = 0.026;
  for (std::size_t i = xi - 2; i <= xi + 2; ++i) q[i - 1] = 0.12;
  return Pmf(Alphabet::indexed(n, ""), std::move(q));
}

}  // namespace divlab
