// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divlab/error.hpp"

namespace divlab {

/// Ordered set of distinct outcome labels. Immutable after construction.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> letters);

  /// n letters named "<prefix>1" .. "<prefix>n".
  static Alphabet indexed(std::size_t n, std::string_view prefix = "z");

  std::size_t size() const noexcept { return letters_.size(); }
  const std::string& letter(std::size_t i) const { return letters_.at(i); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }
  std::optional<std::size_t> index_of(std::string_view letter) const;

  bool operator==(const Alphabet& other) const noexcept {
    return letters_ == other.letters_;
  }
  bool operator!=(const Alphabet& other) const noexcept {
    return !(*this == other);
  }

 private:
  std::vector<std::string> letters_;
};

/// Probability mass function over an Alphabet.
///
/// Construction validates: entries non-negative, length matches the alphabet,
/// and the total mass within `tolerance` of 1. Inputs are never renormalized
/// silently; callers opt in via renormalized().
class Pmf {
 public:
  static constexpr double kDefaultTolerance = 1e-9;

  Pmf(Alphabet alphabet, std::vector<double> p,
      double tolerance = kDefaultTolerance);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<double>& probs() const noexcept { return p_; }
  double operator[](std::size_t i) const { return p_.at(i); }
  std::size_t size() const noexcept { return p_.size(); }
  double tolerance() const noexcept { return tolerance_; }

  /// Explicit rescaling so the mass sums to exactly (within rounding) 1.
  Pmf renormalized() const;

 private:
  Alphabet alphabet_;
  std::vector<double> p_;
  double tolerance_;
};

/// Joint distribution r[i][j] over one alphabet observed under two conditions.
class JointPmf {
 public:
  JointPmf(Alphabet alphabet, std::vector<double> row_major,
           double tolerance = Pmf::kDefaultTolerance);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return alphabet_.size(); }
  double at(std::size_t i, std::size_t j) const;
  const std::vector<double>& values() const noexcept { return r_; }

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;

  /// Outer product of p and q (statistical independence).
  static JointPmf independent(const Pmf& p, const Pmf& q);
  /// All mass on the diagonal (perfect correlation); both marginals equal p.
  static JointPmf diagonal(const Pmf& p);

 private:
  Alphabet alphabet_;
  std::vector<double> r_;
};

/// p * log2(p) with the continuity convention 0 * log2(0) == 0.
double plog2p(double p);

/// H(P) = -sum p_i log2 p_i, in bits. Always in [0, log2 n].
double shannon_entropy(const Pmf& p);

/// log2(n): entropy of the uniform distribution on the alphabet.
double max_entropy(const Alphabet& a);

/// All mass on the letter at `index`.
Pmf one_hot(const Alphabet& a, std::size_t index);

/// Every letter at probability 1/n.
Pmf uniform(const Alphabet& a);

/// The dyadic-tail distribution on n letters that forces the deepest optimal
/// prefix code (codeword lengths 1, 2, ..., n-1, n-1):
///   q_n = epsilon                       with 0 < epsilon < 2^-(n-1)
///   q_i = (1 - epsilon) * 2^-i          for 2 <= i <= n-1
///   q_1 = (1 - epsilon) * (2^-1 + 2^-(n-1))
/// Sums to 1 by construction.
Pmf worst_case_pmf(std::size_t n, double epsilon);

/// Piecewise ground-truth model for an integer point estimate on [1, n]:
/// a flat "spot on" band of 5 letters around the reference value xi at 0.12
/// each, asymmetric "close" bands (xi-7..xi-3 and xi+3..xi+12) at 0.026 each,
/// and the remaining n-20 "wild guess" letters sharing mass 0.01. Letters are
/// named by their integer value. Requires 8 <= xi <= n-12 so that the spot and
/// close bands fit inside [1, n]; the wild bands may be empty on either side.
Pmf banded_estimate_pmf(std::size_t xi, std::size_t n = 256);

}  // namespace divlab
