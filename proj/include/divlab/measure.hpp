// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "divlab/error.hpp"

namespace divlab {

/// Identifies one divergence measure, including its parameters.
///
/// String grammar (used by the CLI and fixture files):
///   kl | kl*<factor> | js | cond | dnew:k=<k> | dncm:k=<k> | mink:k=<k>
struct MeasureId {
  enum class Kind { KL, ScaledKL, JS, CondEntropy, Dnew, Dncm, Minkowski };

  Kind kind = Kind::KL;
  double k = 1.0;       // exponent for Dnew / Dncm / Minkowski, > 0
  double factor = 1.0;  // multiplier for ScaledKL, > 0

  static MeasureId kl() { return {Kind::KL, 1.0, 1.0}; }
  static MeasureId scaled_kl(double factor);
  static MeasureId js() { return {Kind::JS, 1.0, 1.0}; }
  static MeasureId cond_entropy() { return {Kind::CondEntropy, 1.0, 1.0}; }
  static MeasureId dnew(double k);
  static MeasureId dncm(double k);
  static MeasureId minkowski(double k);

  static MeasureId parse(std::string_view spec);
  std::string str() const;

  /// True for measures bounded by [0, 1] (JS, Dnew, Dncm); these are the ones
  /// accepted by the bounded benefit formula.
  bool unit_bounded() const {
    return kind == Kind::JS || kind == Kind::Dnew || kind == Kind::Dncm;
  }

  /// True when the measure is symmetric in its two arguments.
  bool symmetric() const {
    return kind == Kind::JS || kind == Kind::Dnew || kind == Kind::Minkowski;
  }

  bool operator==(const MeasureId& o) const {
    return kind == o.kind && k == o.k && factor == o.factor;
  }
  bool operator!=(const MeasureId& o) const { return !(*this == o); }
};

}  // namespace divlab
