// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "divlab/divergence.hpp"

namespace divlab {

/// Parametric sweep over the two-letter family P = {p1, 1-p1},
/// Q = {q1, 1-q1} with q1 = (1-alpha)*p1 + alpha*(1-p1). At alpha = 0 the
/// PMFs coincide; at alpha = 1 they are mirrored.
struct CurveSpec {
  MeasureId measure;
  std::vector<double> alphas;   // each in [0, 1]
  std::vector<double> p1_grid;  // strictly increasing, within [0, 1]
  bool swap_arguments = false;  // evaluate D(Q||P) instead of D(P||Q)
};

/// Rows of (alpha, p1, q1) with one value column per measure. Values may be
/// +inf (KL family at degenerate endpoints); CSV serialization writes the
/// literal `inf`.
struct CurveTable {
  struct Row {
    double alpha = 0.0;
    double p1 = 0.0;
    double q1 = 0.0;
    std::vector<double> values;
  };

  std::vector<std::string> value_labels;
  std::vector<Row> rows;  // sorted by alpha, then p1
};

/// Evaluate one measure over the full (alpha, p1) grid.
CurveTable sweep(const CurveSpec& spec);

/// Log-scale comparison near p1 = 0 with alpha fixed at 1 (q1 = 1 - p1):
/// one value column per requested measure, p1 sampled at `points_per_decade`
/// per decade across [p1_lo, p1_hi]. The range must lie inside (0, 0.5).
CurveTable near_zero_sweep(const std::vector<MeasureId>& measures,
                           double p1_lo = 1e-10, double p1_hi = 0.1,
                           std::size_t points_per_decade = 20);

/// count evenly spaced points covering [0, 1] inclusive.
std::vector<double> linear_grid(std::size_t count);

/// Writes `alpha,p1,q1,<label>[,...]` rows; infinities as `inf`.
void write_csv(const CurveTable& table, std::ostream& os);

}  // namespace divlab
