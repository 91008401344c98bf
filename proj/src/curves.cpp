// SPDX-License-Identifier: Apache-2.0
#include "divlab/curves.hpp"

#include <cmath>
#include <ostream>

namespace divlab {
namespace {

void require_unit_range(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) {
    throw Error(ErrorCode::GridEmpty, std::string(what) + " grid is empty");
  }
  for (double v : grid) {
    if (!(v >= 0.0) || !(v <= 1.0)) {
      throw Error(ErrorCode::BadArgument,
                  std::string(what) + " values must lie in [0, 1]");
    }
  }
}

// Both components of Q get the mixture formula directly; deriving the second
// as 1 - q1 would cancel catastrophically when p1 is within rounding of 0.
double two_letter_value(const MeasureId& measure, double p1, double q1,
                        double q2, bool swap_arguments) {
  const Alphabet a({"z1", "z2"});
  const Pmf p(a, {p1, 1.0 - p1});
  const Pmf q(a, {q1, q2});
  const Pmf& first = swap_arguments ? q : p;
  const Pmf& second = swap_arguments ? p : q;
  return compute(measure, first, second).total;
}

}  // namespace

CurveTable sweep(const CurveSpec& spec) {
  require_unit_range(spec.alphas, "alpha");
  require_unit_range(spec.p1_grid, "p1");
  if (spec.measure.kind == MeasureId::Kind::CondEntropy) {
    throw Error(ErrorCode::MissingJoint,
                "cond has no two-letter parametric family without a joint");
  }
  CurveTable table;
  table.value_labels = {spec.measure.str()};
  table.rows.reserve(spec.alphas.size() * spec.p1_grid.size());
  for (double alpha : spec.alphas) {
    for (double p1 : spec.p1_grid) {
      const double q1 = (1.0 - alpha) * p1 + alpha * (1.0 - p1);
      const double q2 = (1.0 - alpha) * (1.0 - p1) + alpha * p1;
      CurveTable::Row row;
      row.alpha = alpha;
      row.p1 = p1;
      row.q1 = q1;
      row.values = {
          two_letter_value(spec.measure, p1, q1, q2, spec.swap_arguments)};
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

CurveTable near_zero_sweep(const std::vector<MeasureId>& measures,
                           double p1_lo, double p1_hi,
                           std::size_t points_per_decade) {
  if (measures.empty()) {
    throw Error(ErrorCode::GridEmpty, "no measures requested");
  }
  if (!(p1_lo > 0.0) || !(p1_hi < 0.5) || !(p1_lo < p1_hi)) {
    throw Error(ErrorCode::BadArgument,
                "near-zero range must satisfy 0 < lo < hi < 0.5");
  }
  if (points_per_decade == 0) {
    throw Error(ErrorCode::GridEmpty, "points_per_decade must be >= 1");
  }
  CurveTable table;
  for (const auto& m : measures) table.value_labels.push_back(m.str());

  const double lo_exp = std::log10(p1_lo);
  const double hi_exp = std::log10(p1_hi);
  const auto steps = static_cast<std::size_t>(
      std::ceil((hi_exp - lo_exp) * static_cast<double>(points_per_decade) -
                1e-12));
  for (std::size_t j = 0; j <= steps; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(steps);
    const double p1 = std::pow(10.0, lo_exp + t * (hi_exp - lo_exp));
    CurveTable::Row row;
    row.alpha = 1.0;
    row.p1 = p1;
    row.q1 = 1.0 - p1;
    row.values.reserve(measures.size());
    for (const auto& m : measures) {
      row.values.push_back(two_letter_value(m, p1, row.q1, p1, false));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<double> linear_grid(std::size_t count) {
  if (count == 0) throw Error(ErrorCode::GridEmpty, "grid count is zero");
  if (count == 1) return {0.0};
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(count - 1);
  }
  return grid;
}

void write_csv(const CurveTable& table, std::ostream& os) {
  os << "alpha,p1,q1";
  for (const auto& label : table.value_labels) os << ',' << label;
  os << '\n';
  os.precision(17);
  for (const auto& row : table.rows) {
    os << row.alpha << ',' << row.p1 << ',' << row.q1;
    for (double v : row.values) {
      if (std::isinf(v)) {
        os << (v > 0 ? ",inf" : ",-inf");
      } else {
        os << ',' << v;
      }
    }
    os << '\n';
  }
}

}  // namespace divlab
