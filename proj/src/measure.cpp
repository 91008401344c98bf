// SPDX-License-Identifier: Apache-2.0
#include "divlab/measure.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace divlab {
namespace {

double parse_positive(std::string_view text, std::string_view what) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !(value > 0.0) ||
      !std::isfinite(value)) {
    throw Error(ErrorCode::BadMeasureSpec,
                std::string(what) + " must be a positive number, got '" +
                    std::string(text) + "'");
  }
  return value;
}

// Shortest decimal that still distinguishes the parameter; k and factor are
// user-supplied round numbers in practice.
std::string format_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

MeasureId MeasureId::scaled_kl(double factor) {
  if (!(factor > 0.0)) {
    throw Error(ErrorCode::BadMeasureSpec, "kl factor must be positive");
  }
  return {Kind::ScaledKL, 1.0, factor};
}

MeasureId MeasureId::dnew(double k) {
  if (!(k > 0.0)) throw Error(ErrorCode::NonPositiveK, "dnew requires k > 0");
  return {Kind::Dnew, k, 1.0};
}

MeasureId MeasureId::dncm(double k) {
  if (!(k > 0.0)) throw Error(ErrorCode::NonPositiveK, "dncm requires k > 0");
  return {Kind::Dncm, k, 1.0};
}

MeasureId MeasureId::minkowski(double k) {
  if (!(k > 0.0)) throw Error(ErrorCode::NonPositiveK, "mink requires k > 0");
  return {Kind::Minkowski, k, 1.0};
}

MeasureId MeasureId::parse(std::string_view spec) {
  if (spec == "kl") return kl();
  if (spec == "js") return js();
  if (spec == "cond") return cond_entropy();
  if (spec.rfind("kl*", 0) == 0) {
    return scaled_kl(parse_positive(spec.substr(3), "kl factor"));
  }
  for (const auto& [prefix, kind] :
       {std::pair{std::string_view("dnew:k="), Kind::Dnew},
        std::pair{std::string_view("dncm:k="), Kind::Dncm},
        std::pair{std::string_view("mink:k="), Kind::Minkowski}}) {
    if (spec.rfind(prefix, 0) == 0) {
      const double k = parse_positive(spec.substr(prefix.size()), "k");
      return {kind, k, 1.0};
    }
  }
  throw Error(ErrorCode::BadMeasureSpec,
              "unrecognized measure '" + std::string(spec) +
                  "' (expected kl, kl*<f>, js, cond, dnew:k=<k>, dncm:k=<k>, "
                  "or mink:k=<k>)");
}

std::string MeasureId::str() const {
  switch (kind) {
    case Kind::KL: return "kl";
    case Kind::ScaledKL: return "kl*" + format_param(factor);
    case Kind::JS: return "js";
    case Kind::CondEntropy: return "cond";
    case Kind::Dnew: return "dnew:k=" + format_param(k);
    case Kind::Dncm: return "dncm:k=" + format_param(k);
    case Kind::Minkowski: return "mink:k=" + format_param(k);
  }
  return "kl";
}

}  // namespace divlab
