// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <random>
#include <vector>

#include "divlab/pmf.hpp"

namespace divlab::test {

inline std::filesystem::path fixtures_dir() {
#ifdef DIVLAB_FIXTURES_DIR
  return DIVLAB_FIXTURES_DIR;
#else
  return "fixtures";
#endif
}

// Uniformly random point on the simplex-ish: iid uniforms, normalized.
// min_mass > 0 keeps every letter strictly positive.
inline Pmf random_pmf(const Alphabet& a, std::mt19937_64& rng,
                      double min_mass = 0.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> p(a.size());
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& v : p) {
      v = min_mass + unit(rng);
      sum += v;
    }
  } while (sum <= 0.0);
  for (double& v : p) v /= sum;
  return Pmf(a, std::move(p), 1e-6).renormalized();
}

// Random PMF where some letters may be exactly zero.
inline Pmf random_pmf_with_zeros(const Alphabet& a, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution zero(0.3);
  std::vector<double> p(a.size());
  double sum = 0.0;
  while (sum <= 0.0) {
    sum = 0.0;
    for (double& v : p) {
      v = zero(rng) ? 0.0 : unit(rng);
      sum += v;
    }
  }
  for (double& v : p) v /= sum;
  return Pmf(a, std::move(p), 1e-6).renormalized();
}

}  // namespace divlab::test
