// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "divlab/pmf.hpp"

namespace divlab {

/// A binary prefix-free code: one codeword per letter of an alphabet.
struct PrefixCode {
  Alphabet alphabet;
  std::vector<std::string> codewords;

  std::vector<std::size_t> lengths() const;
  std::size_t max_length() const;
  /// sum 2^-len(c_i); <= 1 for any prefix-free code, == 1 when complete.
  double kraft_sum() const;
  bool is_prefix_free() const;
};

/// Per-letter codeword lengths without materialized codewords.
struct CodeStats {
  std::vector<std::size_t> lengths;

  std::size_t max_length() const;
  /// sum p_i * len_i: expected bits per letter when the source follows p.
  double average_length_under(const Pmf& p) const;
};

/// Optimal prefix code for Q (Huffman construction).
///
/// Deterministic tie-breaking: the pending node with the lower probability
/// merges first, ties broken by the lower minimum original letter index; '0'
/// goes to the higher-probability branch (same tie-break). Zero-probability
/// letters are legal and simply merge earliest. The maximum codeword length
/// over n letters is always <= n-1. A single-letter alphabet gets the empty
/// codeword.
PrefixCode huffman(const Pmf& q);

/// Codeword lengths taken literally from the information content:
/// len_i = ceil(log2(1 / q_i)). Requires every q_i > 0 (a zero-probability
/// letter would need an infinite codeword).
CodeStats shannon_literal_lengths(const Pmf& q);

/// Expected codeword length of `code` under the source distribution `p`,
/// in bits: sum p_i * len(c_i). With a code built from Q this realizes the
/// coding-theoretic reading of the cross entropy of P against Q, and is at
/// most n-1 for any optimal code.
double expected_code_length(const Pmf& p, const PrefixCode& code);

/// The deepest complete prefix code on n >= 2 letters: truncated unary
/// codewords 0, 10, 110, ..., 1..10 (n-2 ones), 1..1 (n-1 ones), with lengths
/// 1, 2, ..., n-1, n-1 and Kraft sum exactly 1.
PrefixCode truncated_unary_code(std::size_t n);

/// Randomized check of the code-length bounds over `trials` (P, Q) pairs on
/// an n-letter alphabet: expected_code_length(P, huffman(Q)) <= n-1 and the
/// same minus H(P) <= n-1. Trials are seeded independently from (seed, index).
struct BoundReport {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double max_expected_length = 0.0;      // max over trials
  double max_length_minus_entropy = 0.0; // max of expected length - H(P)
  std::size_t violations = 0;
  bool pass = false;
};

BoundReport bound_report(std::size_t n, std::size_t trials,
                         std::uint64_t seed);

}  // namespace divlab
