// SPDX-License-Identifier: Apache-2.0
#include "divlab/coding.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

namespace divlab {

std::vector<std::size_t> PrefixCode::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(codewords.size());
  for (const auto& c : codewords) out.push_back(c.size());
  return out;
}

std::size_t PrefixCode::max_length() const {
  std::size_t m = 0;
  for (const auto& c : codewords) m = std::max(m, c.size());
  return m;
}

double PrefixCode::kraft_sum() const {
  double sum = 0.0;
  for (const auto& c : codewords) {
    sum += std::exp2(-static_cast<double>(c.size()));
  }
  return sum;
}

bool PrefixCode::is_prefix_free() const {
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = 0; j < codewords.size(); ++j) {
      if (i == j) continue;
      const auto& a = codewords[i];
      const auto& b = codewords[j];
      if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0) return false;
    }
  }
  return true;
}

std::size_t CodeStats::max_length() const {
  std::size_t m = 0;
  for (std::size_t l : lengths) m = std::max(m, l);
  return m;
}

double CodeStats::average_length_under(const Pmf& p) const {
  if (lengths.size() != p.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "code has a different number of letters than the PMF");
  }
  double avg = 0.0;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    avg += p[i] * static_cast<double>(lengths[i]);
  }
  return avg;
}

namespace {

struct HuffNode {
  double prob;
  std::size_t min_index;  // lowest original letter index in the subtree
  int left = -1;          // node ids; -1 for leaves
  int right = -1;
};

struct HeapEntry {
  double prob;
  std::size_t min_index;
  int id;
};

struct HeapCompare {
  // std::priority_queue is a max-heap; invert to pop the smallest
  // (probability, min_index) first.
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.prob != b.prob) return a.prob > b.prob;
    return a.min_index > b.min_index;
  }
};

// Iterative tree walk: the worst-case tree is a depth n-1 chain.
void assign_codewords(const std::vector<HuffNode>& nodes, int root,
                      std::vector<std::string>& out) {
  std::vector<std::pair<int, std::string>> stack{{root, ""}};
  while (!stack.empty()) {
    auto [id, prefix] = std::move(stack.back());
    stack.pop_back();
    const HuffNode& node = nodes[static_cast<std::size_t>(id)];
    if (node.left < 0) {
      out[node.min_index] = std::move(prefix);
      continue;
    }
    const HuffNode& l = nodes[static_cast<std::size_t>(node.left)];
    const HuffNode& r = nodes[static_cast<std::size_t>(node.right)];
    // '0' goes to the higher-probability branch, ties to the lower index.
    int zero = node.left, one = node.right;
    if (r.prob > l.prob || (r.prob == l.prob && r.min_index < l.min_index)) {
      std::swap(zero, one);
    }
    stack.emplace_back(one, prefix + '1');
    stack.emplace_back(zero, prefix + '0');
  }
}

}  // namespace

PrefixCode huffman(const Pmf& q) {
  const std::size_t n = q.size();
  std::vector<std::string> codewords(n);
  if (n == 1) {
    return PrefixCode{q.alphabet(), std::move(codewords)};
  }

  std::vector<HuffNode> nodes;
  nodes.reserve(2 * n - 1);
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapCompare> heap;
  for (std::size_t i = 0; i < n; ++i) {
    nodes.push_back(HuffNode{q[i], i});
    heap.push(HeapEntry{q[i], i, static_cast<int>(i)});
  }
  while (heap.size() > 1) {
    const HeapEntry a = heap.top();
    heap.pop();
    const HeapEntry b = heap.top();
    heap.pop();
    HuffNode parent{a.prob + b.prob, std::min(a.min_index, b.min_index),
                    a.id, b.id};
    nodes.push_back(parent);
    heap.push(HeapEntry{parent.prob, parent.min_index,
                        static_cast<int>(nodes.size() - 1)});
  }

  assign_codewords(nodes, heap.top().id, codewords);
  return PrefixCode{q.alphabet(), std::move(codewords)};
}

CodeStats shannon_literal_lengths(const Pmf& q) {
  CodeStats stats;
  stats.lengths.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double qi = q[i];
    if (!(qi > 0.0)) {
      throw Error(ErrorCode::ZeroProbabilityLetter,
                  "letter " + std::to_string(i) + " has zero probability");
    }
    // Smallest integer l with 2^-l <= q_i, robust against log2 rounding at
    // exact powers of two.
    auto l = static_cast<long>(std::ceil(std::log2(1.0 / qi)));
    l = std::max(l, 0L);
    while (l > 0 && std::exp2(-static_cast<double>(l - 1)) <= qi) --l;
    while (std::exp2(-static_cast<double>(l)) > qi) ++l;
    stats.lengths.push_back(static_cast<std::size_t>(l));
  }
  return stats;
}

double expected_code_length(const Pmf& p, const PrefixCode& code) {
  if (p.alphabet() != code.alphabet) {
    throw Error(ErrorCode::AlphabetMismatch,
                "code was built for a different alphabet");
  }
  double avg = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    avg += p[i] * static_cast<double>(code.codewords[i].size());
  }
  return avg;
}

PrefixCode truncated_unary_code(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::BadArgument,
                "truncated unary code requires n >= 2");
  }
  std::vector<std::string> codewords(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    codewords[i] = std::string(i, '1') + '0';
  }
  codewords[n - 1] = std::string(n - 1, '1');
  return PrefixCode{Alphabet::indexed(n), std::move(codewords)};
}

namespace {

Pmf random_pmf(const Alphabet& a, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> p(a.size());
  double sum = 0.0;
  do {
    sum = 0.0;
    for (double& v : p) {
      v = unit(rng);
      sum += v;
    }
  } while (sum <= 0.0);
  for (double& v : p) v /= sum;
  return Pmf(a, std::move(p), 1e-6).renormalized();
}

}  // namespace

BoundReport bound_report(std::size_t n, std::size_t trials,
                         std::uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorCode::BadArgument, "bound_report requires n >= 2");
  }
  if (trials < 1) {
    throw Error(ErrorCode::BadArgument, "bound_report requires trials >= 1");
  }
  BoundReport report;
  report.n = n;
  report.trials = trials;
  report.seed = seed;
  const Alphabet a = Alphabet::indexed(n);
  const double bound = static_cast<double>(n - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    // Independent deterministic stream per trial.
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (t + 1));
    const Pmf p = random_pmf(a, rng);
    const Pmf q = random_pmf(a, rng);
    const PrefixCode code = huffman(q);
    const double len = expected_code_length(p, code);
    const double gap = len - shannon_entropy(p);
    report.max_expected_length = std::max(report.max_expected_length, len);
    report.max_length_minus_entropy =
        std::max(report.max_length_minus_entropy, gap);
    if (len > bound || gap > bound) ++report.violations;
  }
  report.pass = report.violations == 0;
  return report;
}

}  // namespace divlab
