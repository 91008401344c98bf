// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divlab/error.hpp"

namespace divlab {

enum class Importance { Critical, Important, Helpful };

Importance importance_from_string(std::string_view s);
const char* to_string(Importance importance);

struct Criterion {
  std::string name;
  Importance importance = Importance::Helpful;
};

/// Ordinal scoring of candidates against criteria. Scores are integers in
/// [0, 5]; a missing optional marks a cell that was never assessed.
///
/// The importance labels are metadata: aggregation is the plain unweighted
/// sum of scores. An optional caller-supplied weighting is available as an
/// explicit extension (weighted_stage_sums).
struct CriteriaTable {
  std::vector<Criterion> criteria;
  std::vector<std::string> candidates;
  // scores[criterion][candidate]
  std::vector<std::vector<std::optional<int>>> scores;

  void validate() const;
  std::size_t criterion_index(std::string_view name) const;
  std::size_t candidate_index(std::string_view name) const;
};

struct CandidateSum {
  std::string candidate;
  int sum = 0;
};

/// Plain integer sums over the named criteria for the given candidates
/// (defaults to every candidate). Throws MissingScore when a requested cell
/// was never assessed.
std::vector<CandidateSum> stage_sums(
    const CriteriaTable& table, const std::vector<std::string>& criteria,
    const std::vector<std::string>& candidates = {});

/// Sum of score * weight with one weight per named criterion.
std::vector<double> weighted_stage_sums(
    const CriteriaTable& table, const std::vector<std::string>& criteria,
    const std::vector<double>& weights,
    const std::vector<std::string>& candidates = {});

struct EliminationStage {
  enum class Rule { EliminateIfZeroOnCritical, KeepTopKBySum, EliminateNamed };

  Rule rule = Rule::EliminateNamed;
  std::vector<std::string> criteria;  // criteria the stage looks at
  std::size_t keep_k = 0;             // KeepTopKBySum
  std::vector<std::string> names;     // EliminateNamed
};

/// Ordered elimination stages plus the criteria used to rank the survivors.
/// An empty ranking set ranks by the total over all scored criteria.
struct EliminationPlan {
  std::vector<EliminationStage> stages;
  std::vector<std::string> ranking_criteria;
};

struct AuditEvent {
  std::size_t stage = 0;
  std::string rule;
  std::vector<CandidateSum> sums;      // sums examined by the stage, if any
  std::vector<std::string> eliminated;
};

struct RankedCandidate {
  std::string candidate;
  int ranking_sum = 0;  // over the plan's ranking criteria
  int overall_sum = 0;  // over every criterion the candidate was scored on
};

struct McdaOutcome {
  std::vector<RankedCandidate> survivors;  // descending ranking_sum
  std::vector<std::string> winners;        // all candidates tied at the top
  std::vector<AuditEvent> audit;
};

/// Applies the stages in order and ranks the survivors. Deterministic: ties
/// keep the table's candidate order and are reported as joint winners.
McdaOutcome run_plan(const CriteriaTable& table, const EliminationPlan& plan);

}  // namespace divlab
