// SPDX-License-Identifier: Apache-2.0
#include "divlab/mcda.hpp"

#include <algorithm>
#include <unordered_set>

namespace divlab {

Importance importance_from_string(std::string_view s) {
  if (s == "critical") return Importance::Critical;
  if (s == "important") return Importance::Important;
  if (s == "helpful") return Importance::Helpful;
  throw Error(ErrorCode::BadArgument,
              "importance must be critical|important|helpful, got '" +
                  std::string(s) + "'");
}

const char* to_string(Importance importance) {
  switch (importance) {
    case Importance::Critical: return "critical";
    case Importance::Important: return "important";
    case Importance::Helpful: return "helpful";
  }
  return "helpful";
}

void CriteriaTable::validate() const {
  if (scores.size() != criteria.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "one score row per criterion required");
  }
  std::unordered_set<std::string> names;
  for (const auto& c : criteria) {
    if (!names.insert(c.name).second) {
      throw Error(ErrorCode::BadArgument,
                  "duplicate criterion '" + c.name + "'");
    }
  }
  names.clear();
  for (const auto& c : candidates) {
    if (!names.insert(c).second) {
      throw Error(ErrorCode::BadArgument, "duplicate candidate '" + c + "'");
    }
  }
  for (const auto& row : scores) {
    if (row.size() != candidates.size()) {
      throw Error(ErrorCode::LengthMismatch,
                  "one score per candidate required in every row");
    }
    for (const auto& cell : row) {
      if (cell && (*cell < 0 || *cell > 5)) {
        throw Error(ErrorCode::BadArgument,
                    "scores must be integers in [0, 5]");
      }
    }
  }
}

std::size_t CriteriaTable::criterion_index(std::string_view name) const {
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (criteria[i].name == name) return i;
  }
  throw Error(ErrorCode::UnknownCriterion, std::string(name));
}

std::size_t CriteriaTable::candidate_index(std::string_view name) const {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i] == name) return i;
  }
  throw Error(ErrorCode::UnknownCandidate, std::string(name));
}

namespace {

std::vector<std::size_t> candidate_indices(
    const CriteriaTable& table, const std::vector<std::string>& candidates) {
  std::vector<std::size_t> out;
  if (candidates.empty()) {
    out.resize(table.candidates.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  } else {
    for (const auto& name : candidates) {
      out.push_back(table.candidate_index(name));
    }
  }
  return out;
}

int cell_or_throw(const CriteriaTable& table, std::size_t ci, std::size_t li) {
  const auto& cell = table.scores[ci][li];
  if (!cell) {
    throw Error(ErrorCode::MissingScore,
                "candidate '" + table.candidates[li] +
                    "' was not assessed on '" + table.criteria[ci].name + "'");
  }
  return *cell;
}

}  // namespace

std::vector<CandidateSum> stage_sums(
    const CriteriaTable& table, const std::vector<std::string>& criteria,
    const std::vector<std::string>& candidates) {
  std::vector<CandidateSum> out;
  for (std::size_t li : candidate_indices(table, candidates)) {
    int sum = 0;
    for (const auto& cname : criteria) {
      sum += cell_or_throw(table, table.criterion_index(cname), li);
    }
    out.push_back(CandidateSum{table.candidates[li], sum});
  }
  return out;
}

std::vector<double> weighted_stage_sums(
    const CriteriaTable& table, const std::vector<std::string>& criteria,
    const std::vector<double>& weights,
    const std::vector<std::string>& candidates) {
  if (weights.size() != criteria.size()) {
    throw Error(ErrorCode::LengthMismatch, "one weight per criterion");
  }
  std::vector<double> out;
  for (std::size_t li : candidate_indices(table, candidates)) {
    double sum = 0.0;
    for (std::size_t c = 0; c < criteria.size(); ++c) {
      sum += weights[c] *
             cell_or_throw(table, table.criterion_index(criteria[c]), li);
    }
    out.push_back(sum);
  }
  return out;
}

McdaOutcome run_plan(const CriteriaTable& table, const EliminationPlan& plan) {
  table.validate();
  McdaOutcome outcome;
  std::vector<std::string> alive = table.candidates;

  auto erase_named = [&alive](const std::vector<std::string>& names) {
    alive.erase(std::remove_if(alive.begin(), alive.end(),
                               [&names](const std::string& c) {
                                 return std::find(names.begin(), names.end(),
                                                  c) != names.end();
                               }),
                alive.end());
  };

  for (std::size_t s = 0; s < plan.stages.size(); ++s) {
    const EliminationStage& stage = plan.stages[s];
    AuditEvent event;
    event.stage = s + 1;
    switch (stage.rule) {
      case EliminationStage::Rule::EliminateIfZeroOnCritical: {
        event.rule = "eliminate-if-zero-on-critical";
        for (const auto& cname : stage.criteria) {
          const std::size_t ci = table.criterion_index(cname);
          if (table.criteria[ci].importance != Importance::Critical) continue;
          for (const auto& cand : alive) {
            if (cell_or_throw(table, ci, table.candidate_index(cand)) == 0) {
              event.eliminated.push_back(cand);
            }
          }
        }
        erase_named(event.eliminated);
        break;
      }
      case EliminationStage::Rule::KeepTopKBySum: {
        event.rule = "keep-top-k-by-sum";
        event.sums = stage_sums(table, stage.criteria, alive);
        std::vector<CandidateSum> ordered = event.sums;
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const CandidateSum& a, const CandidateSum& b) {
                           return a.sum > b.sum;
                         });
        for (std::size_t i = stage.keep_k; i < ordered.size(); ++i) {
          event.eliminated.push_back(ordered[i].candidate);
        }
        erase_named(event.eliminated);
        break;
      }
      case EliminationStage::Rule::EliminateNamed: {
        event.rule = "eliminate-named";
        if (!stage.criteria.empty()) {
          event.sums = stage_sums(table, stage.criteria, alive);
        }
        for (const auto& name : stage.names) {
          table.candidate_index(name);  // reject unknown names
          if (std::find(alive.begin(), alive.end(), name) != alive.end()) {
            event.eliminated.push_back(name);
          }
        }
        erase_named(event.eliminated);
        break;
      }
    }
    outcome.audit.push_back(std::move(event));
  }

  // Rank the survivors; an empty ranking set means "total over everything
  // the candidate was scored on".
  for (const auto& cand : alive) {
    const std::size_t li = table.candidate_index(cand);
    RankedCandidate rc;
    rc.candidate = cand;
    int overall = 0;
    for (std::size_t ci = 0; ci < table.criteria.size(); ++ci) {
      if (table.scores[ci][li]) overall += *table.scores[ci][li];
    }
    rc.overall_sum = overall;
    if (plan.ranking_criteria.empty()) {
      rc.ranking_sum = overall;
    } else {
      int sum = 0;
      for (const auto& cname : plan.ranking_criteria) {
        sum += cell_or_throw(table, table.criterion_index(cname), li);
      }
      rc.ranking_sum = sum;
    }
    outcome.survivors.push_back(std::move(rc));
  }
  std::stable_sort(outcome.survivors.begin(), outcome.survivors.end(),
                   [](const RankedCandidate& a, const RankedCandidate& b) {
                     return a.ranking_sum > b.ranking_sum;
                   });
  if (!outcome.survivors.empty()) {
    const int top = outcome.survivors.front().ranking_sum;
    for (const auto& rc : outcome.survivors) {
      if (rc.ranking_sum == top) outcome.winners.push_back(rc.candidate);
    }
  }
  return outcome;
}

}  // namespace divlab
