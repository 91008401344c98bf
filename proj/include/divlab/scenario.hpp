// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "divlab/costbenefit.hpp"
#include "divlab/divergence.hpp"
#include "divlab/pmf.hpp"

namespace divlab {

struct ScenarioUser {
  std::string label;
  Pmf reconstruction;  // shares the ground-truth alphabet
};

/// One named reproduction unit: a ground-truth PMF, the PMF depicted by the
/// process under study, the users' reconstruction PMFs, and the measures to
/// evaluate them with.
struct ScenarioBundle {
  std::string name;
  Pmf ground_truth;
  Pmf process_output;  // may live on a different (aggregated) alphabet
  std::optional<double> hmax_override;
  std::vector<ScenarioUser> users;
  std::vector<MeasureId> measures;
};

/// One user evaluated with one measure: the divergence of the reconstruction
/// from the ground truth, plus the benefit breakdown where the measure
/// supports it (KL and the unit-bounded measures).
struct ScenarioCell {
  std::string user;
  MeasureId measure;
  DivergenceResult divergence;
  std::optional<BenefitBreakdown> benefit;
};

std::vector<ScenarioCell> run_scenario(const ScenarioBundle& bundle);

/// Answer categories for integer point estimates against a banded
/// ground-truth model (see banded_estimate_pmf).
enum class Category { SpotOn, Close, WildGuess };

const char* to_string(Category category);
Category category_from_string(std::string_view s);

/// Band layout around the reference value xi on the alphabet [1, n].
struct CategoryBands {
  std::size_t xi = 0;
  std::size_t n = 256;
};

/// Which band an answer in [1, n] falls into. Total on [1, n]: every answer
/// lands in exactly one category.
Category categorize_answer(std::size_t answer, const CategoryBands& bands);

/// Benefit of producing an answer in the given category, with the banded
/// model as ground truth, a deterministic depiction as output (entropy 0),
/// and a one-hot reconstruction at the band's representative letter:
/// xi for spot-on, xi + 3 for close, and the letter farthest from xi for a
/// wild guess. Within a band the model is flat, so any in-band letter gives
/// the same value.
BenefitBreakdown category_benefit(const CategoryBands& bands,
                                  Category category,
                                  const MeasureId& measure);

struct SurveyRecord {
  std::string surveyee;
  std::string question;
  int answer_minutes = 0;
  double response_time_seconds = 0.0;
};

struct SurveyQuestion {
  std::string id;
  CategoryBands bands;
};

/// Manual category assignment for one record, taking precedence over the
/// band rule. Used for answers sitting on band boundaries whose source
/// categorization differs from the coarse bands.
struct CategoryOverride {
  std::string surveyee;
  std::string question;
  Category category = Category::Close;
};

struct QuestionReport {
  std::string question;
  std::size_t count_spot_on = 0;
  std::size_t count_close = 0;
  std::size_t count_wild_guess = 0;
  double mean_benefit = 0.0;        // bits
  double mean_response_time = 0.0;  // seconds
  double cost_benefit_ratio = 0.0;  // bits per second
};

/// Per-question aggregation: category counts, count-weighted mean category
/// benefit, mean response time, and the resulting cost-benefit ratio.
/// Questions with no records are omitted. Record order does not matter.
/// Answers above the alphabet range are clamped to the top letter, with a
/// note appended to `warnings` when provided.
std::vector<QuestionReport> analyze_survey(
    const std::vector<SurveyRecord>& records,
    const std::vector<SurveyQuestion>& questions, const MeasureId& measure,
    const std::vector<CategoryOverride>& overrides = {},
    std::vector<std::string>* warnings = nullptr);

}  // namespace divlab
