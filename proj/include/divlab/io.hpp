// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "divlab/mcda.hpp"
#include "divlab/pmf.hpp"
#include "divlab/scenario.hpp"

namespace divlab {

/// PMF files: JSON {"letters": ["A","B"], "p": [0.8, 0.2]} or CSV with a
/// required `letter,probability` header. The loader picks the format from the
/// file extension (.json / .csv).
Pmf load_pmf(const std::filesystem::path& path);
Pmf read_pmf_json(std::istream& in, const std::string& origin = "<stream>");
Pmf read_pmf_csv(std::istream& in, const std::string& origin = "<stream>");
void write_pmf_json(const Pmf& pmf, std::ostream& out);

/// Scenario bundle files mirror the ScenarioBundle fields; user entries give
/// a label and a probability vector on the ground-truth alphabet.
ScenarioBundle load_scenario_bundle(const std::filesystem::path& path);

CriteriaTable load_criteria_table(const std::filesystem::path& path);
EliminationPlan load_elimination_plan(const std::filesystem::path& path);

/// Survey records: CSV with required header
/// `surveyee,question,answer_minutes,response_time_seconds`.
std::vector<SurveyRecord> load_survey_records(
    const std::filesystem::path& path);
std::vector<SurveyRecord> read_survey_records_csv(
    std::istream& in, const std::string& origin = "<stream>");

/// Survey question set: band definitions plus manual category assignments
/// for boundary answers.
struct SurveyQuestionSet {
  std::vector<SurveyQuestion> questions;
  std::vector<CategoryOverride> overrides;
};

SurveyQuestionSet load_survey_questions(const std::filesystem::path& path);

}  // namespace divlab
