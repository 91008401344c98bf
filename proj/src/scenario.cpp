// SPDX-License-Identifier: Apache-2.0
#include "divlab/scenario.hpp"

#include <algorithm>

namespace divlab {

std::vector<ScenarioCell> run_scenario(const ScenarioBundle& bundle) {
  std::vector<ScenarioCell> cells;
  cells.reserve(bundle.users.size() * bundle.measures.size());
  for (const auto& user : bundle.users) {
    for (const auto& measure : bundle.measures) {
      ScenarioCell cell{user.label, measure,
                        compute(measure, user.reconstruction,
                                bundle.ground_truth),
                        std::nullopt};
      if (measure.unit_bounded()) {
        cell.benefit =
            benefit_bounded(bundle.ground_truth, bundle.process_output,
                            user.reconstruction, measure,
                            bundle.hmax_override);
      } else if (measure.kind == MeasureId::Kind::KL) {
        cell.benefit = benefit_kl(bundle.ground_truth, bundle.process_output,
                                  user.reconstruction);
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

const char* to_string(Category category) {
  switch (category) {
    case Category::SpotOn: return "spot_on";
    case Category::Close: return "close";
    case Category::WildGuess: return "wild_guess";
  }
  return "wild_guess";
}

Category category_from_string(std::string_view s) {
  if (s == "spot_on") return Category::SpotOn;
  if (s == "close") return Category::Close;
  if (s == "wild_guess") return Category::WildGuess;
  throw Error(ErrorCode::BadArgument,
              "category must be spot_on|close|wild_guess, got '" +
                  std::string(s) + "'");
}

Category categorize_answer(std::size_t answer, const CategoryBands& bands) {
  if (answer < 1 || answer > bands.n) {
    throw Error(ErrorCode::AnswerOutOfRange,
                "answer " + std::to_string(answer) + " outside [1, " +
                    std::to_string(bands.n) + "]");
  }
  const auto xi = static_cast<long>(bands.xi);
  const auto a = static_cast<long>(answer);
  if (a >= xi - 2 && a <= xi + 2) return Category::SpotOn;
  if ((a >= xi - 7 && a <= xi - 3) || (a >= xi + 3 && a <= xi + 12)) {
    return Category::Close;
  }
  return Category::WildGuess;
}

BenefitBreakdown category_benefit(const CategoryBands& bands,
                                  Category category,
                                  const MeasureId& measure) {
  const Pmf ground_truth = banded_estimate_pmf(bands.xi, bands.n);
  const Alphabet& a = ground_truth.alphabet();
  std::size_t representative = bands.xi;
  switch (category) {
    case Category::SpotOn:
      representative = bands.xi;
      break;
    case Category::Close:
      representative = bands.xi + 3;
      break;
    case Category::WildGuess: {
      const std::size_t dist_low = bands.xi - 1;
      const std::size_t dist_high = bands.n - bands.xi;
      representative = dist_high >= dist_low ? bands.n : 1;
      break;
    }
  }
  const Pmf reconstruction = one_hot(a, representative - 1);
  const Pmf output = one_hot(a, bands.xi - 1);  // deterministic depiction
  if (measure.kind == MeasureId::Kind::KL) {
    return benefit_kl(ground_truth, output, reconstruction);
  }
  return benefit_bounded(ground_truth, output, reconstruction, measure);
}

std::vector<QuestionReport> analyze_survey(
    const std::vector<SurveyRecord>& records,
    const std::vector<SurveyQuestion>& questions, const MeasureId& measure,
    const std::vector<CategoryOverride>& overrides,
    std::vector<std::string>* warnings) {
  // Reject records that reference no known question.
  for (const auto& record : records) {
    const bool known =
        std::any_of(questions.begin(), questions.end(),
                    [&record](const SurveyQuestion& q) {
                      return q.id == record.question;
                    });
    if (!known) {
      throw Error(ErrorCode::UnknownQuestion,
                  "record for '" + record.question +
                      "' has no band definition");
    }
  }

  auto find_override = [&overrides](const SurveyRecord& r)
      -> std::optional<Category> {
    for (const auto& o : overrides) {
      if (o.surveyee == r.surveyee && o.question == r.question) {
        return o.category;
      }
    }
    return std::nullopt;
  };

  std::vector<QuestionReport> reports;
  for (const auto& question : questions) {
    QuestionReport report;
    report.question = question.id;
    double time_sum = 0.0;
    double benefit_sum = 0.0;
    std::size_t count = 0;
    const double b_spot =
        category_benefit(question.bands, Category::SpotOn, measure).benefit;
    const double b_close =
        category_benefit(question.bands, Category::Close, measure).benefit;
    const double b_wild =
        category_benefit(question.bands, Category::WildGuess, measure)
            .benefit;
    for (const auto& record : records) {
      if (record.question != question.id) continue;
      auto answer = static_cast<std::size_t>(std::max(record.answer_minutes, 1));
      if (answer > question.bands.n) {
        if (warnings != nullptr) {
          warnings->push_back("answer " + std::to_string(answer) + " by " +
                              record.surveyee + " on " + record.question +
                              " clamped to " +
                              std::to_string(question.bands.n));
        }
        answer = question.bands.n;
      }
      const Category cat = find_override(record).value_or(
          categorize_answer(answer, question.bands));
      switch (cat) {
        case Category::SpotOn:
          ++report.count_spot_on;
          benefit_sum += b_spot;
          break;
        case Category::Close:
          ++report.count_close;
          benefit_sum += b_close;
          break;
        case Category::WildGuess:
          ++report.count_wild_guess;
          benefit_sum += b_wild;
          break;
      }
      time_sum += record.response_time_seconds;
      ++count;
    }
    if (count == 0) continue;
    report.mean_benefit = benefit_sum / static_cast<double>(count);
    report.mean_response_time = time_sum / static_cast<double>(count);
    report.cost_benefit_ratio = report.mean_benefit / report.mean_response_time;
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace divlab
