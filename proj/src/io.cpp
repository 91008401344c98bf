// SPDX-License-Identifier: Apache-2.0
#include "divlab/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace divlab {

using nlohmann::json;

namespace {

json parse_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

Pmf pmf_from_json(const json& j, const std::string& origin) {
  try {
    std::vector<std::string> letters =
        j.at("letters").get<std::vector<std::string>>();
    std::vector<double> p = j.at("p").get<std::vector<double>>();
    return Pmf(Alphabet(std::move(letters)), std::move(p));
  } catch (const json::exception& e) {
    throw IoError(origin + ": expected {\"letters\": [...], \"p\": [...]}; " +
                  e.what());
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Pmf read_pmf_json(std::istream& in, const std::string& origin) {
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw IoError(origin + ": malformed JSON: " + e.what());
  }
  return pmf_from_json(j, origin);
}

Pmf read_pmf_csv(std::istream& in, const std::string& origin) {
  std::string line;
  if (!std::getline(in, line) || strip(line) != "letter,probability") {
    throw IoError(origin + ": expected header 'letter,probability'");
  }
  std::vector<std::string> letters;
  std::vector<double> p;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 2) {
      throw IoError(origin + ": expected 2 columns, got '" + line + "'");
    }
    letters.push_back(strip(fields[0]));
    try {
      p.push_back(std::stod(fields[1]));
    } catch (const std::exception&) {
      throw IoError(origin + ": bad probability '" + fields[1] + "'");
    }
  }
  return Pmf(Alphabet(std::move(letters)), std::move(p));
}

Pmf load_pmf(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  if (path.extension() == ".csv") {
    return read_pmf_csv(in, path.string());
  }
  return read_pmf_json(in, path.string());
}

void write_pmf_json(const Pmf& pmf, std::ostream& out) {
  json j;
  j["letters"] = pmf.alphabet().letters();
  j["p"] = pmf.probs();
  out << j.dump(2) << '\n';
}

ScenarioBundle load_scenario_bundle(const std::filesystem::path& path) {
  const json j = parse_json_file(path);
  const std::string origin = path.string();
  try {
    Pmf ground_truth = pmf_from_json(j.at("ground_truth"), origin);
    Pmf output = pmf_from_json(j.at("process_output"), origin);
    std::vector<ScenarioUser> users;
    for (const auto& u : j.at("users")) {
      users.push_back(ScenarioUser{
          u.at("label").get<std::string>(),
          Pmf(ground_truth.alphabet(), u.at("p").get<std::vector<double>>())});
    }
    std::vector<MeasureId> measures;
    for (const auto& m : j.at("measures")) {
      measures.push_back(MeasureId::parse(m.get<std::string>()));
    }
    std::optional<double> hmax;
    if (j.contains("hmax_override") && !j.at("hmax_override").is_null()) {
      hmax = j.at("hmax_override").get<double>();
    }
    return ScenarioBundle{j.at("name").get<std::string>(),
                          std::move(ground_truth),
                          std::move(output),
                          hmax,
                          std::move(users),
                          std::move(measures)};
  } catch (const json::exception& e) {
    throw IoError(origin + ": bad scenario bundle: " + e.what());
  }
}

CriteriaTable load_criteria_table(const std::filesystem::path& path) {
  const json j = parse_json_file(path);
  CriteriaTable table;
  try {
    for (const auto& c : j.at("criteria")) {
      table.criteria.push_back(Criterion{
          c.at("name").get<std::string>(),
          importance_from_string(c.at("importance").get<std::string>())});
    }
    table.candidates = j.at("candidates").get<std::vector<std::string>>();
    for (const auto& row : j.at("scores")) {
      std::vector<std::optional<int>> cells;
      for (const auto& cell : row) {
        if (cell.is_null()) {
          cells.emplace_back();
        } else {
          cells.emplace_back(cell.get<int>());
        }
      }
      table.scores.push_back(std::move(cells));
    }
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": bad criteria table: " + e.what());
  }
  table.validate();
  return table;
}

EliminationPlan load_elimination_plan(const std::filesystem::path& path) {
  const json j = parse_json_file(path);
  EliminationPlan plan;
  try {
    for (const auto& s : j.at("stages")) {
      EliminationStage stage;
      const std::string rule = s.at("rule").get<std::string>();
      if (rule == "eliminate-if-zero-on-critical") {
        stage.rule = EliminationStage::Rule::EliminateIfZeroOnCritical;
      } else if (rule == "keep-top-k-by-sum") {
        stage.rule = EliminationStage::Rule::KeepTopKBySum;
        stage.keep_k = s.at("k").get<std::size_t>();
      } else if (rule == "eliminate-named") {
        stage.rule = EliminationStage::Rule::EliminateNamed;
        stage.names = s.at("names").get<std::vector<std::string>>();
      } else {
        throw IoError(path.string() + ": unknown rule '" + rule + "'");
      }
      if (s.contains("criteria")) {
        stage.criteria = s.at("criteria").get<std::vector<std::string>>();
      }
      plan.stages.push_back(std::move(stage));
    }
    if (j.contains("ranking_criteria")) {
      plan.ranking_criteria =
          j.at("ranking_criteria").get<std::vector<std::string>>();
    }
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": bad elimination plan: " + e.what());
  }
  return plan;
}

std::vector<SurveyRecord> read_survey_records_csv(std::istream& in,
                                                  const std::string& origin) {
  std::string line;
  const std::string header =
      "surveyee,question,answer_minutes,response_time_seconds";
  if (!std::getline(in, line) || strip(line) != header) {
    throw IoError(origin + ": expected header '" + header + "'");
  }
  std::vector<SurveyRecord> records;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 4) {
      throw IoError(origin + ": expected 4 columns, got '" + line + "'");
    }
    SurveyRecord r;
    r.surveyee = strip(fields[0]);
    r.question = strip(fields[1]);
    try {
      r.answer_minutes = std::stoi(fields[2]);
      r.response_time_seconds = std::stod(fields[3]);
    } catch (const std::exception&) {
      throw IoError(origin + ": bad numeric field in '" + line + "'");
    }
    if (r.answer_minutes < 1) {
      throw Error(ErrorCode::AnswerOutOfRange,
                  origin + ": answers are minutes >= 1");
    }
    if (!(r.response_time_seconds > 0.0)) {
      throw Error(ErrorCode::BadArgument,
                  origin + ": response times must be positive");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<SurveyRecord> load_survey_records(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  return read_survey_records_csv(in, path.string());
}

SurveyQuestionSet load_survey_questions(const std::filesystem::path& path) {
  const json j = parse_json_file(path);
  SurveyQuestionSet set;
  try {
    const auto n = j.value("n", static_cast<std::size_t>(256));
    for (const auto& q : j.at("questions")) {
      set.questions.push_back(SurveyQuestion{
          q.at("id").get<std::string>(),
          CategoryBands{q.at("xi").get<std::size_t>(), n}});
    }
    if (j.contains("category_overrides")) {
      for (const auto& o : j.at("category_overrides")) {
        set.overrides.push_back(CategoryOverride{
            o.at("surveyee").get<std::string>(),
            o.at("question").get<std::string>(),
            category_from_string(o.at("category").get<std::string>())});
      }
    }
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": bad survey question set: " + e.what());
  }
  return set;
}

}  // namespace divlab
