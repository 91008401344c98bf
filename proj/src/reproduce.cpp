// SPDX-License-Identifier: Apache-2.0
#include "divlab/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "divlab/coding.hpp"
#include "divlab/io.hpp"
#include "divlab/mcda.hpp"
#include "divlab/scenario.hpp"

namespace divlab {

using nlohmann::json;

namespace {

struct Checker {
  FixtureResult& result;

  void numeric(const std::string& what, double actual, const json& expected) {
    const double want = expected.at(0).get<double>();
    const double tol = expected.at(1).get<double>();
    const double dev = std::abs(actual - want);
    ++result.checks;
    result.max_deviation = std::max(result.max_deviation, dev);
    if (!(dev <= tol)) {
      ++result.failures;
      std::ostringstream msg;
      msg.precision(10);
      msg << what << ": got " << actual << ", expected " << want << " +/- "
          << tol;
      result.messages.push_back(msg.str());
    }
  }

  void exact(const std::string& what, long actual, long want) {
    ++result.checks;
    if (actual != want) {
      ++result.failures;
      result.messages.push_back(what + ": got " + std::to_string(actual) +
                                ", expected " + std::to_string(want));
    }
  }

  void text(const std::string& what, const std::string& actual,
            const std::string& want) {
    ++result.checks;
    if (actual != want) {
      ++result.failures;
      result.messages.push_back(what + ": got '" + actual + "', expected '" +
                                want + "'");
    }
  }
};

void run_scenario_fixture(const std::filesystem::path& path, const json& j,
                          FixtureResult& result) {
  const ScenarioBundle bundle = load_scenario_bundle(path);
  const auto cells = run_scenario(bundle);
  auto find_cell = [&cells](const std::string& user,
                            const std::string& measure) -> const ScenarioCell& {
    for (const auto& c : cells) {
      if (c.user == user && c.measure.str() == measure) return c;
    }
    throw IoError("expectation names unknown cell " + user + "/" + measure);
  };

  Checker check{result};
  if (!j.contains("expected")) return;
  const json& expected = j.at("expected");
  if (expected.contains("ground_truth_entropy")) {
    check.numeric("H(ground_truth)", shannon_entropy(bundle.ground_truth),
                  expected.at("ground_truth_entropy"));
  }
  if (expected.contains("divergence")) {
    for (const auto& [user, row] : expected.at("divergence").items()) {
      for (const auto& [measure, cell] : row.items()) {
        check.numeric("divergence " + user + "/" + measure,
                      find_cell(user, measure).divergence.total, cell);
      }
    }
  }
  if (expected.contains("benefit")) {
    for (const auto& [user, row] : expected.at("benefit").items()) {
      for (const auto& [measure, cell] : row.items()) {
        const auto& found = find_cell(user, measure);
        if (!found.benefit) {
          ++result.checks;
          ++result.failures;
          result.messages.push_back("benefit " + user + "/" + measure +
                                    " was not computed");
          continue;
        }
        check.numeric("benefit " + user + "/" + measure,
                      found.benefit->benefit, cell);
      }
    }
  }
}

void run_survey_fixture(const std::filesystem::path& path, const json& j,
                        FixtureResult& result) {
  const auto dir = path.parent_path();
  const auto records =
      load_survey_records(dir / j.at("records").get<std::string>());
  const auto questions =
      load_survey_questions(dir / j.at("questions").get<std::string>());

  Checker check{result};
  if (!j.contains("expected")) return;
  const json& expected = j.at("expected");

  if (expected.contains("category_benefit")) {
    for (const auto& [cat_name, row] :
         expected.at("category_benefit").items()) {
      const Category cat = category_from_string(cat_name);
      for (const auto& [measure, cell] : row.items()) {
        // Band benefits are identical across the questions; use the first.
        const auto b = category_benefit(questions.questions.front().bands,
                                        cat, MeasureId::parse(measure));
        check.numeric("category_benefit " + cat_name + "/" + measure,
                      b.benefit, cell);
      }
    }
  }

  if (expected.contains("per_question")) {
    std::map<std::string, std::vector<QuestionReport>> by_measure;
    auto report_for = [&](const std::string& measure,
                          const std::string& qid) -> QuestionReport {
      auto it = by_measure.find(measure);
      if (it == by_measure.end()) {
        it = by_measure
                 .emplace(measure,
                          analyze_survey(records, questions.questions,
                                         MeasureId::parse(measure),
                                         questions.overrides))
                 .first;
      }
      for (const auto& r : it->second) {
        if (r.question == qid) return r;
      }
      throw IoError("expectation names unknown question " + qid);
    };

    for (const auto& [qid, spec] : expected.at("per_question").items()) {
      if (spec.contains("counts")) {
        const auto rep = report_for("dnew:k=2", qid);
        check.exact(qid + " spot_on count",
                    static_cast<long>(rep.count_spot_on),
                    spec.at("counts").at(0).get<long>());
        check.exact(qid + " close count", static_cast<long>(rep.count_close),
                    spec.at("counts").at(1).get<long>());
        check.exact(qid + " wild_guess count",
                    static_cast<long>(rep.count_wild_guess),
                    spec.at("counts").at(2).get<long>());
      }
      if (spec.contains("mean_benefit")) {
        for (const auto& [measure, cell] : spec.at("mean_benefit").items()) {
          check.numeric(qid + " mean benefit " + measure,
                        report_for(measure, qid).mean_benefit, cell);
        }
      }
      if (spec.contains("mean_time")) {
        check.numeric(qid + " mean response time",
                      report_for("dnew:k=2", qid).mean_response_time,
                      spec.at("mean_time"));
      }
      if (spec.contains("ratio")) {
        for (const auto& [measure, cell] : spec.at("ratio").items()) {
          check.numeric(qid + " cost-benefit ratio " + measure,
                        report_for(measure, qid).cost_benefit_ratio, cell);
        }
      }
    }
  }
}

void run_mcda_fixture(const std::filesystem::path& path, const json& j,
                      FixtureResult& result) {
  const auto dir = path.parent_path();
  const CriteriaTable table =
      load_criteria_table(dir / j.at("table").get<std::string>());
  const EliminationPlan plan =
      load_elimination_plan(dir / j.at("plan").get<std::string>());
  const McdaOutcome outcome = run_plan(table, plan);

  Checker check{result};
  if (!j.contains("expected")) return;
  const json& expected = j.at("expected");

  if (expected.contains("stage_sums")) {
    const auto& spec = expected.at("stage_sums");
    const auto criteria = spec.at("criteria").get<std::vector<std::string>>();
    for (const auto& [cand, want] : spec.at("sums").items()) {
      const auto sums = stage_sums(table, criteria, {cand});
      check.exact("stage sum " + cand, sums.front().sum, want.get<long>());
    }
  }
  auto survivor =
      [&outcome](const std::string& name) -> const RankedCandidate& {
    for (const auto& s : outcome.survivors) {
      if (s.candidate == name) return s;
    }
    throw IoError("expectation names eliminated candidate " + name);
  };
  if (expected.contains("ranking_sums")) {
    for (const auto& [cand, want] : expected.at("ranking_sums").items()) {
      check.exact("ranking sum " + cand, survivor(cand).ranking_sum,
                  want.get<long>());
    }
  }
  if (expected.contains("overall_sums")) {
    for (const auto& [cand, want] : expected.at("overall_sums").items()) {
      check.exact("overall sum " + cand, survivor(cand).overall_sum,
                  want.get<long>());
    }
  }
  if (expected.contains("survivors")) {
    const auto want = expected.at("survivors").get<std::vector<std::string>>();
    std::string got;
    for (const auto& s : outcome.survivors) {
      if (!got.empty()) got += ",";
      got += s.candidate;
    }
    std::string want_joined;
    for (const auto& s : want) {
      if (!want_joined.empty()) want_joined += ",";
      want_joined += s;
    }
    check.text("survivor order", got, want_joined);
  }
  if (expected.contains("winner")) {
    check.text("winner",
               outcome.winners.size() == 1 ? outcome.winners.front() : "<tie>",
               expected.at("winner").get<std::string>());
  }
}

void run_coding_fixture(const json& j, FixtureResult& result) {
  Checker check{result};
  std::size_t index = 0;
  for (const auto& c : j.at("cases")) {
    const std::string tag = "case " + std::to_string(index++);
    const auto probs = c.at("p").get<std::vector<double>>();
    const Pmf q(Alphabet::indexed(probs.size()), probs);

    const PrefixCode code = huffman(q);
    auto lengths = code.lengths();
    std::sort(lengths.begin(), lengths.end());
    auto want_lengths =
        c.at("huffman_lengths").get<std::vector<std::size_t>>();
    std::sort(want_lengths.begin(), want_lengths.end());
    check.text(tag + " huffman length multiset",
               lengths == want_lengths ? "match" : "mismatch", "match");
    check.numeric(tag + " huffman average", expected_code_length(q, code),
                  c.at("huffman_avg"));

    const CodeStats literal = shannon_literal_lengths(q);
    auto got_lit = literal.lengths;
    std::sort(got_lit.begin(), got_lit.end());
    auto want_lit = c.at("literal_lengths").get<std::vector<std::size_t>>();
    std::sort(want_lit.begin(), want_lit.end());
    check.text(tag + " literal length multiset",
               got_lit == want_lit ? "match" : "mismatch", "match");
    check.numeric(tag + " literal average", literal.average_length_under(q),
                  c.at("literal_avg"));
    check.numeric(tag + " entropy", shannon_entropy(q), c.at("entropy"));
  }
}

}  // namespace

std::vector<FixtureResult> reproduce_all(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("fixture directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<FixtureResult> results;
  for (const auto& path : files) {
    json j;
    {
      std::ifstream in(path);
      try {
        in >> j;
      } catch (const json::parse_error&) {
        continue;
      }
    }
    // Files without a "type" are inputs referenced by other fixtures.
    if (!j.is_object() || !j.contains("type")) continue;
    const std::string type = j.at("type").get<std::string>();

    FixtureResult result;
    result.name = j.value("name", path.stem().string());
    result.kind = type;
    try {
      if (type == "scenario") {
        run_scenario_fixture(path, j, result);
      } else if (type == "survey") {
        run_survey_fixture(path, j, result);
      } else if (type == "mcda") {
        run_mcda_fixture(path, j, result);
      } else if (type == "coding") {
        run_coding_fixture(j, result);
      } else if (type == "data") {
        // Raw dataset: loading without error is the whole check.
        ++result.checks;
      } else {
        ++result.failures;
        result.messages.push_back("unknown fixture type '" + type + "'");
      }
    } catch (const std::exception& e) {
      ++result.failures;
      result.messages.push_back(std::string("error: ") + e.what());
    }
    results.push_back(std::move(result));
  }
  if (results.empty()) {
    throw IoError("no fixtures found in " + dir.string());
  }
  return results;
}

}  // namespace divlab
