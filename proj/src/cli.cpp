// SPDX-License-Identifier: Apache-2.0
#include "divlab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "divlab/coding.hpp"
#include "divlab/costbenefit.hpp"
#include "divlab/curves.hpp"
#include "divlab/io.hpp"
#include "divlab/mcda.hpp"
#include "divlab/reproduce.hpp"
#include "divlab/scenario.hpp"

namespace divlab {

using nlohmann::json;

namespace {

enum class Format { Table, Csv, Json };

struct GlobalOpts {
  Format format = Format::Table;
  int digits = 6;
  std::string fixtures;

  std::filesystem::path fixtures_dir() const {
    if (!fixtures.empty()) return fixtures;
    if (const char* env = std::getenv("DIVLAB_FIXTURES")) return env;
    return "fixtures";
  }
};

// Display formatting only; JSON output always serializes full binary64.
std::string fmt(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) {
    s += ".0";
  }
  return s;
}

json json_number(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  if (std::isnan(v)) return json("nan");
  return json(v);
}

json divergence_to_json(const DivergenceResult& d, const Alphabet& a) {
  json j;
  j["measure"] = d.measure.str();
  j["total"] = json_number(d.total);
  j["infinite"] = d.infinite;
  json per = json::object();
  for (std::size_t i = 0; i < d.per_letter.size(); ++i) {
    per[a.letter(i)] = json_number(d.per_letter[i]);
  }
  j["per_letter"] = per;
  return j;
}

json benefit_to_json(const BenefitBreakdown& b) {
  json j;
  j["alphabet_compression"] = json_number(b.alphabet_compression);
  j["potential_distortion"] = json_number(b.potential_distortion);
  j["benefit"] = json_number(b.benefit);
  j["hmax"] = json_number(b.hmax);
  j["measure"] = b.measure.str();
  if (b.cost) j["cost"] = *b.cost;
  if (b.ratio) j["ratio"] = json_number(*b.ratio);
  return j;
}

void print_benefit(const BenefitBreakdown& b, const GlobalOpts& g,
                   std::ostream& out) {
  if (g.format == Format::Json) {
    out << benefit_to_json(b).dump(2) << '\n';
    return;
  }
  auto line = [&](const std::string& k, const std::string& v) {
    if (g.format == Format::Csv) {
      out << k << ',' << v << '\n';
    } else {
      out << std::left << std::setw(22) << k << v << '\n';
    }
  };
  line("alphabet_compression", fmt(b.alphabet_compression, g.digits));
  line("potential_distortion", fmt(b.potential_distortion, g.digits));
  line("benefit", fmt(b.benefit, g.digits));
  line("hmax", fmt(b.hmax, g.digits));
  line("measure", b.measure.str());
  if (b.cost) line("cost", fmt(*b.cost, g.digits));
  if (b.ratio) line("ratio", fmt(*b.ratio, g.digits));
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path);
  return f;
}

// -------------------------------------------------------------- subcommands

struct EntropyCmd {
  std::string pmf_path;

  int run(const GlobalOpts& g, std::ostream& out) const {
    const Pmf p = load_pmf(pmf_path);
    const double h = shannon_entropy(p);
    const double hmax = max_entropy(p.alphabet());
    switch (g.format) {
      case Format::Json: {
        json j{{"entropy", h}, {"max_entropy", hmax}, {"n", p.size()}};
        out << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out << "entropy," << fmt(h, 17) << "\nmax_entropy," << fmt(hmax, 17)
            << '\n';
        break;
      case Format::Table:
        out << fmt(h, g.digits) << '\n';
        break;
    }
    return 0;
  }
};

struct DivergenceCmd {
  std::string measure;
  std::string p_path;
  std::string q_path;
  std::string joint_path;
  bool per_letter = false;
  bool swap = false;

  int run(const GlobalOpts& g, std::ostream& out) const {
    const MeasureId m = MeasureId::parse(measure);
    Pmf p = load_pmf(p_path);
    Pmf q = load_pmf(q_path);
    if (swap) std::swap(p, q);
    std::optional<JointPmf> joint;
    if (!joint_path.empty()) {
      std::ifstream in(joint_path);
      if (!in) throw IoError("cannot open " + joint_path);
      json parsed;
      try {
        in >> parsed;
      } catch (const json::parse_error& e) {
        throw IoError(joint_path + ": " + e.what());
      }
      std::vector<double> cells;
      for (const auto& row : parsed.at("r")) {
        for (const auto& v : row) cells.push_back(v.get<double>());
      }
      joint.emplace(p.alphabet(), std::move(cells));
    }
    const DivergenceResult d = compute(m, p, q, joint ? &*joint : nullptr);
    switch (g.format) {
      case Format::Json:
        out << divergence_to_json(d, p.alphabet()).dump(2) << '\n';
        break;
      case Format::Csv:
        out << "total," << fmt(d.total, 17) << '\n';
        if (per_letter) {
          for (std::size_t i = 0; i < d.per_letter.size(); ++i) {
            out << p.alphabet().letter(i) << ',' << fmt(d.per_letter[i], 17)
                << '\n';
          }
        }
        break;
      case Format::Table:
        out << fmt(d.total, g.digits) << '\n';
        if (per_letter) {
          for (std::size_t i = 0; i < d.per_letter.size(); ++i) {
            out << "  " << std::left << std::setw(16)
                << p.alphabet().letter(i) << fmt(d.per_letter[i], g.digits)
                << '\n';
          }
        }
        break;
    }
    return 0;
  }
};

struct BenefitCmd {
  std::string measure = "dnew:k=2";
  std::string input_path;
  std::string output_path;
  std::string reconstruction_path;
  double hmax = 0.0;
  double cost = 0.0;

  int run(const GlobalOpts& g, std::ostream& out) const {
    const MeasureId m = MeasureId::parse(measure);
    const Pmf input = load_pmf(input_path);
    const Pmf output = load_pmf(output_path);
    const Pmf reconstruction = load_pmf(reconstruction_path);
    std::optional<double> hmax_override;
    if (hmax > 0.0) hmax_override = hmax;
    BenefitBreakdown b =
        m.kind == MeasureId::Kind::KL
            ? benefit_kl(input, output, reconstruction)
            : benefit_bounded(input, output, reconstruction, m, hmax_override);
    if (cost != 0.0) b = with_cost(b, cost);
    print_benefit(b, g, out);
    return 0;
  }
};

struct CurveCmd {
  std::string measure;
  std::string alphas = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
  std::size_t points = 1001;
  bool swap = false;
  std::string out_path;

  int run(std::ostream& out) const {
    CurveSpec spec;
    spec.measure = MeasureId::parse(measure);
    for (const auto& a : split_list(alphas)) {
      spec.alphas.push_back(std::stod(a));
    }
    spec.p1_grid = linear_grid(points);
    spec.swap_arguments = swap;
    const CurveTable table = sweep(spec);
    if (out_path.empty()) {
      write_csv(table, out);
    } else {
      auto f = open_output(out_path);
      write_csv(table, f);
    }
    return 0;
  }
};

struct NearZeroCmd {
  std::string measures = "kl,kl*0.3,js,dnew:k=1,dnew:k=2,mink:k=2,mink:k=200";
  double lo = 1e-10;
  double hi = 0.1;
  std::size_t per_decade = 20;
  std::string out_path;

  int run(std::ostream& out) const {
    std::vector<MeasureId> ids;
    for (const auto& m : split_list(measures)) {
      ids.push_back(MeasureId::parse(m));
    }
    const CurveTable table = near_zero_sweep(ids, lo, hi, per_decade);
    if (out_path.empty()) {
      write_csv(table, out);
    } else {
      auto f = open_output(out_path);
      write_csv(table, f);
    }
    return 0;
  }
};

struct HuffmanCmd {
  std::string pmf_path;
  bool stats = false;

  int run(const GlobalOpts& g, std::ostream& out) const {
    const Pmf q = load_pmf(pmf_path);
    const PrefixCode code = huffman(q);
    const double h = shannon_entropy(q);
    const double avg = expected_code_length(q, code);
    bool all_positive = true;
    for (double v : q.probs()) all_positive = all_positive && v > 0.0;

    if (g.format == Format::Json) {
      json letters = json::array();
      for (std::size_t i = 0; i < q.size(); ++i) {
        letters.push_back(json{{"letter", q.alphabet().letter(i)},
                               {"probability", q[i]},
                               {"codeword", code.codewords[i]},
                               {"length", code.codewords[i].size()}});
      }
      json j{{"letters", letters}};
      if (stats) {
        json s{{"entropy", h},
               {"huffman_average", avg},
               {"kraft_sum", code.kraft_sum()},
               {"max_length", code.max_length()},
               {"sandwich_ok", h <= avg && avg < h + 1.0}};
        if (all_positive) {
          const CodeStats lit = shannon_literal_lengths(q);
          s["literal_average"] = lit.average_length_under(q);
        }
        j["stats"] = s;
      }
      out << j.dump(2) << '\n';
      return 0;
    }

    out << (g.format == Format::Csv
                ? "letter,probability,codeword,length\n"
                : "letter  probability  codeword  length\n");
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (g.format == Format::Csv) {
        out << q.alphabet().letter(i) << ',' << fmt(q[i], 17) << ','
            << code.codewords[i] << ',' << code.codewords[i].size() << '\n';
      } else {
        out << std::left << std::setw(8) << q.alphabet().letter(i)
            << std::setw(13) << fmt(q[i], g.digits) << std::setw(10)
            << code.codewords[i] << code.codewords[i].size() << '\n';
      }
    }
    if (stats) {
      out << "H(Q) = " << fmt(h, g.digits) << '\n';
      out << "huffman average = " << fmt(avg, g.digits) << '\n';
      if (all_positive) {
        const CodeStats lit = shannon_literal_lengths(q);
        out << "literal average = " << fmt(lit.average_length_under(q), g.digits)
            << '\n';
      }
      out << "kraft sum = " << fmt(code.kraft_sum(), g.digits) << '\n';
      out << "sandwich H <= avg < H+1: "
          << ((h <= avg && avg < h + 1.0) ? "ok" : "VIOLATED") << '\n';
    }
    return 0;
  }
};

struct WorstCaseCmd {
  std::size_t n = 8;
  double epsilon = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 42;

  int run(const GlobalOpts& g, std::ostream& out) const {
    if (trials > 0) {
      const BoundReport r = bound_report(n, trials, seed);
      if (g.format == Format::Json) {
        json j{{"n", r.n},
               {"trials", r.trials},
               {"seed", r.seed},
               {"max_expected_length", r.max_expected_length},
               {"max_length_minus_entropy", r.max_length_minus_entropy},
               {"bound", r.n - 1},
               {"violations", r.violations},
               {"pass", r.pass}};
        out << j.dump(2) << '\n';
      } else {
        out << "n = " << r.n << ", trials = " << r.trials
            << ", seed = " << r.seed << '\n';
        out << "max expected code length = "
            << fmt(r.max_expected_length, g.digits) << " (bound " << r.n - 1
            << ")\n";
        out << "max length minus entropy = "
            << fmt(r.max_length_minus_entropy, g.digits) << " (bound "
            << r.n - 1 << ")\n";
        out << (r.pass ? "PASS" : "FAIL") << '\n';
      }
      return r.pass ? 0 : 1;
    }

    const double eps = epsilon > 0.0
                           ? epsilon
                           : 0.5 * std::exp2(-static_cast<double>(n - 1));
    const Pmf q = worst_case_pmf(n, eps);
    const PrefixCode code = huffman(q);
    if (g.format == Format::Json) {
      json letters = json::array();
      for (std::size_t i = 0; i < q.size(); ++i) {
        letters.push_back(json{{"letter", q.alphabet().letter(i)},
                               {"probability", q[i]},
                               {"codeword", code.codewords[i]},
                               {"length", code.codewords[i].size()}});
      }
      json j{{"n", n},
             {"epsilon", eps},
             {"letters", letters},
             {"max_length", code.max_length()}};
      out << j.dump(2) << '\n';
      return 0;
    }
    out << "worst-case pmf, n = " << n
        << ", epsilon = " << fmt(eps, g.digits) << '\n';
    out << "letter  probability  codeword  length\n";
    for (std::size_t i = 0; i < q.size(); ++i) {
      out << std::left << std::setw(8) << q.alphabet().letter(i)
          << std::setw(13) << fmt(q[i], g.digits) << std::setw(10)
          << code.codewords[i] << code.codewords[i].size() << '\n';
    }
    out << "max codeword length = " << code.max_length() << " (bound "
        << n - 1 << ")\n";
    const Pmf concentrated = one_hot(q.alphabet(), n - 1);
    out << "expected length with all mass on the deepest letter = "
        << fmt(expected_code_length(concentrated, code), g.digits) << '\n';
    return 0;
  }
};

struct McdaCmd {
  std::string table_path;
  std::string plan_path;

  int run(const GlobalOpts& g, std::ostream& out) const {
    const CriteriaTable table = load_criteria_table(table_path);
    const EliminationPlan plan = load_elimination_plan(plan_path);
    const McdaOutcome outcome = run_plan(table, plan);

    if (g.format == Format::Json) {
      json audit = json::array();
      for (const auto& e : outcome.audit) {
        json sums = json::object();
        for (const auto& s : e.sums) sums[s.candidate] = s.sum;
        audit.push_back(json{{"stage", e.stage},
                             {"rule", e.rule},
                             {"sums", sums},
                             {"eliminated", e.eliminated}});
      }
      json survivors = json::array();
      for (const auto& s : outcome.survivors) {
        survivors.push_back(json{{"candidate", s.candidate},
                                 {"ranking_sum", s.ranking_sum},
                                 {"overall_sum", s.overall_sum}});
      }
      out << json{{"audit", audit},
                  {"survivors", survivors},
                  {"winners", outcome.winners}}
                 .dump(2)
          << '\n';
      return 0;
    }

    for (const auto& e : outcome.audit) {
      out << "stage " << e.stage << " [" << e.rule << "]";
      if (!e.sums.empty()) {
        out << " sums:";
        for (const auto& s : e.sums) out << ' ' << s.candidate << '=' << s.sum;
      }
      out << " eliminated:";
      if (e.eliminated.empty()) {
        out << " (none)";
      } else {
        for (const auto& c : e.eliminated) out << ' ' << c;
      }
      out << '\n';
    }
    out << "survivors (ranked):\n";
    for (const auto& s : outcome.survivors) {
      out << "  " << std::left << std::setw(12) << s.candidate << " ranking "
          << s.ranking_sum << "  overall " << s.overall_sum << '\n';
    }
    out << "winner: ";
    for (std::size_t i = 0; i < outcome.winners.size(); ++i) {
      out << (i ? ", " : "") << outcome.winners[i];
    }
    if (outcome.winners.size() > 1) out << " (tie)";
    out << '\n';
    return 0;
  }
};

struct ScenarioCmd {
  bool list = false;
  std::string name;
  std::string measure_filter;

  int run(const GlobalOpts& g, std::ostream& out) const {
    const auto dir = g.fixtures_dir();
    if (list) {
      if (!std::filesystem::is_directory(dir)) {
        throw IoError("fixture directory not found: " + dir.string());
      }
      std::vector<std::string> names;
      for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json") continue;
        std::ifstream in(entry.path());
        json j;
        try {
          in >> j;
        } catch (const json::parse_error&) {
          continue;
        }
        if (j.is_object() && j.value("type", "") == "scenario") {
          names.push_back(j.value("name", entry.path().stem().string()));
        }
      }
      std::sort(names.begin(), names.end());
      for (const auto& n : names) out << n << '\n';
      return 0;
    }

    const auto path = dir / (name + ".json");
    ScenarioBundle bundle = load_scenario_bundle(path);
    if (!measure_filter.empty()) {
      bundle.measures = {MeasureId::parse(measure_filter)};
    }
    const auto cells = run_scenario(bundle);

    if (g.format == Format::Json) {
      json rows = json::array();
      for (const auto& c : cells) {
        json row{{"user", c.user},
                 {"measure", c.measure.str()},
                 {"divergence", json_number(c.divergence.total)}};
        if (c.benefit) row["benefit"] = benefit_to_json(*c.benefit);
        rows.push_back(row);
      }
      out << json{{"name", bundle.name}, {"cells", rows}}.dump(2) << '\n';
      return 0;
    }
    if (g.format == Format::Csv) {
      out << "user,measure,divergence,benefit\n";
      for (const auto& c : cells) {
        out << c.user << ',' << c.measure.str() << ','
            << fmt(c.divergence.total, 17) << ',';
        if (c.benefit) out << fmt(c.benefit->benefit, 17);
        out << '\n';
      }
      return 0;
    }
    out << "scenario " << bundle.name << '\n';
    out << "user        measure      divergence   benefit\n";
    for (const auto& c : cells) {
      out << std::left << std::setw(12) << c.user << std::setw(13)
          << c.measure.str() << std::setw(13)
          << fmt(c.divergence.total, g.digits);
      if (c.benefit) out << fmt(c.benefit->benefit, g.digits);
      out << '\n';
    }
    return 0;
  }
};

struct SurveyCmd {
  std::string records_path;
  std::string questions_path;
  std::string measure = "dnew:k=2";

  int run(const GlobalOpts& g, std::ostream& out, std::ostream& err) const {
    const auto records = load_survey_records(records_path);
    const auto questions = load_survey_questions(questions_path);
    std::vector<std::string> warnings;
    const auto reports =
        analyze_survey(records, questions.questions, MeasureId::parse(measure),
                       questions.overrides, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';

    if (g.format == Format::Json) {
      json rows = json::array();
      for (const auto& r : reports) {
        rows.push_back(json{{"question", r.question},
                            {"spot_on", r.count_spot_on},
                            {"close", r.count_close},
                            {"wild_guess", r.count_wild_guess},
                            {"mean_benefit", json_number(r.mean_benefit)},
                            {"mean_response_time", r.mean_response_time},
                            {"ratio", json_number(r.cost_benefit_ratio)}});
      }
      out << json{{"measure", measure}, {"questions", rows}}.dump(2) << '\n';
      return 0;
    }
    const bool csv = g.format == Format::Csv;
    out << (csv ? "question,spot_on,close,wild_guess,mean_benefit,"
                  "mean_response_time,ratio\n"
                : "question  spot_on  close  wild  mean_benefit  mean_time  "
                  "ratio\n");
    for (const auto& r : reports) {
      if (csv) {
        out << r.question << ',' << r.count_spot_on << ',' << r.count_close
            << ',' << r.count_wild_guess << ',' << fmt(r.mean_benefit, 17)
            << ',' << fmt(r.mean_response_time, 17) << ','
            << fmt(r.cost_benefit_ratio, 17) << '\n';
      } else {
        out << std::left << std::setw(10) << r.question << std::setw(9)
            << r.count_spot_on << std::setw(7) << r.count_close << std::setw(6)
            << r.count_wild_guess << std::setw(14)
            << fmt(r.mean_benefit, g.digits) << std::setw(11)
            << fmt(r.mean_response_time, g.digits)
            << fmt(r.cost_benefit_ratio, g.digits) << '\n';
      }
    }
    return 0;
  }
};

int run_reproduce(const GlobalOpts& g, std::ostream& out) {
  const auto results = reproduce_all(g.fixtures_dir());
  std::size_t failures = 0;
  for (const auto& r : results) {
    out << (r.pass() ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.kind
        << "): " << r.checks << " checks, max deviation "
        << fmt(r.max_deviation, 3) << '\n';
    for (const auto& m : r.messages) out << "       " << m << '\n';
    if (!r.pass()) ++failures;
  }
  out << (failures == 0 ? "all fixtures reproduced"
                        : std::to_string(failures) + " fixture(s) failed")
      << '\n';
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"information-theoretic divergence and cost-benefit toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::string format = "table";
  app.add_option("--format", format, "output format: table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  app.add_option("--digits", g.digits, "significant digits for table output")
      ->check(CLI::Range(1, 17));
  app.add_option("--fixtures", g.fixtures,
                 "fixture directory (or set DIVLAB_FIXTURES)");

  EntropyCmd entropy_cmd;
  auto* entropy = app.add_subcommand("entropy", "Shannon entropy of a PMF");
  entropy->add_option("--p", entropy_cmd.pmf_path, "PMF file (.json or .csv)")
      ->required();

  DivergenceCmd div_cmd;
  auto* divergence =
      app.add_subcommand("divergence", "divergence between two PMFs");
  divergence
      ->add_option("--measure", div_cmd.measure,
                   "kl | kl*<f> | js | cond | dnew:k=<k> | dncm:k=<k> | "
                   "mink:k=<k>")
      ->required();
  divergence->add_option("--p", div_cmd.p_path, "first PMF")->required();
  divergence->add_option("--q", div_cmd.q_path, "second (reference) PMF")
      ->required();
  divergence->add_option("--joint", div_cmd.joint_path,
                         "joint distribution JSON {\"r\": [[...]]} for cond");
  divergence->add_flag("--per-letter", div_cmd.per_letter,
                       "print the per-letter decomposition");
  divergence->add_flag("--swap", div_cmd.swap, "swap the two arguments");

  BenefitCmd benefit_cmd;
  auto* benefit = app.add_subcommand(
      "benefit", "alphabet compression, distortion, and benefit");
  benefit->add_option("--measure", benefit_cmd.measure,
                      "kl, js, dnew:k=<k>, or dncm:k=<k>");
  benefit->add_option("--input", benefit_cmd.input_path, "input PMF")
      ->required();
  benefit->add_option("--output", benefit_cmd.output_path, "output PMF")
      ->required();
  benefit
      ->add_option("--reconstruction", benefit_cmd.reconstruction_path,
                   "reconstruction PMF")
      ->required();
  benefit->add_option("--hmax", benefit_cmd.hmax,
                      "override the maximum entropy in bits");
  benefit->add_option("--cost", benefit_cmd.cost, "attach a cost");

  BenefitCmd ratio_cmd;
  auto* ratio =
      app.add_subcommand("ratio", "benefit divided by an explicit cost");
  ratio->add_option("--measure", ratio_cmd.measure,
                    "kl, js, dnew:k=<k>, or dncm:k=<k>");
  ratio->add_option("--input", ratio_cmd.input_path, "input PMF")->required();
  ratio->add_option("--output", ratio_cmd.output_path, "output PMF")
      ->required();
  ratio
      ->add_option("--reconstruction", ratio_cmd.reconstruction_path,
                   "reconstruction PMF")
      ->required();
  ratio->add_option("--hmax", ratio_cmd.hmax, "override the maximum entropy");
  ratio->add_option("--cost", ratio_cmd.cost, "cost, e.g. seconds")
      ->required();

  CurveCmd curve_cmd;
  auto* curve = app.add_subcommand(
      "curve", "two-letter divergence curves over (alpha, p1), CSV");
  curve->add_option("--measure", curve_cmd.measure, "measure to sweep")
      ->required();
  curve->add_option("--alphas", curve_cmd.alphas, "comma-separated alphas");
  curve->add_option("--points", curve_cmd.points, "p1 sample count");
  curve->add_flag("--swap", curve_cmd.swap, "swap divergence arguments");
  curve->add_option("--out", curve_cmd.out_path, "write CSV here");

  NearZeroCmd nearzero_cmd;
  auto* nearzero = app.add_subcommand(
      "nearzero", "log-scale measure comparison near p1 = 0, CSV");
  nearzero->add_option("--measures", nearzero_cmd.measures,
                       "comma-separated measures");
  nearzero->add_option("--lo", nearzero_cmd.lo, "lower p1 bound");
  nearzero->add_option("--hi", nearzero_cmd.hi, "upper p1 bound");
  nearzero->add_option("--per-decade", nearzero_cmd.per_decade,
                       "samples per decade");
  nearzero->add_option("--out", nearzero_cmd.out_path, "write CSV here");

  HuffmanCmd huffman_cmd;
  auto* huffman_sc =
      app.add_subcommand("huffman", "optimal prefix code for a PMF");
  huffman_sc->add_option("--q", huffman_cmd.pmf_path, "PMF file")->required();
  huffman_sc->add_flag("--stats", huffman_cmd.stats,
                       "entropy, average lengths, sandwich check");

  WorstCaseCmd worstcase_cmd;
  auto* worstcase = app.add_subcommand(
      "worstcase", "deepest-code distribution and code-length bounds");
  worstcase->add_option("--n", worstcase_cmd.n, "alphabet size");
  worstcase->add_option("--epsilon", worstcase_cmd.epsilon,
                        "tail probability (default: half the cap)");
  worstcase->add_option("--trials", worstcase_cmd.trials,
                        "run the randomized bound check instead");
  worstcase->add_option("--seed", worstcase_cmd.seed, "bound check seed");

  McdaCmd mcda_cmd;
  auto* mcda =
      app.add_subcommand("mcda", "multi-criteria elimination and ranking");
  mcda->add_option("--table", mcda_cmd.table_path, "criteria table JSON")
      ->required();
  mcda->add_option("--plan", mcda_cmd.plan_path, "elimination plan JSON")
      ->required();

  ScenarioCmd scenario_cmd;
  auto* scenario = app.add_subcommand("scenario", "replay scenario fixtures");
  scenario->require_subcommand(1);
  auto* scenario_run = scenario->add_subcommand("run", "run one scenario");
  scenario_run->add_option("name", scenario_cmd.name, "fixture name")
      ->required();
  scenario_run->add_option("--measure", scenario_cmd.measure_filter,
                           "restrict to one measure");
  auto* scenario_list =
      scenario->add_subcommand("list", "list scenario fixtures");

  SurveyCmd survey_cmd;
  auto* survey = app.add_subcommand("survey", "per-question survey analysis");
  survey->add_option("--records", survey_cmd.records_path, "records CSV")
      ->required();
  survey
      ->add_option("--questions", survey_cmd.questions_path,
                   "question bands JSON")
      ->required();
  survey->add_option("--measure", survey_cmd.measure, "measure");

  auto* reproduce = app.add_subcommand(
      "reproduce", "replay every fixture and compare expected values");

  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 1;
  }
  g.format = format == "csv"    ? Format::Csv
             : format == "json" ? Format::Json
                                : Format::Table;

  try {
    if (*entropy) return entropy_cmd.run(g, out);
    if (*divergence) return div_cmd.run(g, out);
    if (*benefit) return benefit_cmd.run(g, out);
    if (*ratio) return ratio_cmd.run(g, out);
    if (*curve) return curve_cmd.run(out);
    if (*nearzero) return nearzero_cmd.run(out);
    if (*huffman_sc) return huffman_cmd.run(g, out);
    if (*worstcase) return worstcase_cmd.run(g, out);
    if (*mcda) return mcda_cmd.run(g, out);
    if (*scenario) {
      scenario_cmd.list = scenario_list->parsed();
      return scenario_cmd.run(g, out);
    }
    if (*survey) return survey_cmd.run(g, out, err);
    if (*reproduce) return run_reproduce(g, out);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace divlab
