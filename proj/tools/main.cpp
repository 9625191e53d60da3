// bdiv: command-line front end for the bounded-divergence library.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdiv/acceptance.hpp"
#include "bdiv/analysis.hpp"
#include "bdiv/coding.hpp"
#include "bdiv/cost_benefit.hpp"
#include "bdiv/divergence.hpp"
#include "bdiv/entropy.hpp"
#include "bdiv/json_io.hpp"
#include "report.hpp"

#ifndef BDIV_DATA_DIR
#define BDIV_DATA_DIR "data"
#endif

namespace bdiv::cli {
namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format;  // empty: per-command default
  int precision = kDefaultPrecision;
  std::string out;
};

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> values;
  std::size_t start = 0;
  const auto is_sep = [](char ch) { return ch == ',' || ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r'; };
  while (start < text.size()) {
    while (start < text.size() && is_sep(text[start])) ++start;
    if (start >= text.size()) break;
    std::size_t end = start;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const auto token = text.substr(start, end - start);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParse, "not a number: '" + std::string(token) + "'");
    }
    values.push_back(value);
    start = end;
  }
  return values;
}

/// A PMF given inline ("0.7,0.3") or as a file holding a JSON array or
/// separator-delimited numbers.
Pmf read_pmf(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    const std::string text = read_text_file(arg);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      try {
        return make_pmf(parse_json(text).get<std::vector<double>>());
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::kParse, e.what());
      }
    }
    return make_pmf(parse_number_list(text));
  }
  return make_pmf(parse_number_list(arg));
}

/// Rows separated by ';', cells by ','.
JointPmf read_joint(const std::string& arg) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(arg);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_number_list(row));
  MatrixX<double> cells(static_cast<Index>(rows.size()), rows.empty() ? 0 : static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw Error(ErrorCode::kParse, "joint rows differ in length");
    for (std::size_t j = 0; j < rows[i].size(); ++j) cells(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  }
  return JointPmf(std::move(cells));
}

std::optional<double> measure_param(const std::optional<double>& k, const std::optional<double>& scale) {
  return k ? k : scale;
}

OutputFormat resolve_format(const GlobalOptions& g, OutputFormat fallback) {
  if (g.format.empty()) return fallback;
  if (g.format == "csv") return OutputFormat::kCsv;
  if (g.format == "json") return OutputFormat::kJson;
  return OutputFormat::kPlain;
}

std::string join_ints(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Bounded divergence measures for information-theoretic cost-benefit analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "plain"}));
  app.add_option("--precision", g.precision, "Significant digits for real values")->check(CLI::Range(1, 17));
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  std::optional<double> k;
  std::optional<double> scale;
  std::string measure_flag;

  // entropy
  auto* entropy_cmd = app.add_subcommand("entropy", "Shannon entropy and maximum entropy of a PMF");
  std::string entropy_pmf;
  entropy_cmd->add_option("pmf", entropy_pmf, "Comma-separated PMF or file")->required();

  // divergence
  auto* div_cmd = app.add_subcommand("divergence", "Distortion between two PMFs under one measure");
  std::string div_measure, div_p, div_q, div_joint;
  div_cmd->add_option("measure", div_measure, "kl, kl_scaled_<s>, js, dnew_k<k>, dncm_k<k>, minkowski_k<k>, cond_entropy")
      ->required();
  div_cmd->add_option("p", div_p, "First PMF (reference order: D(P||Q))")->required();
  div_cmd->add_option("q", div_q, "Second PMF")->required();
  div_cmd->add_option("--k", k, "Power k for bare dnew/dncm/minkowski");
  div_cmd->add_option("--scale", scale, "Scale for bare kl_scaled");
  div_cmd->add_option("--joint", div_joint, "Joint distribution for cond_entropy, rows ';'-separated");

  // benefit
  auto* benefit_cmd = app.add_subcommand("benefit", "Benefit of one process step (AC - PD)");
  std::string b_input, b_output, b_recon;
  benefit_cmd->add_option("--input", b_input, "PMF of the input alphabet")->required();
  benefit_cmd->add_option("--output", b_output, "PMF of the output alphabet")->required();
  benefit_cmd->add_option("--reconstruction", b_recon, "Reconstructed input PMF")->required();
  benefit_cmd->add_option("--measure", measure_flag, "kl (original) or js/dnew_k<k>/dncm_k<k> (bounded)");
  benefit_cmd->add_option("--k", k, "Power k for bare dnew/dncm");

  // scenario
  auto* scenario_cmd = app.add_subcommand("scenario", "Distortion of every candidate against the ground truth");
  std::string scenario_file;
  scenario_cmd->add_option("file", scenario_file, "Scenario JSON file")->required();
  scenario_cmd->add_option("--measure", measure_flag, "Measure name (default kl)");
  scenario_cmd->add_option("--k", k, "Power k for bare dnew/dncm/minkowski");
  scenario_cmd->add_option("--scale", scale, "Scale for bare kl_scaled");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Binary PMF sweep over p1 and alpha, emitted as CSV");
  std::string sweep_measures = "kl,kl_scaled_0.3,js,dnew_k1,dnew_k2,dncm_k1,dncm_k2,minkowski_k2,minkowski_k200";
  std::string sweep_alphas;
  std::string sweep_grid = "linear";
  sweep_cmd->add_option("--measures,--measure", sweep_measures, "Comma-separated measure names")
      ->capture_default_str();
  sweep_cmd->add_option("--alphas", sweep_alphas, "Comma-separated alphas (default 0, 0.1, ..., 1)");
  sweep_cmd->add_option("--grid", sweep_grid, "linear[:lo:hi:step] or log[:lo:hi:points_per_decade]")
      ->capture_default_str();

  // huffman
  auto* huffman_cmd = app.add_subcommand("huffman", "Huffman and literal code lengths for a PMF");
  std::string huffman_pmf, huffman_true;
  huffman_cmd->add_option("pmf", huffman_pmf, "PMF the code is built for")->required();
  huffman_cmd->add_option("--true-pmf", huffman_true, "Actual PMF for the conceptual cross entropy");

  // mcda
  auto* mcda_cmd = app.add_subcommand("mcda", "Sum criterion scores and report eliminated measures");
  std::string mcda_file = std::string(BDIV_DATA_DIR) + "/mcda_table3.json";
  mcda_cmd->add_option("file", mcda_file, "MCDA score table JSON")->capture_default_str();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  std::string data_dir = BDIV_DATA_DIR;
  std::uint64_t seed = 20210614;
  verify_cmd->add_option("--data", data_dir, "Directory with the bundled fixtures")->capture_default_str();
  verify_cmd->add_option("--seed", seed, "Seed for the random property suites")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output out(g.out);
    std::ostream& os = out.stream();

    if (*entropy_cmd) {
      const Pmf p = read_pmf(entropy_pmf);
      Table t{{"n", "H", "H_max"}, {}};
      t.add({static_cast<long>(p.size()), shannon_entropy(p), max_entropy(p.size())});
      write_table(os, t, resolve_format(g, OutputFormat::kPlain), g.precision);
      return 0;
    }

    if (*div_cmd) {
      const DivergenceKind kind = parse_measure(div_measure, measure_param(k, scale));
      const Pmf p = read_pmf(div_p);
      const Pmf q = read_pmf(div_q);
      std::optional<JointPmf> joint;
      if (!div_joint.empty()) joint = read_joint(div_joint);
      const double value = evaluate(kind, p, q, joint ? &*joint : nullptr);
      Table t{{"measure", "value", "upper_bound", "unit"}, {}};
      t.add({measure_name(kind), value, p.size() >= 2 ? upper_bound(kind, p.size()) : 0.0,
             std::string(unit_of(kind).empty() ? "none" : unit_of(kind))});
      write_table(os, t, resolve_format(g, OutputFormat::kPlain), g.precision);
      return 0;
    }

    if (*benefit_cmd) {
      const ProcessStep step(read_pmf(b_input), read_pmf(b_output), read_pmf(b_recon));
      const std::string name = measure_flag.empty() ? "js" : measure_flag;
      const DivergenceKind kind = parse_measure(name, k);
      const double ac = alphabet_compression(step);
      Table t{{"measure", "alphabet_compression", "potential_distortion", "benefit"}, {}};
      if (std::holds_alternative<measure::Kl>(kind)) {
        t.add({measure_name(kind), ac, kl(step.reconstruction(), step.input()), benefit_kl(step)});
      } else {
        t.add({measure_name(kind), ac, bounded_distortion(step, kind), benefit_bounded(step, kind)});
      }
      write_table(os, t, resolve_format(g, OutputFormat::kPlain), g.precision);
      return 0;
    }

    if (*scenario_cmd) {
      const Scenario s = load_scenario(scenario_file);
      const DivergenceKind kind = parse_measure(measure_flag.empty() ? "kl" : measure_flag, measure_param(k, scale));
      Table t{{"scenario", "candidate", "measure", "value"}, {}};
      for (const auto& [label, value] : evaluate_scenario(s, kind)) t.add({s.name(), label, measure_name(kind), value});
      write_table(os, t, resolve_format(g, OutputFormat::kCsv), g.precision);
      return 0;
    }

    if (*sweep_cmd) {
      SweepSpec spec;
      spec.measures.clear();
      std::stringstream names(sweep_measures);
      std::string name;
      while (std::getline(names, name, ',')) {
        if (!name.empty()) spec.measures.push_back(parse_measure(name, measure_param(k, scale)));
      }
      if (!sweep_alphas.empty()) spec.alphas = parse_number_list(sweep_alphas);
      spec.grid = parse_grid(sweep_grid);
      const auto rows = sweep(spec);
      const auto format = resolve_format(g, OutputFormat::kCsv);
      if (format == OutputFormat::kCsv) {
        os << sweep_csv(rows, g.precision);
      } else {
        Table t{{"measure", "alpha", "p1", "q1", "value"}, {}};
        for (const auto& r : rows) t.add({r.measure, r.alpha, r.p1, r.q1, r.value});
        write_table(os, t, format, g.precision);
      }
      return 0;
    }

    if (*huffman_cmd) {
      const Pmf q = read_pmf(huffman_pmf);
      const CodeTable code = huffman_code(q);
      const auto lengths = code.lengths();
      std::optional<std::vector<int>> literal;
      if (q.array().minCoeff() > 0.0) literal = literal_lengths(q);
      const auto format = resolve_format(g, OutputFormat::kPlain);
      if (format == OutputFormat::kPlain) os << code.to_listing();
      Table summary{{"n", "lengths", "average_length", "entropy", "literal_lengths", "literal_average_length"}, {}};
      summary.add({static_cast<long>(q.size()), join_ints(lengths), average_length(lengths, q), shannon_entropy(q),
                   literal ? join_ints(*literal) : std::string("undefined"),
                   literal ? average_length(*literal, q) : std::numeric_limits<double>::quiet_NaN()});
      if (!huffman_true.empty()) {
        const Pmf p = read_pmf(huffman_true);
        summary.columns.insert(summary.columns.end(), {"conceptual_cross_entropy", "conceptual_kl_bound"});
        summary.rows[0].insert(summary.rows[0].end(), {conceptual_cross_entropy(p, q), conceptual_kl_bound(p, q)});
      }
      if (format == OutputFormat::kPlain) {
        write_plain(os, summary, g.precision);
      } else {
        Table letters{{"letter", "probability", "codeword", "length"}, {}};
        for (std::size_t i = 0; i < code.size(); ++i) {
          letters.add({static_cast<long>(i), q[static_cast<Index>(i)], code.codeword(i), static_cast<long>(lengths[i])});
        }
        if (format == OutputFormat::kCsv) {
          write_csv(os, letters, g.precision);
        } else {
          Json doc = Json::object();
          doc["letters"] = to_json(letters, g.precision);
          doc["summary"] = to_json(summary, g.precision).at(0);
          os << doc.dump(2) << '\n';
        }
      }
      return 0;
    }

    if (*mcda_cmd) {
      const McdaResult result = mcda_sum(load_mcda(mcda_file));
      Table t{{"measure", "sum", "status"}, {}};
      for (const auto& [name, sum] : result.totals) {
        std::string status = "kept";
        if (result.eliminated_critical.contains(name)) status = "eliminated_critical";
        if (result.eliminated_by_sum.contains(name)) status = "eliminated_sum";
        t.add({name, static_cast<long>(sum), status});
      }
      write_table(os, t, resolve_format(g, OutputFormat::kCsv), g.precision);
      return 0;
    }

    if (*verify_cmd) {
      const auto results = run_acceptance(data_dir, seed);
      bool all = true;
      for (const auto& r : results) {
        os << format_result(r) << '\n';
        all = all && r.passed;
      }
      os << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
      return all ? 0 : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bdiv::cli

int main(int argc, char** argv) { return bdiv::cli::run(argc, argv); }
