#include "bdiv/cost_benefit.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "bdiv/entropy.hpp"
#include "bdiv/json_io.hpp"

namespace bdiv {

ProcessStep::ProcessStep(Pmf input, Pmf output, Pmf reconstruction)
    : input_(std::move(input)), output_(std::move(output)), reconstruction_(std::move(reconstruction)) {
  if (reconstruction_.size() != input_.size()) {
    throw Error(ErrorCode::kSizeMismatch, "reconstruction has " + std::to_string(reconstruction_.size()) +
                                              " letters but input has " + std::to_string(input_.size()));
  }
}

double alphabet_compression(const ProcessStep& step) {
  return shannon_entropy(step.input()) - shannon_entropy(step.output());
}

double benefit_kl(const ProcessStep& step) {
  return alphabet_compression(step) - kl(step.reconstruction(), step.input());
}

double bounded_distortion(const ProcessStep& step, const DivergenceKind& kind) {
  const bool supported = std::holds_alternative<measure::JensenShannon>(kind) ||
                         std::holds_alternative<measure::NewCommutative>(kind) ||
                         std::holds_alternative<measure::NewNoncommutative>(kind);
  if (!supported) {
    throw Error(ErrorCode::kUnsupportedKind,
                "bounded benefit accepts js, dnew or dncm, not " + measure_name(kind));
  }
  // Scaled by the maximum entropy, never by H(input): an input with zero
  // entropy must still register a maximal distortion.
  return max_entropy(step.input().size()) * evaluate(kind, step.reconstruction(), step.input());
}

double benefit_bounded(const ProcessStep& step, const DivergenceKind& kind) {
  return alphabet_compression(step) - bounded_distortion(step, kind);
}

double knowledge_worth(double baseline_pd, double group_pd) {
  if (!std::isfinite(baseline_pd) || !std::isfinite(group_pd)) {
    throw Error(ErrorCode::kInvalidArgument, "knowledge worth needs finite distortions");
  }
  return baseline_pd - group_pd;
}

Scenario::Scenario(std::string name, Pmf ground_truth, std::vector<std::pair<std::string, Pmf>> candidates)
    : name_(std::move(name)), ground_truth_(std::move(ground_truth)), candidates_(std::move(candidates)) {
  for (const auto& [label, pmf] : candidates_) {
    if (pmf.size() != ground_truth_.size()) {
      throw Error(ErrorCode::kSizeMismatch, "candidate '" + label + "' has " + std::to_string(pmf.size()) +
                                                " letters, ground truth has " + std::to_string(ground_truth_.size()));
    }
  }
}

const Pmf& Scenario::candidate(std::string_view label) const {
  for (const auto& [name, pmf] : candidates_) {
    if (name == label) return pmf;
  }
  throw Error(ErrorCode::kInvalidArgument, "scenario has no candidate '" + std::string(label) + "'");
}

std::vector<std::pair<std::string, double>> evaluate_scenario(const Scenario& scenario, const DivergenceKind& kind) {
  std::vector<std::pair<std::string, double>> out;
  out.reserve(scenario.candidates().size());
  for (const auto& [label, pmf] : scenario.candidates()) {
    out.emplace_back(label, evaluate(kind, pmf, scenario.ground_truth()));
  }
  return out;
}

Scenario parse_scenario(const std::string& json_text) {
  const auto doc = parse_json(json_text);
  try {
    std::vector<std::pair<std::string, Pmf>> candidates;
    for (const auto& [label, values] : doc.at("candidates").items()) {
      candidates.emplace_back(label, make_pmf(values.get<std::vector<double>>()));
    }
    return Scenario(doc.at("name").get<std::string>(), make_pmf(doc.at("ground_truth").get<std::vector<double>>()),
                    std::move(candidates));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("scenario: ") + e.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) { return parse_scenario(read_text_file(path)); }

}  // namespace bdiv
