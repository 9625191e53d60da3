#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "bdiv/divergence.hpp"
#include "bdiv/pmf.hpp"

namespace bdiv {

/// One process in a workflow: input alphabet Z_i, output alphabet Z_{i+1}, and
/// the reconstruction Z'_i of the input inferred from the output.
class ProcessStep {
 public:
  ProcessStep(Pmf input, Pmf output, Pmf reconstruction);

  const Pmf& input() const noexcept { return input_; }
  const Pmf& output() const noexcept { return output_; }
  const Pmf& reconstruction() const noexcept { return reconstruction_; }

 private:
  Pmf input_;
  Pmf output_;
  Pmf reconstruction_;
};

/// H(input) - H(output). Negative when the process raises entropy.
double alphabet_compression(const ProcessStep& step);

/// AC - D_KL(reconstruction || input); -inf when the KL term is singular.
double benefit_kl(const ProcessStep& step);

/// Distortion term of the bounded benefit: H_max(input) * D(reconstruction || input).
/// Only JS, dnew and dncm are accepted; anything else throws UNSUPPORTED_KIND.
double bounded_distortion(const ProcessStep& step, const DivergenceKind& kind);

/// AC - H_max(input) * D(reconstruction || input). Always finite.
double benefit_bounded(const ProcessStep& step, const DivergenceKind& kind);

/// How much a group's knowledge reduces the baseline distortion.
double knowledge_worth(double baseline_pd, double group_pd);

/// A ground-truth PMF and labelled candidate PMFs over the same alphabet.
class Scenario {
 public:
  Scenario(std::string name, Pmf ground_truth, std::vector<std::pair<std::string, Pmf>> candidates);

  const std::string& name() const noexcept { return name_; }
  const Pmf& ground_truth() const noexcept { return ground_truth_; }
  const std::vector<std::pair<std::string, Pmf>>& candidates() const noexcept { return candidates_; }
  const Pmf& candidate(std::string_view label) const;

 private:
  std::string name_;
  Pmf ground_truth_;
  std::vector<std::pair<std::string, Pmf>> candidates_;
};

/// D(candidate || ground_truth) for each candidate, in file order.
std::vector<std::pair<std::string, double>> evaluate_scenario(const Scenario& scenario, const DivergenceKind& kind);

/// JSON: {"name": ..., "ground_truth": [...], "candidates": {"label": [...], ...}}.
/// Candidate order follows the document. Throws PARSE_ERROR or a PMF error.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace bdiv
