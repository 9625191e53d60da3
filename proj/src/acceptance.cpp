#include "bdiv/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "bdiv/analysis.hpp"
#include "bdiv/coding.hpp"
#include "bdiv/cost_benefit.hpp"
#include "bdiv/divergence.hpp"
#include "bdiv/entropy.hpp"
#include "bdiv/random_pmf.hpp"

namespace bdiv {

namespace {

// Collects failed expectations; a criterion passes when none were recorded.
class Checker {
 public:
  void near(const std::string& what, double actual, double expected, double tol) {
    ++checks_;
    if (!(std::abs(actual - expected) <= tol)) {
      fail(what + " = " + format_value(actual, 10) + ", expected " + format_value(expected, 10) + " +/- " +
           format_value(tol, 3));
    }
  }
  void that(const std::string& what, bool ok) {
    ++checks_;
    if (!ok) fail(what);
  }
  void fail(const std::string& message) {
    if (failures_.size() < 5) failures_.push_back(message);
    ++failed_;
  }

  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    if (failed_ == 0) {
      os << checks_ << " checks";
    } else {
      os << failed_ << " of " << checks_ << " checks failed";
      for (const auto& f : failures_) os << "; " << f;
    }
    return os.str();
  }

 private:
  long checks_ = 0;
  long failed_ = 0;
  std::vector<std::string> failures_;
};

using Rng = std::mt19937_64;

constexpr int kRandomPairs = 10'000;
constexpr int kCodingTrials = 1'000;
constexpr double kTableTol = 0.01;

void check_scenario(Checker& c, const std::filesystem::path& file, const std::vector<double>& expected) {
  const Scenario s = load_scenario(file);
  const auto values = evaluate_scenario(s, measure::Kl{});
  c.that(s.name() + " has " + std::to_string(expected.size()) + " candidates", values.size() == expected.size());
  for (std::size_t i = 0; i < std::min(values.size(), expected.size()); ++i) {
    c.near(s.name() + "/" + values[i].first, values[i].second, expected[i], kTableTol);
  }
}

void kl_scenarios_low_noise(Checker& c, const std::filesystem::path& data) {
  check_scenario(c, data / "scenario1.json", {6.50, 0.00, 1.12});
  check_scenario(c, data / "scenario2.json", {13.28, 0.05, 3.11});
}

void kl_scenarios_high_noise(Checker& c, const std::filesystem::path& data) {
  check_scenario(c, data / "scenario3.json", {2.54, 0.06, 2.54});
  check_scenario(c, data / "scenario4.json", {9.94, 1.27, 8.50});
  const Scenario s4 = load_scenario(data / "scenario4.json");
  c.that("scenario4 ground truth is [0.999, 0.001]", s4.ground_truth() == make_pmf({0.999, 0.001}));
}

void knowledge(Checker& c, const std::filesystem::path& data) {
  for (const auto& [file, doctors, patients] :
       {std::tuple{"scenario1.json", 6.50, 5.38}, std::tuple{"scenario2.json", 13.23, 10.17}}) {
    const Scenario s = load_scenario(data / file);
    const double mip = kl(s.candidate("MIP"), s.ground_truth());
    c.near(std::string(file) + " doctors worth", knowledge_worth(mip, kl(s.candidate("doctors"), s.ground_truth())),
           doctors, kTableTol);
    c.near(std::string(file) + " patients worth", knowledge_worth(mip, kl(s.candidate("patients"), s.ground_truth())),
           patients, kTableTol);
  }
}

void coding_examples(Checker& c) {
  const Pmf two = make_pmf({0.999, 0.001});
  const Pmf five = make_pmf({0.45, 0.20, 0.15, 0.15, 0.05});
  const auto h2 = huffman_code(two).lengths();
  const auto h5 = huffman_code(five).lengths();
  const auto l2 = literal_lengths(two);
  const auto l5 = literal_lengths(five);
  c.that("huffman lengths {1,1}", h2 == std::vector<int>{1, 1});
  c.that("huffman lengths {1,3,3,3,3}", h5 == std::vector<int>{1, 3, 3, 3, 3});
  c.that("literal lengths {1,10}", l2 == std::vector<int>{1, 10});
  c.that("literal lengths {2,3,3,3,5}", l5 == std::vector<int>{2, 3, 3, 3, 5});
  c.near("huffman average (2 letters)", average_length(h2, two), 1.0, 5e-4);
  c.near("literal average (2 letters)", average_length(l2, two), 1.009, 1e-3);
  c.near("huffman average (5 letters)", average_length(h5, five), 2.1, 5e-4);
  c.near("literal average (5 letters)", average_length(l5, five), 2.65, 5e-4);
  for (const auto& [name, q, lengths] : {std::tuple{"2-letter", two, h2}, std::tuple{"5-letter", five, h5}}) {
    const double h = shannon_entropy(q);
    const double avg = average_length(lengths, q);
    c.that(std::string(name) + " sandwich H <= avg < H + 1", h <= avg && avg < h + 1.0);
  }
  // Direct evaluation of the 5-letter entropy, and the ordering H < 2.1 < 2.65 < H + 1.
  const double h5v = shannon_entropy(five);
  c.near("H(5-letter)", h5v, 2.0200, 1e-4);
  c.that("ordering H < avg_huffman < avg_literal < H + 1",
         h5v < average_length(h5, five) && average_length(h5, five) < average_length(l5, five) &&
             average_length(l5, five) < h5v + 1.0);
}

void boundedness(Checker& c, Rng& rng) {
  const RandomPmfOptions opts{.zero_probability = 0.25, .one_hot_probability = 0.05};
  std::uniform_int_distribution<Index> size(2, 16);
  constexpr double slack = 1e-12;
  for (int t = 0; t < kRandomPairs; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, opts);
    const Pmf q = random_pmf(rng, n, opts);
    const double j = js(p, q);
    c.that("js in [0,1]", j >= -slack && j <= 1 + slack);
    for (double k : {1.0, 2.0}) {
      const double dn = d_new(p, q, k);
      const double dc = d_ncm(p, q, k);
      c.that("d_new in [0,1]", dn >= -slack && dn <= 1 + slack);
      c.that("d_ncm in [0,1]", dc >= -slack && dc <= 1 + slack);
    }
    for (double k : {1.0, 2.0, 200.0}) {
      const double m = minkowski(p, q, k);
      c.that("minkowski <= 2^(1/k)", m >= 0 && m <= std::pow(2.0, 1.0 / k) + slack);
    }
    std::uniform_int_distribution<Index> out_size(1, 16);
    const ProcessStep step(p, random_pmf(rng, out_size(rng), opts), q);
    for (const DivergenceKind& kind : std::vector<DivergenceKind>{measure::JensenShannon{}, measure::NewCommutative{1},
                                                                  measure::NewCommutative{2},
                                                                  measure::NewNoncommutative{1},
                                                                  measure::NewNoncommutative{2}}) {
      c.that("benefit_bounded finite", std::isfinite(benefit_bounded(step, kind)));
    }
  }
}

void max_length_bounds(Checker& c, Rng& rng) {
  std::uniform_int_distribution<Index> size(2, 12);
  for (int t = 0; t < kCodingTrials; ++t) {
    const Index n = size(rng);
    const Pmf q = random_pmf(rng, n);
    const Pmf p = random_pmf(rng, n, {.zero_probability = 0.3});
    const auto code = huffman_code(q);
    const double bound = static_cast<double>(n - 1);
    c.that("max huffman length <= n-1", code.max_length() <= n - 1);
    c.that("conceptual cross entropy <= n-1", conceptual_cross_entropy(p, q) <= bound + 1e-12);
    // Worst case: all mass on the letter with the longest codeword.
    const auto lengths = code.lengths();
    const auto longest = std::max_element(lengths.begin(), lengths.end()) - lengths.begin();
    VectorX<double> point = VectorX<double>::Zero(n);
    point[longest] = 1.0;
    c.that("worst-case conceptual cross entropy <= n-1", conceptual_cross_entropy(Pmf(point), q) <= bound + 1e-12);
  }
  for (int n = 3; n <= 8; ++n) {
    const Pmf q = dyadic_epsilon_pmf(n, std::ldexp(1.0, -(n - 1)) / 2.0);
    c.that("dyadic family n=" + std::to_string(n) + " reaches n-1", huffman_code(q).max_length() == n - 1);
  }
}

void averaging(Checker& c, Rng& rng) {
  const RandomPmfOptions opts{.zero_probability = 0.25, .one_hot_probability = 0.05};
  std::uniform_int_distribution<Index> size(2, 16);
  for (int t = 0; t < kRandomPairs; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, opts);
    const Pmf q = random_pmf(rng, n, opts);
    for (double k : {1.0, 2.0}) {
      c.near("averaging identity", d_new(p, q, k), 0.5 * (d_ncm(p, q, k) + d_ncm(q, p, k)), 1e-12);
    }
  }
}

void sweep_shape_checks(Checker& c) {
  const std::vector<DivergenceKind> measures{measure::Kl{},
                                             measure::ScaledKl{0.3},
                                             measure::JensenShannon{},
                                             measure::NewCommutative{1},
                                             measure::NewCommutative{2},
                                             measure::NewNoncommutative{1},
                                             measure::NewNoncommutative{2},
                                             measure::Minkowski{2},
                                             measure::Minkowski{200}};
  SweepSpec spec;
  spec.measures = measures;
  const auto rows = sweep(spec);
  const std::size_t expected = measures.size() * spec.alphas.size() * grid_points(spec.grid).size();
  c.that("sweep row count " + std::to_string(rows.size()) + " == " + std::to_string(expected), rows.size() == expected);
  for (const auto& r : rows) {
    if (r.alpha == 0.0) c.that(r.measure + " is 0 at alpha=0", r.value == 0.0);
  }
  c.near("KL crossing at alpha=1", find_crossing(measure::Kl{}, 1.0, 1.0), 0.2228, 1e-3);

  SweepSpec js_spec{.alphas = {1.0}, .grid = LinearGrid{0.0, 1.0, 0.5}, .measures = {measure::JensenShannon{}}};
  const auto js_rows = sweep(js_spec);
  c.that("js sweep at alpha=1 has 3 rows", js_rows.size() == 3);
  if (js_rows.size() == 3) c.near("js(alpha=1, p1=0)", js_rows[0].value, 1.0, 1e-12);
  const double tiny = 1e-12;
  c.near("js(alpha=1, p1=1e-12)", js(make_pmf({tiny, 1 - tiny}), make_pmf({1 - tiny, tiny})), 1.0, 1e-9);
}

void legend_paradox(Checker& c) {
  const ProcessStep step(make_pmf({1.0, 0.0}), make_pmf({1.0, 0.0}), make_pmf({0.0, 1.0}));
  for (const DivergenceKind& kind : std::vector<DivergenceKind>{measure::JensenShannon{}, measure::NewCommutative{1},
                                                                measure::NewCommutative{2},
                                                                measure::NewNoncommutative{1},
                                                                measure::NewNoncommutative{2}}) {
    c.near(measure_name(kind) + " distortion term", bounded_distortion(step, kind), 1.0, 1e-12);
  }
}

void mcda(Checker& c, const std::filesystem::path& data) {
  const auto result = mcda_sum(load_mcda(data / "mcda_table3.json"));
  const std::vector<std::pair<std::string, int>> expected{{"js", 24},      {"cond_entropy", 14},  {"dnew_k1", 20},
                                                          {"dnew_k2", 24}, {"dncm_k1", 20},       {"dncm_k2", 24},
                                                          {"minkowski_k2", 14}, {"minkowski_k200", 15}};
  for (const auto& [name, sum] : expected) {
    c.that(name + " sum " + std::to_string(sum), result.total(name) == sum);
  }
  c.that("eliminated by sum = {cond_entropy, minkowski_k2, minkowski_k200}",
         result.eliminated_by_sum == std::set<std::string>{"cond_entropy", "minkowski_k2", "minkowski_k200"});
  c.that("kl_scaled_0.3 eliminated at the critical criterion",
         result.eliminated_critical == std::set<std::string>{"kl_scaled_0.3"});
}

void sigma(Checker& c) {
  c.near("sigma for bound 10/3", clamp_sigma_for_bound(10.0 / 3.0), 0.0655, 1e-3);
  c.near("sigma for bound 1", clamp_sigma_for_bound(1.0), 0.2228, 1e-3);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::filesystem::path& data_dir, std::uint64_t seed) {
  Rng rng(seed);
  struct Entry {
    int id;
    std::string title;
    double time_limit;  // seconds; 0 means none
    std::function<void(Checker&)> body;
  };
  const std::vector<Entry> entries{
      {1, "KL distortions, scenarios 1-2", 1.0, [&](Checker& c) { kl_scenarios_low_noise(c, data_dir); }},
      {2, "KL distortions, scenarios 3-4", 1.0, [&](Checker& c) { kl_scenarios_high_noise(c, data_dir); }},
      {3, "knowledge-worth values", 0.0, [&](Checker& c) { knowledge(c, data_dir); }},
      {4, "Huffman and literal coding examples", 0.0, coding_examples},
      {5, "boundedness over random PMF pairs", 30.0, [&](Checker& c) { boundedness(c, rng); }},
      {6, "Huffman length and conceptual cross-entropy bound n-1", 0.0, [&](Checker& c) { max_length_bounds(c, rng); }},
      {7, "d_new averaging identity", 0.0, [&](Checker& c) { averaging(c, rng); }},
      {8, "binary sweep qualitative checks", 0.0, sweep_shape_checks},
      {9, "legend paradox distortion term", 0.0, legend_paradox},
      {10, "MCDA sums and elimination", 0.0, [&](Checker& c) { mcda(c, data_dir); }},
      {11, "clamp sigma for bound", 0.0, sigma},
  };

  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.body(checker);
    } catch (const std::exception& ex) {
      checker.fail(std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (e.time_limit > 0.0 && seconds >= e.time_limit) {
      checker.fail("runtime " + format_value(seconds, 3) + "s exceeds " + format_value(e.time_limit, 3) + "s");
    }
    results.push_back({e.id, e.title, checker.passed(), checker.summary(), seconds});
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << (r.id < 10 ? "  " : " ") << r.title << "  (" << r.detail << ", "
     << format_value(r.seconds, 3) << "s)";
  return os.str();
}

}  // namespace bdiv
