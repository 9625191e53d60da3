#include "bdiv/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "bdiv/json_io.hpp"

namespace bdiv {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

Pmf binary_pmf(double first) { return make_pmf({first, 1.0 - first}); }

}  // namespace

Grid parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 1 && parts.size() != 4) {
    throw Error(ErrorCode::kParse, "grid must be 'linear[:lo:hi:step]' or 'log[:lo:hi:points_per_decade]'");
  }
  if (parts[0] == "linear") {
    if (parts.size() == 1) return LinearGrid{};
    return LinearGrid{to_double(parts[1]), to_double(parts[2]), to_double(parts[3])};
  }
  if (parts[0] == "log") {
    if (parts.size() == 1) return LogGrid{};
    return LogGrid{to_double(parts[1]), to_double(parts[2]), to_double(parts[3])};
  }
  throw Error(ErrorCode::kParse, "unknown grid kind '" + std::string(parts[0]) + "'");
}

std::vector<double> grid_points(const Grid& grid) {
  std::vector<double> points;
  if (const auto* lin = std::get_if<LinearGrid>(&grid)) {
    if (!(lin->lo >= 0.0 && lin->lo <= lin->hi && lin->hi <= 1.0 && lin->step > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "linear grid needs 0 <= lo <= hi <= 1 and step > 0");
    }
    const auto intervals = static_cast<long>(std::floor((lin->hi - lin->lo) / lin->step + 1e-9));
    const bool even = std::abs(lin->lo + static_cast<double>(intervals) * lin->step - lin->hi) < 1e-9;
    points.reserve(static_cast<std::size_t>(intervals + 1));
    for (long i = 0; i <= intervals; ++i) {
      // Interpolating between exact endpoints keeps values like 0.3 correctly rounded.
      const double x = even && intervals > 0
                           ? (lin->lo * static_cast<double>(intervals - i) + lin->hi * static_cast<double>(i)) /
                                 static_cast<double>(intervals)
                           : lin->lo + static_cast<double>(i) * lin->step;
      points.push_back(std::min(x, lin->hi));
    }
    return points;
  }
  const auto& log = std::get<LogGrid>(grid);
  if (!(log.lo > 0.0 && log.lo < log.hi && log.hi <= 1.0 && log.points_per_decade > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "log grid needs 0 < lo < hi <= 1 and points_per_decade > 0");
  }
  const double lo = std::log10(log.lo);
  const double hi = std::log10(log.hi);
  const auto count = std::max<long>(2, std::lround((hi - lo) * log.points_per_decade) + 1);
  points.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    points.push_back(std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1)));
  }
  points.front() = log.lo;
  points.back() = log.hi;
  return points;
}

std::vector<double> default_alphas() {
  std::vector<double> alphas;
  for (int i = 0; i <= 10; ++i) alphas.push_back(i / 10.0);
  return alphas;
}

void validate(const SweepSpec& spec) {
  for (double a : spec.alphas) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "alpha outside [0, 1]: " + shortest(a));
  }
  if (grid_points(spec.grid).empty()) throw Error(ErrorCode::kInvalidArgument, "sweep grid is empty");
  for (const auto& kind : spec.measures) {
    validate(kind);
    if (std::holds_alternative<measure::ConditionalEntropy>(kind)) {
      throw Error(ErrorCode::kMissingJoint, "cond_entropy cannot be swept: the sweep defines no joint distribution");
    }
  }
}

double mix_q1(double p1, double alpha) { return std::clamp((1.0 - alpha) * p1 + alpha * (1.0 - p1), 0.0, 1.0); }

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  validate(spec);
  const auto points = grid_points(spec.grid);
  std::vector<double> alphas = spec.alphas;
  std::sort(alphas.begin(), alphas.end());

  std::vector<SweepRow> rows;
  rows.reserve(spec.measures.size() * alphas.size() * points.size());
  for (const auto& kind : spec.measures) {
    const std::string name = measure_name(kind);
    for (double alpha : alphas) {
      for (double p1 : points) {
        const double q1 = mix_q1(p1, alpha);
        rows.push_back({name, alpha, p1, q1, evaluate(kind, binary_pmf(p1), binary_pmf(q1))});
      }
    }
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows, int precision) {
  std::ostringstream os;
  os << "measure,alpha,p1,q1,value\n";
  for (const auto& r : rows) {
    os << r.measure << ',' << format_value(r.alpha, precision) << ',' << format_value(r.p1, precision) << ','
       << format_value(r.q1, precision) << ',' << format_value(r.value, precision) << '\n';
  }
  return os.str();
}

double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi, double target, double tol) {
  if (!(f(lo) > target)) {
    throw Error(ErrorCode::kNoCrossing, "value at the lower end does not exceed " + shortest(target));
  }
  if (f(hi) > target) return hi;
  double mid = lo;
  for (int iter = 0; iter < 4096; ++iter) {
    mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    const double value = f(mid);
    if (std::abs(value - target) < tol) break;
    (value > target ? lo : hi) = mid;
  }
  return mid;
}

double find_crossing(const DivergenceKind& kind, double alpha, double threshold) {
  validate(kind);
  if (!(threshold > 0.0)) throw Error(ErrorCode::kInvalidArgument, "threshold must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "alpha outside [0, 1]");
  const auto value = [&](double p1) { return evaluate(kind, binary_pmf(p1), binary_pmf(mix_q1(p1, alpha))); };
  // The open end near 0 is probed at 1e-300 so measures that only reach the
  // threshold at p1 = 0 report NO_CROSSING.
  return bisect_decreasing(value, 1e-300, 0.5, threshold);
}

double clamped_worst_case_kl(double sigma) { return (1.0 - 2.0 * sigma) * std::log2((1.0 - sigma) / sigma); }

double clamp_sigma_for_bound(double bound) {
  if (!(bound > 0.0)) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  constexpr double lo = std::numeric_limits<double>::denorm_min();
  // Beyond ~1074 bits no positive double is small enough; report the smallest one.
  if (!(clamped_worst_case_kl(lo) > bound)) return lo;
  return bisect_decreasing(clamped_worst_case_kl, lo, 0.5, bound);
}

void validate(const McdaTable& table) {
  for (const auto& [measure, scores] : table.scores) {
    if (scores.size() != table.criteria.size()) {
      throw Error(ErrorCode::kInvalidArgument, "measure '" + measure + "' has " + std::to_string(scores.size()) +
                                                   " scores for " + std::to_string(table.criteria.size()) +
                                                   " criteria");
    }
    for (int s : scores) {
      if (s < 0 || s > 5) {
        throw Error(ErrorCode::kInvalidArgument, "score " + std::to_string(s) + " for '" + measure + "' outside [0, 5]");
      }
    }
  }
}

std::set<std::string> McdaResult::eliminated() const {
  std::set<std::string> all = eliminated_critical;
  all.insert(eliminated_by_sum.begin(), eliminated_by_sum.end());
  return all;
}

int McdaResult::total(std::string_view measure) const {
  for (const auto& [name, sum] : totals) {
    if (name == measure) return sum;
  }
  throw Error(ErrorCode::kInvalidArgument, "no measure '" + std::string(measure) + "' in the table");
}

McdaResult mcda_sum(const McdaTable& table) {
  validate(table);
  McdaResult result;
  for (const auto& [measure, scores] : table.scores) {
    int sum = 0;
    bool critical_fail = false;
    for (std::size_t c = 0; c < scores.size(); ++c) {
      sum += scores[c];
      if (table.criteria[c].importance == "critical" && scores[c] == 0) critical_fail = true;
    }
    result.totals.emplace_back(measure, sum);
    if (critical_fail) result.eliminated_critical.insert(measure);
  }

  std::vector<std::pair<std::string, int>> survivors;
  for (const auto& entry : result.totals) {
    if (!result.eliminated_critical.contains(entry.first)) survivors.push_back(entry);
  }

  if (table.min_sum) {
    for (const auto& [measure, sum] : survivors) {
      if (sum < *table.min_sum) result.eliminated_by_sum.insert(measure);
    }
    return result;
  }

  std::vector<int> sums;
  for (const auto& entry : survivors) sums.push_back(entry.second);
  std::sort(sums.begin(), sums.end(), std::greater<>());
  int widest = 0;
  int cut = 0;
  for (std::size_t i = 1; i < sums.size(); ++i) {
    const int gap = sums[i - 1] - sums[i];
    // ">=" keeps the lowest split among equally wide gaps.
    if (gap > 0 && gap >= widest) {
      widest = gap;
      cut = sums[i];
    }
  }
  if (widest >= kMinEliminationGap) {
    for (const auto& [measure, sum] : survivors) {
      if (sum <= cut) result.eliminated_by_sum.insert(measure);
    }
  }
  return result;
}

McdaTable parse_mcda(const std::string& json_text) {
  const auto doc = parse_json(json_text);
  McdaTable table;
  try {
    for (const auto& c : doc.at("criteria")) {
      table.criteria.push_back({c.at("name").get<std::string>(), c.at("importance").get<std::string>()});
    }
    for (const auto& [measure, scores] : doc.at("scores").items()) {
      table.scores.emplace_back(measure, scores.get<std::vector<int>>());
    }
    if (doc.contains("min_sum")) table.min_sum = doc.at("min_sum").get<int>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("mcda table: ") + e.what());
  }
  validate(table);
  return table;
}

McdaTable load_mcda(const std::filesystem::path& path) { return parse_mcda(read_text_file(path)); }

}  // namespace bdiv
