#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bdiv/divergence.hpp"
#include "bdiv/format.hpp"

namespace bdiv {

// ---------------------------------------------------------------------------
// Sweeps over binary PMFs P = {p1, 1 - p1}, Q = {q1, 1 - q1} with
// q1 = (1 - alpha) p1 + alpha (1 - p1).
// ---------------------------------------------------------------------------

struct LinearGrid {
  double lo = 0.0;
  double hi = 1.0;
  double step = 0.001;
};

/// Log-spaced grid; the default spans [1e-10, 0.1] with 200 points.
struct LogGrid {
  double lo = 1e-10;
  double hi = 0.1;
  double points_per_decade = 199.0 / 9.0;
};

using Grid = std::variant<LinearGrid, LogGrid>;

/// "linear[:lo:hi:step]" or "log[:lo:hi:points_per_decade]". Throws PARSE_ERROR.
Grid parse_grid(std::string_view text);

/// Ascending p1 values of a grid. Throws INVALID_ARGUMENT for an invalid grid.
std::vector<double> grid_points(const Grid& grid);

/// 0.0, 0.1, ..., 1.0.
std::vector<double> default_alphas();

struct SweepSpec {
  std::vector<double> alphas = default_alphas();
  Grid grid = LinearGrid{};
  std::vector<DivergenceKind> measures;
};

void validate(const SweepSpec& spec);

/// q1 for a given p1 and alpha, kept inside [0, 1].
double mix_q1(double p1, double alpha);

struct SweepRow {
  std::string measure;
  double alpha;
  double p1;
  double q1;
  double value;
};

/// Rows ordered by measure (as listed in the spec), then ascending alpha, then
/// ascending p1. Singular KL points carry +inf.
std::vector<SweepRow> sweep(const SweepSpec& spec);

/// Exact header `measure,alpha,p1,q1,value`; unbounded values print as `inf`.
std::string sweep_csv(std::span<const SweepRow> rows, int precision = kDefaultPrecision);

/// Bisection for a decreasing `f` on [lo, hi]: returns x with f(x) ~ target,
/// f > target to its left. Stops when |f(x) - target| < tol or the bracket
/// cannot shrink further. Throws NO_CROSSING if f(lo) <= target.
double bisect_decreasing(const std::function<double(double)>& f, double lo, double hi, double target,
                         double tol = 1e-9);

/// p1 in (0, 0.5] below which measure(P, Q) exceeds `threshold` at the given
/// alpha. Requires the measure to be decreasing in p1 on that segment.
double find_crossing(const DivergenceKind& kind, double alpha, double threshold);

/// Worst-case binary KL once every entry is clamped into [sigma, 1 - sigma].
double clamped_worst_case_kl(double sigma);

/// sigma in (0, 0.5) with clamped_worst_case_kl(sigma) == bound.
double clamp_sigma_for_bound(double bound);

// ---------------------------------------------------------------------------
// Multi-criteria decision analysis with ordinal scores in [0, 5].
// ---------------------------------------------------------------------------

struct Criterion {
  std::string name;
  /// "critical" criteria eliminate any measure that scores 0 on them.
  std::string importance;
};

struct McdaTable {
  std::vector<Criterion> criteria;
  /// Per measure, one score per criterion, in table order.
  std::vector<std::pair<std::string, std::vector<int>>> scores;
  /// Explicit sum cut-off; when absent the largest-gap rule applies.
  std::optional<int> min_sum;
};

/// Minimum separation between score sums for the largest-gap rule to eliminate.
inline constexpr int kMinEliminationGap = 2;

void validate(const McdaTable& table);

struct McdaResult {
  std::vector<std::pair<std::string, int>> totals;
  /// Zero score on a critical criterion.
  std::set<std::string> eliminated_critical;
  /// Dropped by the sum rule among the measures that survived the critical stage.
  std::set<std::string> eliminated_by_sum;

  std::set<std::string> eliminated() const;
  int total(std::string_view measure) const;
};

/// Unweighted per-measure sums plus the elimination sets. Without `min_sum`,
/// survivors' sums are sorted and split at the widest gap, provided that gap is
/// at least kMinEliminationGap; the lower side is eliminated.
McdaResult mcda_sum(const McdaTable& table);

/// JSON: {"criteria": [{"name", "importance"}], "scores": {"measure": [ints]},
/// optional "min_sum": int}.
McdaTable parse_mcda(const std::string& json_text);
McdaTable load_mcda(const std::filesystem::path& path);

}  // namespace bdiv
