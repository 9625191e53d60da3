#include "bdiv/divergence.hpp"

#include <charconv>
#include <system_error>

#include "bdiv/format.hpp"

namespace bdiv {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::optional<double> parse_number(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
  return value;
}

std::optional<double> suffix_param(std::string_view name, std::string_view prefix) {
  if (!name.starts_with(prefix)) return std::nullopt;
  return parse_number(name.substr(prefix.size()));
}

}  // namespace

void validate(const DivergenceKind& kind) {
  std::visit(Overloaded{
                 [](const measure::ScaledKl& m) {
                   if (!(m.scale > 0.0) || !std::isfinite(m.scale)) {
                     throw Error(ErrorCode::kNonpositiveScale, "scale must be positive, got " + std::to_string(m.scale));
                   }
                 },
                 [](const measure::NewCommutative& m) { detail::require_positive_k(m.k); },
                 [](const measure::NewNoncommutative& m) { detail::require_positive_k(m.k); },
                 [](const measure::Minkowski& m) { detail::require_positive_k(m.k); },
                 [](const auto&) {},
             },
             kind);
}

std::string measure_name(const DivergenceKind& kind) {
  return std::visit(Overloaded{
                        [](const measure::Kl&) -> std::string { return "kl"; },
                        [](const measure::ScaledKl& m) { return "kl_scaled_" + shortest(m.scale); },
                        [](const measure::JensenShannon&) -> std::string { return "js"; },
                        [](const measure::NewCommutative& m) { return "dnew_k" + shortest(m.k); },
                        [](const measure::NewNoncommutative& m) { return "dncm_k" + shortest(m.k); },
                        [](const measure::Minkowski& m) { return "minkowski_k" + shortest(m.k); },
                        [](const measure::ConditionalEntropy&) -> std::string { return "cond_entropy"; },
                    },
                    kind);
}

DivergenceKind parse_measure(std::string_view name, std::optional<double> default_param) {
  const auto with_param = [&](std::string_view prefix, std::string_view bare) -> std::optional<double> {
    if (name == bare) {
      if (!default_param) {
        throw Error(ErrorCode::kUnknownMeasure, "measure '" + std::string(name) + "' needs a parameter");
      }
      return default_param;
    }
    if (name.starts_with(prefix)) {
      auto value = suffix_param(name, prefix);
      if (!value) throw Error(ErrorCode::kUnknownMeasure, "bad parameter in measure '" + std::string(name) + "'");
      return value;
    }
    return std::nullopt;
  };

  DivergenceKind kind;
  if (name == "kl") {
    kind = measure::Kl{};
  } else if (name == "js") {
    kind = measure::JensenShannon{};
  } else if (name == "cond_entropy") {
    kind = measure::ConditionalEntropy{};
  } else if (auto s = with_param("kl_scaled_", "kl_scaled")) {
    kind = measure::ScaledKl{*s};
  } else if (auto k = with_param("dnew_k", "dnew")) {
    kind = measure::NewCommutative{*k};
  } else if (auto k2 = with_param("dncm_k", "dncm")) {
    kind = measure::NewNoncommutative{*k2};
  } else if (auto k3 = with_param("minkowski_k", "minkowski")) {
    kind = measure::Minkowski{*k3};
  } else {
    throw Error(ErrorCode::kUnknownMeasure, "unknown measure '" + std::string(name) + "'");
  }
  validate(kind);
  return kind;
}

bool is_entropic(const DivergenceKind& kind) { return !std::holds_alternative<measure::Minkowski>(kind); }

double upper_bound(const DivergenceKind& kind, Index n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "upper bound needs an alphabet of at least 2 letters");
  validate(kind);
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(Overloaded{
                        [](const measure::Kl&) { return inf; },
                        [](const measure::ScaledKl&) { return inf; },
                        [](const measure::JensenShannon&) { return 1.0; },
                        [](const measure::NewCommutative&) { return 1.0; },
                        [](const measure::NewNoncommutative&) { return 1.0; },
                        [n](const measure::Minkowski& m) {
                          // For k >= 1 the extreme is two disjoint point masses. Below 1 the
                          // sum is concave in each gap, so spreading the total gap of 2 evenly
                          // over all n letters is worse: 2 n^(1/k - 1).
                          if (m.k >= 1.0) return std::pow(2.0, 1.0 / m.k);
                          return 2.0 * std::pow(static_cast<double>(n), 1.0 / m.k - 1.0);
                        },
                        [n](const measure::ConditionalEntropy&) { return std::log2(static_cast<double>(n)); },
                    },
                    kind);
}

}  // namespace bdiv
