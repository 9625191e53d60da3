#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "bdiv/entropy.hpp"
#include "bdiv/pmf.hpp"

namespace bdiv {

namespace measure {

struct Kl {};
struct ScaledKl {
  double scale;
};
struct JensenShannon {};
/// Commutative log2(|p_i - q_i|^k + 1) divergence.
struct NewCommutative {
  double k;
};
/// Non-commutative variant, weighted by the first PMF only.
struct NewNoncommutative {
  double k;
};
struct Minkowski {
  double k;
};
/// H(P|Q); needs a joint distribution at evaluation time.
struct ConditionalEntropy {};

}  // namespace measure

/// Tagged selector over every supported distortion measure.
using DivergenceKind = std::variant<measure::Kl, measure::ScaledKl, measure::JensenShannon, measure::NewCommutative,
                                    measure::NewNoncommutative, measure::Minkowski, measure::ConditionalEntropy>;

/// Throws NONPOSITIVE_K / NONPOSITIVE_SCALE for bad parameters.
void validate(const DivergenceKind& kind);

/// Stable serialised name: kl, kl_scaled_<scale>, js, dnew_k<k>, dncm_k<k>,
/// minkowski_k<k>, cond_entropy. Numbers use the shortest round-trip form.
std::string measure_name(const DivergenceKind& kind);

/// Inverse of measure_name. Bare "kl_scaled", "dnew", "dncm" and "minkowski"
/// take their parameter from `default_param` when given. Throws UNKNOWN_MEASURE.
DivergenceKind parse_measure(std::string_view name, std::optional<double> default_param = std::nullopt);

/// Entropic measures are reported in bits; Minkowski distances are unitless.
bool is_entropic(const DivergenceKind& kind);
inline std::string_view unit_of(const DivergenceKind& kind) { return is_entropic(kind) ? "bits" : ""; }

/// Largest value the measure can take on an alphabet of n >= 2 letters.
double upper_bound(const DivergenceKind& kind, Index n);

namespace detail {

inline void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw Error(ErrorCode::kNonpositiveK, "power k must be a positive finite real, got " + std::to_string(k));
  }
}

/// log2(|a - b|^k + 1); exact 0 when a == b.
template <typename Scalar>
Scalar log2_power_gap(Scalar a, Scalar b, double k) {
  const Scalar gap = std::abs(a - b);
  if (gap == Scalar(0)) return Scalar(0);
  return std::log2(std::pow(gap, Scalar(k)) + Scalar(1));
}

}  // namespace detail

/// D_KL(P||Q) = sum p_i log2(p_i / q_i). Returns +inf when P puts mass where Q
/// has none.
template <typename Scalar>
Scalar kl(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q) {
  require_same_size(p, q);
  Scalar total(0);
  for (Index i = 0; i < p.size(); ++i) {
    const Scalar term = detail::xlog2_ratio(p[i], q[i]);
    if (std::isinf(term)) return term;
    total += term;
  }
  // Rounding can leave a value a few ulps below zero for p ~ q.
  return std::max(total, Scalar(0));
}

template <typename Scalar>
Scalar scaled_kl(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kNonpositiveScale, "scale must be a positive finite real, got " + std::to_string(scale));
  }
  return Scalar(scale) * kl(p, q);
}

/// Jensen-Shannon divergence against the midpoint M = (P + Q) / 2; always in
/// [0, 1] with base-2 logarithms.
template <typename Scalar>
Scalar js(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q) {
  require_same_size(p, q);
  Scalar total(0);
  for (Index i = 0; i < p.size(); ++i) {
    const Scalar m = (p[i] + q[i]) / Scalar(2);
    total += detail::xlog2_ratio(p[i], m) + detail::xlog2_ratio(q[i], m);
  }
  return std::max(total / Scalar(2), Scalar(0));
}

template <typename Scalar>
Scalar d_new(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q, double k) {
  require_same_size(p, q);
  detail::require_positive_k(k);
  Scalar total(0);
  for (Index i = 0; i < p.size(); ++i) total += (p[i] + q[i]) * detail::log2_power_gap(p[i], q[i], k);
  return total / Scalar(2);
}

template <typename Scalar>
Scalar d_ncm(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q, double k) {
  require_same_size(p, q);
  detail::require_positive_k(k);
  Scalar total(0);
  for (Index i = 0; i < p.size(); ++i) total += p[i] * detail::log2_power_gap(p[i], q[i], k);
  return total;
}

template <typename Scalar>
Scalar minkowski(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q, double k) {
  require_same_size(p, q);
  detail::require_positive_k(k);
  const auto gaps = (p.array() - q.array()).abs();
  const Scalar peak = gaps.maxCoeff();
  if (peak == Scalar(0)) return Scalar(0);
  // Factor out the largest gap so large k (e.g. 200) cannot underflow.
  const Scalar sum = (gaps / peak).pow(Scalar(k)).sum();
  return peak * std::pow(sum, Scalar(1.0 / k));
}

/// Uniform dispatch over DivergenceKind. `joint` is only consulted for
/// ConditionalEntropy, whose marginals must match p and q.
template <typename Scalar>
Scalar evaluate(const DivergenceKind& kind, const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q,
                const BasicJointPmf<Scalar>* joint = nullptr) {
  return std::visit(
      [&](const auto& m) -> Scalar {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, measure::Kl>) {
          return kl(p, q);
        } else if constexpr (std::is_same_v<M, measure::ScaledKl>) {
          return scaled_kl(p, q, m.scale);
        } else if constexpr (std::is_same_v<M, measure::JensenShannon>) {
          return js(p, q);
        } else if constexpr (std::is_same_v<M, measure::NewCommutative>) {
          return d_new(p, q, m.k);
        } else if constexpr (std::is_same_v<M, measure::NewNoncommutative>) {
          return d_ncm(p, q, m.k);
        } else if constexpr (std::is_same_v<M, measure::Minkowski>) {
          return minkowski(p, q, m.k);
        } else {
          if (joint == nullptr) throw Error(ErrorCode::kMissingJoint, "cond_entropy needs a joint distribution");
          require_same_size(p, q);
          if (joint->size() != p.size()) throw Error(ErrorCode::kSizeMismatch, "joint size differs from the pmfs");
          const VectorX<Scalar> rows = joint->cells().rowwise().sum();
          const VectorX<Scalar> cols = joint->cells().colwise().sum().transpose();
          if ((rows - p.probs()).cwiseAbs().maxCoeff() > Scalar(kSumTolerance) ||
              (cols - q.probs()).cwiseAbs().maxCoeff() > Scalar(kSumTolerance)) {
            throw Error(ErrorCode::kMarginalMismatch, "joint marginals do not reproduce the supplied pmfs");
          }
          return conditional_entropy(*joint);
        }
      },
      kind);
}

}  // namespace bdiv
