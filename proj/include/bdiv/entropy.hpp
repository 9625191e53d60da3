#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "bdiv/pmf.hpp"

namespace bdiv {

namespace detail {

/// -x log2 x with the 0 log 0 = 0 convention.
template <typename Scalar>
Scalar neg_xlog2x(Scalar x) {
  return x > Scalar(0) ? -x * std::log2(x) : Scalar(0);
}

/// x log2(x / y) with 0 log(0 / y) = 0 and x log(x / 0) = +inf for x > 0.
template <typename Scalar>
Scalar xlog2_ratio(Scalar x, Scalar y) {
  if (x <= Scalar(0)) return Scalar(0);
  if (y <= Scalar(0)) return std::numeric_limits<Scalar>::infinity();
  return x * std::log2(x / y);
}

}  // namespace detail

/// Shannon entropy in bits.
template <typename Scalar>
Scalar shannon_entropy(const BasicPmf<Scalar>& p) {
  return p.array().unaryExpr([](Scalar x) { return detail::neg_xlog2x(x); }).sum();
}

inline double max_entropy(Index n) {
  if (n < 1) throw Error(ErrorCode::kEmpty, "max entropy needs n >= 1");
  return std::log2(static_cast<double>(n));
}

/// Entropy of a composite alphabet of `count` iid elements.
inline double composite_iid_entropy(double per_element_entropy, Index count) {
  if (!(per_element_entropy >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "per-element entropy must be >= 0");
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "composite alphabet needs at least one element");
  return per_element_entropy * static_cast<double>(count);
}

/// -sum p_i log2 q_i; +inf when some p_i > 0 meets q_i = 0.
template <typename Scalar>
Scalar cross_entropy(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q) {
  require_same_size(p, q);
  Scalar total(0);
  for (Index i = 0; i < p.size(); ++i) {
    if (p[i] <= Scalar(0)) continue;
    if (q[i] <= Scalar(0)) return std::numeric_limits<Scalar>::infinity();
    total -= p[i] * std::log2(q[i]);
  }
  return total;
}

/// I(P;Q) computed from the joint and its own marginals.
template <typename Scalar>
Scalar mutual_information(const BasicJointPmf<Scalar>& joint) {
  const VectorX<Scalar> rows = joint.cells().rowwise().sum();
  const VectorX<Scalar> cols = joint.cells().colwise().sum().transpose();
  Scalar total(0);
  for (Index j = 0; j < joint.size(); ++j) {
    for (Index i = 0; i < joint.size(); ++i) {
      const Scalar r = joint(i, j);
      if (r <= Scalar(0)) continue;
      total += r * std::log2(r / (rows[i] * cols[j]));
    }
  }
  return total;
}

/// H(P|Q) = H(P) - I(P;Q), where P is the first marginal.
template <typename Scalar>
Scalar conditional_entropy(const BasicJointPmf<Scalar>& joint) {
  return shannon_entropy(joint.first_marginal()) - mutual_information(joint);
}

}  // namespace bdiv
