#pragma once

#include <cmath>
#include <initializer_list>
#include <span>
#include <sstream>
#include <vector>

#include <Eigen/Dense>

#include "bdiv/error.hpp"

namespace bdiv {

/// A column vector of dynamic size, templated on scalar type.
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A dense matrix of dynamic size, templated on scalar type.
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;

/// Absolute tolerance on the total mass of a PMF or joint distribution.
inline constexpr double kSumTolerance = 1e-9;

namespace detail {

template <typename Derived>
void validate_probabilities(const Eigen::DenseBase<Derived>& values, const char* what) {
  using Scalar = typename Derived::Scalar;
  if (values.size() == 0) throw Error(ErrorCode::kEmpty, std::string(what) + " has no entries");
  Scalar total(0);
  for (Index i = 0; i < values.size(); ++i) {
    const Scalar v = values.derived().data()[i];
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kNonFiniteEntry, std::string(what) + " entry " + std::to_string(i) + " is not finite");
    }
    if (v < Scalar(0)) {
      std::ostringstream os;
      os << what << " entry " << i << " = " << v << " is negative";
      throw Error(ErrorCode::kNegativeEntry, os.str());
    }
    total += v;
  }
  if (std::abs(total - Scalar(1)) > Scalar(kSumTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << what << " sums to " << total << ", expected 1 within " << kSumTolerance;
    throw Error(ErrorCode::kSumNotOne, os.str());
  }
  // With non-negative entries summing to 1, no entry can exceed 1 + tolerance.
}

}  // namespace detail

/// A validated probability mass function over an implicit alphabet of n >= 1
/// letters. Zero entries are legal; singular behaviour is a property of the
/// measures, not of the distribution.
template <typename Scalar = double>
class BasicPmf {
 public:
  using scalar_type = Scalar;

  /// Validates and takes ownership of `probs`.
  explicit BasicPmf(VectorX<Scalar> probs) : probs_(std::move(probs)) {
    detail::validate_probabilities(probs_, "pmf");
  }

  Index size() const noexcept { return probs_.size(); }
  Scalar operator[](Index i) const { return probs_[i]; }
  const VectorX<Scalar>& probs() const noexcept { return probs_; }
  auto array() const { return probs_.array(); }

  std::vector<Scalar> to_vector() const { return {probs_.data(), probs_.data() + probs_.size()}; }

  friend bool operator==(const BasicPmf& a, const BasicPmf& b) {
    return a.probs_.size() == b.probs_.size() && a.probs_ == b.probs_;
  }

 private:
  VectorX<Scalar> probs_;
};

using Pmf = BasicPmf<double>;

/// Joint distribution r(i, j) over letter pairs. Rows index letters under the
/// first distribution, columns under the second.
template <typename Scalar = double>
class BasicJointPmf {
 public:
  using scalar_type = Scalar;

  explicit BasicJointPmf(MatrixX<Scalar> cells) : cells_(std::move(cells)) {
    if (cells_.rows() != cells_.cols()) {
      throw Error(ErrorCode::kSizeMismatch, "joint pmf must be square, got " + std::to_string(cells_.rows()) + "x" +
                                                std::to_string(cells_.cols()));
    }
    detail::validate_probabilities(cells_, "joint pmf");
  }

  Index size() const noexcept { return cells_.rows(); }
  Scalar operator()(Index i, Index j) const { return cells_(i, j); }
  const MatrixX<Scalar>& cells() const noexcept { return cells_; }

  /// Row sums.
  BasicPmf<Scalar> first_marginal() const { return BasicPmf<Scalar>(cells_.rowwise().sum()); }
  BasicPmf<Scalar> second_marginal() const { return BasicPmf<Scalar>(cells_.colwise().sum().transpose()); }

 private:
  MatrixX<Scalar> cells_;
};

using JointPmf = BasicJointPmf<double>;

/// Clip-then-renormalise policy: entries below sigma rise to sigma, entries
/// above 1 - sigma drop to 1 - sigma, and the result is rescaled to sum 1.
struct ClampPolicy {
  double sigma = 0.0;

  explicit ClampPolicy(double s) : sigma(s) {
    if (!(s >= 0.0 && s < 0.5)) {
      throw Error(ErrorCode::kInvalidSigma, "sigma must lie in [0, 0.5), got " + std::to_string(s));
    }
  }
};

template <typename Scalar = double>
BasicPmf<Scalar> make_pmf(std::span<const Scalar> values) {
  VectorX<Scalar> v(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v[static_cast<Index>(i)] = values[i];
  return BasicPmf<Scalar>(std::move(v));
}

inline Pmf make_pmf(std::initializer_list<double> values) {
  return make_pmf<double>(std::span<const double>(values.begin(), values.size()));
}

inline Pmf make_pmf(const std::vector<double>& values) { return make_pmf<double>(std::span<const double>(values)); }

template <typename Derived>
BasicPmf<typename Derived::Scalar> make_pmf(const Eigen::MatrixBase<Derived>& values) {
  return BasicPmf<typename Derived::Scalar>(values.eval());
}

template <typename Scalar = double>
BasicPmf<Scalar> uniform_pmf(Index n) {
  if (n < 1) throw Error(ErrorCode::kEmpty, "uniform pmf needs n >= 1");
  return BasicPmf<Scalar>(VectorX<Scalar>::Constant(n, Scalar(1) / Scalar(n)));
}

template <typename Scalar>
BasicPmf<Scalar> clamp_pmf(const BasicPmf<Scalar>& p, const ClampPolicy& policy) {
  const Scalar lo(policy.sigma);
  const Scalar hi = Scalar(1) - lo;
  VectorX<Scalar> clipped = p.probs().cwiseMax(lo).cwiseMin(hi);
  clipped /= clipped.sum();
  return BasicPmf<Scalar>(std::move(clipped));
}

/// r(i, j) = p_i * q_j.
template <typename Scalar>
BasicJointPmf<Scalar> independent_joint(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "independent joint needs equal sizes, got " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
  }
  return BasicJointPmf<Scalar>(p.probs() * q.probs().transpose());
}

template <typename Scalar>
void require_same_size(const BasicPmf<Scalar>& p, const BasicPmf<Scalar>& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "alphabet sizes differ: " + std::to_string(p.size()) + " vs " + std::to_string(q.size()));
  }
}

}  // namespace bdiv
