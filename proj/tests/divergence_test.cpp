#include "bdiv/divergence.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bdiv/random_pmf.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace bdiv;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const Pmf& patients() {
  static const Pmf p = make_pmf({0.7, 0.3});
  return p;
}
const Pmf& truth() {
  static const Pmf q = make_pmf({0.99, 0.01});
  return q;
}
const Pmf& one_zero() {
  static const Pmf p = make_pmf({1.0, 0.0});
  return p;
}
const Pmf& zero_one() {
  static const Pmf p = make_pmf({0.0, 1.0});
  return p;
}

std::vector<DivergenceKind> all_pmf_measures() {
  return {measure::Kl{},
          measure::ScaledKl{0.3},
          measure::JensenShannon{},
          measure::NewCommutative{1},
          measure::NewCommutative{2},
          measure::NewNoncommutative{1},
          measure::NewNoncommutative{2},
          measure::Minkowski{1},
          measure::Minkowski{2},
          measure::Minkowski{200}};
}

}  // namespace

TEST(Kl, Examples) {
  EXPECT_NEAR(kl(make_pmf({0.01, 0.99}), truth()), 6.50, 0.01);
  EXPECT_NEAR(kl(patients(), truth()), 1.12, 0.01);
  EXPECT_EQ(kl(patients(), patients()), 0.0);
  EXPECT_EQ(kl(one_zero(), zero_one()), kInf);
  EXPECT_BDIV_ERROR(kl(make_pmf({1.0}), truth()), ErrorCode::kSizeMismatch);
}

TEST(ScaledKl, Examples) {
  EXPECT_NEAR(scaled_kl(make_pmf({0.01, 0.99}), truth(), 0.3), 1.950, 0.01);
  EXPECT_EQ(scaled_kl(truth(), truth(), 0.3), 0.0);
  EXPECT_BDIV_ERROR(scaled_kl(truth(), truth(), 0.0), ErrorCode::kNonpositiveScale);
  EXPECT_BDIV_ERROR(scaled_kl(truth(), truth(), -1.0), ErrorCode::kNonpositiveScale);
}

TEST(JensenShannon, Examples) {
  EXPECT_DOUBLE_EQ(js(one_zero(), zero_one()), 1.0);
  EXPECT_EQ(js(patients(), patients()), 0.0);
  // Value fixed by the independent oracle; both halves against the midpoint.
  EXPECT_NEAR(js(patients(), truth()), 0.14117, 1e-4);
  EXPECT_NEAR(js(patients(), truth()), oracle::js({0.7, 0.3}, {0.99, 0.01}), 1e-12);
}

TEST(NewCommutative, Examples) {
  for (double k : {0.5, 1.0, 2.0, 200.0}) EXPECT_DOUBLE_EQ(d_new(one_zero(), zero_one(), k), 1.0);
  EXPECT_EQ(d_new(patients(), patients(), 2), 0.0);
  EXPECT_NEAR(d_new(patients(), truth(), 2), 0.11646, 1e-4);
  EXPECT_BDIV_ERROR(d_new(patients(), truth(), 0), ErrorCode::kNonpositiveK);
}

TEST(NewNoncommutative, Examples) {
  EXPECT_DOUBLE_EQ(d_ncm(one_zero(), zero_one(), 1), 1.0);
  EXPECT_EQ(d_ncm(patients(), patients(), 1), 0.0);
  const Pmf p = make_pmf({0.7, 0.2, 0.1});
  const Pmf q = make_pmf({0.1, 0.6, 0.3});
  EXPECT_NEAR(d_ncm(p, q, 1), 0.5980, 1e-3);
  EXPECT_NEAR(d_ncm(q, p, 1), 0.4381, 1e-3);
  EXPECT_NEAR(d_ncm(p, q, 1), oracle::d_ncm(p.to_vector(), q.to_vector(), 1), 1e-12);
  EXPECT_BDIV_ERROR(d_ncm(p, q, -2), ErrorCode::kNonpositiveK);
}

TEST(Minkowski, Examples) {
  EXPECT_NEAR(minkowski(one_zero(), zero_one(), 2), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(minkowski(patients(), patients(), 2), 0.0);
  EXPECT_NEAR(minkowski(patients(), truth(), 2), 0.41012, 1e-4);
  EXPECT_NEAR(minkowski(patients(), truth(), 2), std::sqrt(2 * 0.29 * 0.29), 1e-12);
  // Large k converges to the largest gap instead of underflowing to zero.
  EXPECT_NEAR(minkowski(patients(), truth(), 200), 0.29 * std::pow(2.0, 1.0 / 200), 1e-12);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(measure::JensenShannon{}, patients(), patients()), 0.0);
  EXPECT_NEAR(evaluate(measure::Kl{}, make_pmf({0.1, 0.9}), make_pmf({0.9, 0.1})), 2.54, 0.01);
  EXPECT_DOUBLE_EQ(evaluate(measure::NewCommutative{1}, one_zero(), zero_one()), 1.0);
}

TEST(Evaluate, DispatchesToTheNamedMeasure) {
  std::mt19937_64 rng(201);
  for (int t = 0; t < 200; ++t) {
    const Pmf p = random_pmf(rng, 5);
    const Pmf q = random_pmf(rng, 5);
    EXPECT_EQ(evaluate(measure::Kl{}, p, q), kl(p, q));
    EXPECT_EQ(evaluate(measure::ScaledKl{0.3}, p, q), scaled_kl(p, q, 0.3));
    EXPECT_EQ(evaluate(measure::JensenShannon{}, p, q), js(p, q));
    EXPECT_EQ(evaluate(measure::NewCommutative{2}, p, q), d_new(p, q, 2));
    EXPECT_EQ(evaluate(measure::NewNoncommutative{2}, p, q), d_ncm(p, q, 2));
    EXPECT_EQ(evaluate(measure::Minkowski{3}, p, q), minkowski(p, q, 3));
  }
}

TEST(Evaluate, ConditionalEntropyNeedsAConsistentJoint) {
  EXPECT_BDIV_ERROR(evaluate(measure::ConditionalEntropy{}, patients(), truth()), ErrorCode::kMissingJoint);

  const JointPmf j = independent_joint(patients(), truth());
  EXPECT_NEAR(evaluate(measure::ConditionalEntropy{}, patients(), truth(), &j), oracle::entropy({0.7, 0.3}), 1e-12);

  EXPECT_BDIV_ERROR(evaluate(measure::ConditionalEntropy{}, truth(), patients(), &j), ErrorCode::kMarginalMismatch);
  const JointPmf j3 = independent_joint(uniform_pmf(3), uniform_pmf(3));
  EXPECT_BDIV_ERROR(evaluate(measure::ConditionalEntropy{}, patients(), truth(), &j3), ErrorCode::kSizeMismatch);
}

TEST(UpperBound, Examples) {
  EXPECT_EQ(upper_bound(measure::JensenShannon{}, 2), 1.0);
  EXPECT_EQ(upper_bound(measure::JensenShannon{}, 16), 1.0);
  EXPECT_NEAR(upper_bound(measure::Minkowski{2}, 2), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(upper_bound(measure::Kl{}, 2), kInf);
  EXPECT_EQ(upper_bound(measure::ScaledKl{0.3}, 2), kInf);
  EXPECT_EQ(upper_bound(measure::NewCommutative{2}, 5), 1.0);
  EXPECT_EQ(upper_bound(measure::NewNoncommutative{1}, 5), 1.0);
  EXPECT_EQ(upper_bound(measure::ConditionalEntropy{}, 4), 2.0);
  EXPECT_BDIV_ERROR(upper_bound(measure::JensenShannon{}, 1), ErrorCode::kInvalidArgument);
}

TEST(UpperBound, MinkowskiBelowOneDependsOnAlphabetSize) {
  // The flat split of the total gap is attained: p uniform on the even
  // letters, q uniform on the odd ones.
  for (Index n : {2, 4, 8, 16}) {
    VectorX<double> a = VectorX<double>::Zero(n), b = VectorX<double>::Zero(n);
    for (Index i = 0; i < n; ++i) (i % 2 ? b : a)[i] = 2.0 / static_cast<double>(n);
    const double attained = minkowski(make_pmf(a), make_pmf(b), 0.5);
    EXPECT_NEAR(attained, upper_bound(measure::Minkowski{0.5}, n), 1e-12);
    EXPECT_GT(attained, std::pow(2.0, 1.0 / 0.5) - 1e-12);
  }
}

TEST(MeasureNames, RoundTrip) {
  for (const auto& kind : all_pmf_measures()) {
    const std::string name = measure_name(kind);
    EXPECT_EQ(measure_name(parse_measure(name)), name);
  }
  EXPECT_EQ(measure_name(measure::ScaledKl{0.3}), "kl_scaled_0.3");
  EXPECT_EQ(measure_name(measure::NewCommutative{2}), "dnew_k2");
  EXPECT_EQ(measure_name(measure::NewNoncommutative{1}), "dncm_k1");
  EXPECT_EQ(measure_name(measure::Minkowski{200}), "minkowski_k200");
  EXPECT_EQ(measure_name(measure::Minkowski{0.5}), "minkowski_k0.5");
  EXPECT_EQ(measure_name(measure::ConditionalEntropy{}), "cond_entropy");
  EXPECT_EQ(measure_name(parse_measure("dnew", 3.0)), "dnew_k3");
  EXPECT_EQ(measure_name(parse_measure("kl_scaled", 0.25)), "kl_scaled_0.25");
}

TEST(MeasureNames, RejectsUnknownAndInvalid) {
  EXPECT_BDIV_ERROR(parse_measure("hellinger"), ErrorCode::kUnknownMeasure);
  EXPECT_BDIV_ERROR(parse_measure("dnew"), ErrorCode::kUnknownMeasure);
  EXPECT_BDIV_ERROR(parse_measure("dnew_kx"), ErrorCode::kUnknownMeasure);
  EXPECT_BDIV_ERROR(parse_measure("dnew_k0"), ErrorCode::kNonpositiveK);
  EXPECT_BDIV_ERROR(parse_measure("minkowski_k-1"), ErrorCode::kNonpositiveK);
  EXPECT_BDIV_ERROR(parse_measure("kl_scaled_0"), ErrorCode::kNonpositiveScale);
}

TEST(MeasureNames, EntropicFlag) {
  EXPECT_TRUE(is_entropic(measure::JensenShannon{}));
  EXPECT_TRUE(is_entropic(measure::NewNoncommutative{2}));
  EXPECT_FALSE(is_entropic(measure::Minkowski{2}));
  EXPECT_EQ(unit_of(measure::Kl{}), "bits");
  EXPECT_EQ(unit_of(measure::Minkowski{200}), "");
}

class DivergenceProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{202};
  std::uniform_int_distribution<Index> size{2, 16};
  RandomPmfOptions options{.zero_probability = 0.2, .one_hot_probability = 0.05};
};

TEST_F(DivergenceProperties, BoundedMeasuresStayInRange) {
  for (int t = 0; t < 10000; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, options);
    const Pmf q = random_pmf(rng, n, options);
    const double j = js(p, q);
    EXPECT_GE(j, 0.0);
    EXPECT_LE(j, 1.0 + 1e-12);
    for (double k : {1.0, 2.0}) {
      EXPECT_GE(d_new(p, q, k), 0.0);
      EXPECT_LE(d_new(p, q, k), 1.0 + 1e-12);
      EXPECT_GE(d_ncm(p, q, k), 0.0);
      EXPECT_LE(d_ncm(p, q, k), 1.0 + 1e-12);
    }
    for (double k : {0.5, 1.0, 2.0, 200.0}) {
      const double m = minkowski(p, q, k);
      EXPECT_GE(m, 0.0);
      EXPECT_LE(m, upper_bound(measure::Minkowski{k}, n) + 1e-12);
    }
  }
}

TEST_F(DivergenceProperties, AgreeWithOracles) {
  for (int t = 0; t < 2000; ++t) {
    const Index n = size(rng);
    const auto p = random_pmf(rng, n, options).to_vector();
    const auto q = random_pmf(rng, n, options).to_vector();
    const Pmf pp = make_pmf(p), qq = make_pmf(q);
    const double ref_kl = oracle::kl(p, q);
    if (std::isinf(ref_kl)) {
      EXPECT_EQ(kl(pp, qq), kInf);
    } else {
      EXPECT_NEAR(kl(pp, qq), std::max(ref_kl, 0.0), 1e-9);
    }
    EXPECT_NEAR(js(pp, qq), oracle::js(p, q), 1e-12);
    for (double k : {1.0, 2.0, 200.0}) {
      EXPECT_NEAR(d_new(pp, qq, k), oracle::d_new(p, q, k), 1e-12);
      EXPECT_NEAR(d_ncm(pp, qq, k), oracle::d_ncm(p, q, k), 1e-12);
    }
    for (double k : {1.0, 2.0, 3.5}) EXPECT_NEAR(minkowski(pp, qq, k), oracle::minkowski(p, q, k), 1e-12);
  }
}

TEST_F(DivergenceProperties, SymmetryAndAveragingIdentity) {
  for (int t = 0; t < 2000; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, options);
    const Pmf q = random_pmf(rng, n, options);
    EXPECT_EQ(js(p, q), js(q, p));
    for (double k : {0.5, 1.0, 2.0, 200.0}) {
      EXPECT_EQ(d_new(p, q, k), d_new(q, p, k));
      EXPECT_NEAR(d_new(p, q, k), 0.5 * (d_ncm(p, q, k) + d_ncm(q, p, k)), 1e-12);
    }
  }
}

TEST_F(DivergenceProperties, IdentityOfIndiscernibles) {
  for (int t = 0; t < 1000; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, options);
    Pmf q = random_pmf(rng, n, options);
    while ((p.probs() - q.probs()).cwiseAbs().maxCoeff() <= 1e-12) q = random_pmf(rng, n, options);
    for (const auto& kind : all_pmf_measures()) {
      EXPECT_EQ(evaluate(kind, p, p), 0.0) << measure_name(kind);
      EXPECT_GT(evaluate(kind, p, q), 0.0) << measure_name(kind);
    }
  }
}

TEST_F(DivergenceProperties, KlIsInfiniteExactlyOnSupportMismatch) {
  for (int t = 0; t < 2000; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, options);
    const Pmf q = random_pmf(rng, n, options);
    const bool mismatch = ((p.array() > 0) && (q.array() == 0)).any();
    EXPECT_EQ(std::isinf(kl(p, q)), mismatch);
    EXPECT_TRUE(std::isfinite(js(p, q)));
  }
}

TEST_F(DivergenceProperties, BinaryClosedForm) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const double a = unit(rng), b = unit(rng);
    const Pmf p = make_pmf({a, 1 - a});
    const Pmf q = make_pmf({b, 1 - b});
    for (double k : {1.0, 2.0, 200.0}) {
      EXPECT_NEAR(d_new(p, q, k), std::log2(std::pow(std::fabs(a - b), k) + 1), 1e-12);
    }
  }
}
