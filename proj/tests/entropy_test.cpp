#include "bdiv/entropy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bdiv/divergence.hpp"
#include "bdiv/random_pmf.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace bdiv;

namespace {

JointPmf joint(std::initializer_list<std::initializer_list<double>> rows) {
  MatrixX<double> m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return JointPmf(m);
}

std::vector<oracle::Vec> rows_of(const JointPmf& j) {
  std::vector<oracle::Vec> r(static_cast<std::size_t>(j.size()), oracle::Vec(static_cast<std::size_t>(j.size())));
  for (Index a = 0; a < j.size(); ++a) {
    for (Index b = 0; b < j.size(); ++b) r[a][b] = j(a, b);
  }
  return r;
}

}  // namespace

TEST(ShannonEntropy, Examples) {
  EXPECT_DOUBLE_EQ(shannon_entropy(uniform_pmf(256)), 8.0);
  EXPECT_EQ(shannon_entropy(make_pmf({1.0, 0.0})), 0.0);
  EXPECT_NEAR(shannon_entropy(make_pmf({0.999, 0.001})), 0.0114, 1e-4);
  EXPECT_NEAR(shannon_entropy(make_pmf({0.999, 0.001})), 0.011407757737461138, 1e-15);
}

TEST(ShannonEntropy, WorksForOtherScalars) {
  EXPECT_NEAR(shannon_entropy(uniform_pmf<float>(8)), 3.0f, 1e-6f);
  EXPECT_NEAR(static_cast<double>(shannon_entropy(uniform_pmf<long double>(1024))), 10.0, 1e-15);
}

TEST(MaxEntropy, Examples) {
  EXPECT_EQ(max_entropy(2), 1.0);
  EXPECT_EQ(max_entropy(256), 8.0);
  EXPECT_EQ(max_entropy(1), 0.0);
  EXPECT_BDIV_ERROR(max_entropy(0), ErrorCode::kEmpty);
}

TEST(CompositeIidEntropy, Examples) {
  EXPECT_EQ(composite_iid_entropy(8.0, 30), 240.0);
  EXPECT_EQ(composite_iid_entropy(0.0, 17), 0.0);
  EXPECT_EQ(composite_iid_entropy(1.5, 4), 6.0);
}

TEST(CrossEntropy, Examples) {
  EXPECT_DOUBLE_EQ(cross_entropy(make_pmf({0.5, 0.5}), make_pmf({0.5, 0.5})), 1.0);
  EXPECT_DOUBLE_EQ(cross_entropy(make_pmf({1.0, 0.0}), make_pmf({0.5, 0.5})), 1.0);
  const double singular = cross_entropy(make_pmf({1.0, 0.0}), make_pmf({0.0, 1.0}));
  EXPECT_TRUE(std::isinf(singular) && singular > 0);
  EXPECT_BDIV_ERROR(cross_entropy(make_pmf({1.0}), make_pmf({0.5, 0.5})), ErrorCode::kSizeMismatch);
}

TEST(MutualInformation, Examples) {
  EXPECT_NEAR(mutual_information(independent_joint(make_pmf({0.7, 0.3}), make_pmf({0.99, 0.01}))), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information(joint({{0.5, 0.0}, {0.0, 0.5}})), 1.0, 1e-12);
  const JointPmf correlated = joint({{0.4, 0.1}, {0.1, 0.4}});
  EXPECT_NEAR(mutual_information(correlated), 0.2781, 1e-3);
  EXPECT_NEAR(mutual_information(correlated), oracle::mutual_information(rows_of(correlated)), 1e-12);
}

TEST(ConditionalEntropy, Examples) {
  const Pmf p = make_pmf({0.7, 0.3});
  EXPECT_NEAR(conditional_entropy(independent_joint(p, make_pmf({0.2, 0.8}))), 0.8813, 1e-3);
  EXPECT_NEAR(conditional_entropy(independent_joint(p, make_pmf({0.2, 0.8}))), oracle::entropy({0.7, 0.3}), 1e-12);
  EXPECT_NEAR(conditional_entropy(joint({{0.5, 0.0}, {0.0, 0.5}})), 0.0, 1e-12);
  EXPECT_NEAR(conditional_entropy(joint({{0.4, 0.1}, {0.1, 0.4}})), 0.7219, 1e-3);
}

TEST(EntropyProperties, BoundedByMaxEntropy) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<Index> size(1, 16);
  for (int t = 0; t < 2000; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, {.zero_probability = 0.2, .one_hot_probability = 0.05});
    const double h = shannon_entropy(p);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, max_entropy(n) + 1e-12);
    EXPECT_NEAR(h, oracle::entropy(p.to_vector()), 1e-12);
  }
}

TEST(EntropyProperties, CrossEntropyDecomposesIntoEntropyPlusKl) {
  std::mt19937_64 rng(102);
  std::uniform_int_distribution<Index> size(1, 16);
  int finite = 0;
  for (int t = 0; t < 2000; ++t) {
    const Index n = size(rng);
    const Pmf p = random_pmf(rng, n, {.zero_probability = 0.15});
    const Pmf q = random_pmf(rng, n, {.zero_probability = 0.15});
    const double ce = cross_entropy(p, q);
    const double d = kl(p, q);
    EXPECT_EQ(std::isinf(ce), std::isinf(d));
    if (std::isinf(ce)) continue;
    ++finite;
    EXPECT_GE(ce, shannon_entropy(p) - 1e-12);
    EXPECT_NEAR(ce - shannon_entropy(p), d, 1e-9);
  }
  EXPECT_GT(finite, 500);
}

TEST(EntropyProperties, CrossEntropyEqualsEntropyOnlyAtIdentity) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 500; ++t) {
    const Pmf p = random_pmf(rng, 6);
    EXPECT_NEAR(cross_entropy(p, p), shannon_entropy(p), 1e-12);
    const Pmf q = random_pmf(rng, 6);
    EXPECT_GT(cross_entropy(p, q), shannon_entropy(p));
  }
}

TEST(EntropyProperties, MutualInformationAndConditionalEntropyBounds) {
  std::mt19937_64 rng(104);
  std::uniform_int_distribution<Index> size(1, 8);
  for (int t = 0; t < 1000; ++t) {
    const Index n = size(rng);
    const Pmf flat = random_pmf(rng, n * n, {.zero_probability = 0.3});
    const JointPmf j(Eigen::Map<const MatrixX<double>>(flat.probs().data(), n, n));
    const double mi = mutual_information(j);
    const double ce = conditional_entropy(j);
    EXPECT_GE(mi, -1e-12);
    EXPECT_NEAR(mi, oracle::mutual_information(rows_of(j)), 1e-12);
    EXPECT_GE(ce, -1e-12);
    EXPECT_LE(ce, shannon_entropy(j.first_marginal()) + 1e-12);
  }
}
