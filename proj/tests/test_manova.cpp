#include <gtest/gtest.h>

#include <cmath>

#include "mpedge/manova.hpp"

using namespace mpedge;

namespace {

void expect_same_population(const PopulationSpec& a, const PopulationSpec& b, double tol) {
  ASSERT_EQ(a.entries().size(), b.entries().size());
  EXPECT_EQ(a.n_dim(), b.n_dim());
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    EXPECT_NEAR(a.entries()[i].t, b.entries()[i].t, tol);
    EXPECT_EQ(a.entries()[i].mult, b.entries()[i].mult);
  }
}

double entry_t(const PopulationSpec& pop, double near) {
  for (const auto& e : pop.entries())
    if (std::abs(e.t - near) < 1e-9) return e.t;
  return NAN;
}

}  // namespace

TEST(OneWay, PopulationExamples) {
  const auto d = OneWayDesign::balanced(20, 20, 2);
  EXPECT_EQ(d.I, 10);
  const auto pop = oneway_population(d);
  EXPECT_EQ(pop.n_dim(), 20);
  EXPECT_EQ(pop.total_mult(), 30);
  ASSERT_EQ(pop.entries().size(), 3u);
  EXPECT_NEAR(pop.entries()[0].t, -1.0, 1e-15);
  EXPECT_EQ(pop.entries()[0].mult, 10);
  EXPECT_EQ(pop.entries()[1].t, 0.0);
  EXPECT_EQ(pop.entries()[1].mult, 11);
  EXPECT_NEAR(pop.entries()[2].t, 10.0 / 9.0, 1e-15);
  EXPECT_EQ(pop.entries()[2].mult, 9);

  const auto big = oneway_population(OneWayDesign::balanced(400, 100, 5));
  EXPECT_NEAR(entry_t(big, 20.0 / 79.0), 20.0 / 79.0, 1e-15);
  EXPECT_NEAR(entry_t(big, -1.0 / 16.0), -1.0 / 16.0, 1e-15);

  auto no_error = OneWayDesign::balanced(20, 20, 2, 1.0, 0.0);
  const auto merged = oneway_population(no_error);
  ASSERT_EQ(merged.entries().size(), 2u);
  EXPECT_EQ(merged.entries()[0].t, 0.0);
  EXPECT_EQ(merged.entries()[0].mult, 21);
}

TEST(OneWay, InvalidDesigns) {
  EXPECT_THROW(oneway_population({20, 20, 20, 1, 0, 1}), Error);
  EXPECT_THROW(oneway_population({20, 20, 1, 20, 0, 1}), Error);
  EXPECT_THROW(oneway_population({21, 20, 10, 2, 0, 1}), Error);
  EXPECT_THROW(oneway_population({20, 20, 10, 2, -1, 1}), Error);
  try {
    oneway_population({20, 20, 10, 2, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DesignError);
  }
}

TEST(OneWay, ProjectionIdentities) {
  for (auto [I, J] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {5, 3}, {10, 2}}) {
    const auto pr = oneway_projections(I * J, I, J);
    EXPECT_NEAR(pr.pi1.trace(), double(I - 1), 1e-12);
    EXPECT_NEAR(pr.pi2.trace(), double(I * J - I), 1e-12);
    EXPECT_LE((pr.pi1 * pr.pi1 - pr.pi1).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((pr.pi2 * pr.pi2 - pr.pi2).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((pr.pi1 * pr.pi2).cwiseAbs().maxCoeff(), 1e-12);
    const auto [b1, b2] = oneway_B_matrices(I * J, I, J);
    EXPECT_LE((b1 * Eigen::VectorXd::Ones(I * J)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LE((b1 - b1.transpose()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LE((b2 - b2.transpose()).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(OneWay, B1BruteForceTwoByTwo) {
  // Explicit projections for I = J = 2: group averaging minus grand mean.
  Eigen::Matrix4d group;
  group << .5, .5, 0, 0, .5, .5, 0, 0, 0, 0, .5, .5, 0, 0, .5, .5;
  const Eigen::Matrix4d grand = Eigen::Matrix4d::Constant(0.25);
  const Eigen::Matrix4d pi1 = group - grand;
  const Eigen::Matrix4d pi2 = Eigen::Matrix4d::Identity() - group;
  const Eigen::Matrix4d oracle = 0.5 * (pi1 / 1.0 - pi2 / 2.0);
  const auto [b1, b2] = oneway_B_matrices(4, 2, 2);
  EXPECT_LE((b1 - oracle).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((b2 - pi2 / 2.0).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ManovaEstimate, ConstantRowsVanish) {
  const auto [b1, b2] = oneway_B_matrices(12, 4, 3);
  Eigen::MatrixXd y(12, 3);
  y.rowwise() = Eigen::RowVector3d(1.5, -2.0, 7.25);
  EXPECT_LE(manova_estimate(y, b1).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_THROW(manova_estimate(Eigen::MatrixXd::Zero(11, 3), b1), Error);
  EXPECT_THROW(manova_estimate(y, Eigen::MatrixXd::Zero(12, 11)), Error);
}

TEST(ManovaEstimate, ScalarAnova) {
  Eigen::MatrixXd y(4, 1);
  y << 1.0, 3.0, 4.0, 8.0;
  const double g1 = 2.0, g2 = 6.0, grand = 4.0;
  const double msb = 2.0 * ((g1 - grand) * (g1 - grand) + (g2 - grand) * (g2 - grand)) / 1.0;
  const double msw = ((1 - g1) * (1 - g1) + (3 - g1) * (3 - g1) + (4 - g2) * (4 - g2) + (8 - g2) * (8 - g2)) / 2.0;
  const auto [b1, b2] = oneway_B_matrices(4, 2, 2);
  EXPECT_NEAR(manova_estimate(y, b1)(0, 0), (msb - msw) / 2.0, 1e-13);
  EXPECT_NEAR(manova_estimate(y, b2)(0, 0), msw, 1e-13);
}

TEST(ManovaEstimate, Unbiased) {
  const auto d = OneWayDesign::balanced(20, 2, 4);
  const auto [b1, b2] = oneway_B_matrices(d.n, d.I, d.J);
  Eigen::Matrix2d s1;
  s1 << 2.0, 0.0, 0.0, 1.0;
  const Eigen::Matrix2d s2 = Eigen::Matrix2d::Identity();
  const int reps = 10000;
  Eigen::Matrix2d sum1 = Eigen::Matrix2d::Zero(), sq1 = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d sum2 = Eigen::Matrix2d::Zero(), sq2 = Eigen::Matrix2d::Zero();
  for (int r = 0; r < reps; ++r) {
    auto rng = replicate_engine(77, r);
    const Eigen::MatrixXd y = simulate_oneway(d, s1, s2, rng);
    const Eigen::Matrix2d e1 = manova_estimate(y, b1);
    const Eigen::Matrix2d e2 = manova_estimate(y, b2);
    sum1 += e1;
    sq1 += e1.cwiseProduct(e1);
    sum2 += e2;
    sq2 += e2.cwiseProduct(e2);
  }
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double m1 = sum1(i, j) / reps, m2 = sum2(i, j) / reps;
      const double se1 = std::sqrt((sq1(i, j) / reps - m1 * m1) / reps);
      const double se2 = std::sqrt((sq2(i, j) / reps - m2 * m2) / reps);
      EXPECT_LE(std::abs(m1 - s1(i, j)), 3 * se1) << i << j;
      EXPECT_LE(std::abs(m2 - s2(i, j)), 3 * se2) << i << j;
    }
}

TEST(GeneralF, ReproducesOneWay) {
  for (auto d : {OneWayDesign::balanced(20, 20, 2), OneWayDesign::balanced(40, 30, 4, 0.7, 1.3),
                 OneWayDesign::balanced(60, 50, 3, 0.0, 2.0)}) {
    expect_same_population(oneway_population(d), general_F_population(oneway_general(d)), 1e-8);
  }
}

TEST(GeneralF, ZeroVariances) {
  auto g = oneway_general(OneWayDesign::balanced(20, 20, 2));
  g.sigma_sq = {0.0, 0.0};
  const auto pop = general_F_population(g);
  EXPECT_TRUE(pop.all_zero());
  EXPECT_EQ(pop.total_mult(), 30);
}

TEST(GeneralF, ErrorWeightsOnly) {
  const auto d = OneWayDesign::balanced(30, 25, 3, 0.4, 1.7);
  auto g = oneway_general(d);
  g.B = oneway_B_matrices(d.n, d.I, d.J).second;
  const auto pop = general_F_population(g);
  ASSERT_EQ(pop.entries().size(), 2u);
  EXPECT_EQ(pop.entries()[0].t, 0.0);
  EXPECT_EQ(pop.entries()[0].mult, d.I + d.I);
  EXPECT_NEAR(pop.entries()[1].t, d.p * d.sigma2_sq / double(d.n - d.I), 1e-10);
  EXPECT_EQ(pop.entries()[1].mult, d.n - d.I);
}

TEST(GeneralF, Validation) {
  auto g = oneway_general(OneWayDesign::balanced(20, 20, 2));
  g.B(0, 1) += 1e-3;
  EXPECT_THROW(general_F_population(g), Error);
  g = oneway_general(OneWayDesign::balanced(20, 20, 2));
  g.B = g.B + Eigen::MatrixXd::Identity(20, 20) * 0.01;
  EXPECT_THROW(general_F_population(g), Error);  // B X_fixed != 0
  g = oneway_general(OneWayDesign::balanced(20, 20, 2));
  g.B *= 1e4;
  EXPECT_THROW(general_F_population(g), Error);  // norm bound
}

TEST(GeneralF, ClusterAmbiguity) {
  try {
    detail::cluster_eigenvalues({1.0, 1.0 + 1e-7, 2.0}, 1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClusterAmbiguity);
  }
  const auto merged = detail::cluster_eigenvalues({1.0, 1.0 + 1e-12, 2.0, 1e-14}, 1e-9);
  ASSERT_EQ(merged.size(), 3u);
  EXPECT_EQ(merged[0].t, 0.0);
  EXPECT_EQ(merged[1].mult, 2);
}

TEST(SigmaEstimate, Basics) {
  EXPECT_DOUBLE_EQ(estimate_sigma_sq(Eigen::MatrixXd::Identity(5, 5), 5), 1.0);
  EXPECT_EQ(estimate_sigma_sq(Eigen::MatrixXd::Zero(5, 5), 5), 0.0);
  EXPECT_THROW(estimate_sigma_sq(Eigen::MatrixXd::Zero(5, 4), 5), Error);
  EXPECT_THROW(estimate_sigma_sq(Eigen::MatrixXd::Zero(4, 4), 5), Error);
}
