#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "common.hpp"
#include "mpedge/mc.hpp"
#include "mpedge/tw_test.hpp"

using namespace mpedge;
using fixtures::fig1;
using fixtures::identity;

TEST(EdgeTest, StatisticAtEdgeIsZero) {
  const auto pop = identity(500, 500);
  const auto edge = find_edges(pop).edges.front();
  const std::vector<double> ev{1.0, 2.0, edge.e_star};
  const auto r = edge_test(pop, ev, edge, 0.05);
  EXPECT_EQ(r.statistic, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0 - f1_cdf(0.0));
  EXPECT_NEAR(r.p_value, 1.0 - 0.831908066203, 1e-9);
  EXPECT_FALSE(r.reject);
}

TEST(EdgeTest, IdentityScaleArithmetic) {
  const auto pop = identity(500, 500);
  const auto edge = find_edges(pop).edges.front();
  const std::vector<double> ev{0.5, 3.9, 4.04};
  const auto r = edge_test(pop, ev, edge, 0.05);
  EXPECT_NEAR(r.statistic, 1.0, 1e-9);
  EXPECT_EQ(r.lambda_used, 4.04);
  EXPECT_NEAR(r.window_delta, 2.0, 1e-12);
}

TEST(EdgeTest, ReflectionGivesLeftEdgeWithSameStatistic) {
  const auto pop = fig1();
  const auto rep = find_edges(pop);
  const auto right = rep.edges.front();
  const auto refl = pop.reflected();
  const auto left = find_edges(refl).edges.back();
  EXPECT_EQ(left.side, EdgeSide::Left);
  const std::vector<double> ev{right.e_star + 0.01, right.e_star - 0.2};
  const std::vector<double> neg{-ev[0], -ev[1]};
  // E1 of this population has margin 0.0405, below the default gate.
  const auto a = edge_test(pop, ev, right, 0.05, {.tau = 0.01});
  const auto b = edge_test(refl, neg, left, 0.05, {.tau = 0.01});
  EXPECT_NEAR(a.statistic, b.statistic, 1e-9);
  EXPECT_EQ(b.lambda_used, -ev[0]);
}

TEST(EdgeTest, ScaleInvariance) {
  const auto pop = fig1();
  const auto edge = find_edges(pop).edges.front();
  const std::vector<double> ev{edge.e_star - 0.05, edge.e_star + 0.03};
  const auto base = edge_test(pop, ev, edge, 0.05, {.tau = 0.01});
  for (double c : {0.3, 2.0, 7.5}) {
    const auto scaled = pop.scaled(c);
    const auto e2 = find_edges(scaled).edges.front();
    const std::vector<double> ev2{c * ev[0], c * ev[1]};
    EXPECT_NEAR(edge_test(scaled, ev2, e2, 0.05, {.tau = 0.001}).statistic, base.statistic, 1e-9);
  }
}

TEST(EdgeTest, Monotone) {
  const auto pop = fig1();
  const auto rep = find_edges(pop);
  const auto right = rep.edges.front();
  const auto left = rep.edges[1];
  double prev_r = -INFINITY, prev_l = INFINITY;
  for (int i = 0; i < 20; ++i) {
    const double off = -0.1 + 0.01 * i;
    const double sr = edge_statistic(right, pop.n(), right.e_star + off);
    const double sl = edge_statistic(left, pop.n(), left.e_star + off);
    EXPECT_GT(sr, prev_r);
    EXPECT_LT(sl, prev_l);
    prev_r = sr;
    prev_l = sl;
  }
}

TEST(EdgeTest, Errors) {
  const auto pop = identity(500, 500);
  const auto rep = find_edges(pop);
  const std::vector<double> ev{4.0};
  const std::vector<double> far{100.0};
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  EXPECT_EQ(kind_of([&] { edge_test(pop, ev, rep.edges[1], 0.05); }), ErrorKind::IrregularEdge);
  EXPECT_EQ(kind_of([&] { edge_test(pop, ev, rep.edges[0], 0.05, {.tau = 0.6}); }), ErrorKind::IrregularEdge);
  EXPECT_EQ(kind_of([&] { edge_test(pop, far, rep.edges[0], 0.05); }), ErrorKind::EmptyWindow);
}

TEST(EdgeTest, AlphaOneAlwaysRejects) {
  const auto pop = identity(500, 500);
  const auto edge = find_edges(pop).edges.front();
  for (double lam : {3.9, 4.0, 4.1}) {
    const std::vector<double> ev{lam};
    EXPECT_TRUE(edge_test(pop, ev, edge, 1.0).reject);
  }
}

TEST(EdgeTest, InteriorEdge) {
  const auto pop = fig1();
  const auto rep = find_edges(pop);
  const auto& e3 = rep.edges[2];
  const std::vector<double> ev{rep.edges[3].e_star + 0.1, e3.e_star - 0.01, rep.edges[0].e_star};
  const auto r = edge_test(pop, ev, e3, 0.05);
  EXPECT_EQ(r.lambda_used, e3.e_star - 0.01);
  EXPECT_LT(r.statistic, 0.0);
}

TEST(PluginTest, DegenerateDataIsDesignError) {
  const auto d = OneWayDesign::balanced(40, 20, 2);
  try {
    plugin_edge_test(d, Eigen::MatrixXd::Zero(40, 20), 0.05);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DesignError);
  }
}

TEST(PluginTest, CloseToKnownVariance) {
  const auto d = OneWayDesign::balanced(400, 100, 2);
  const auto known_pop = oneway_population(d);
  const auto known_edge = find_edges(known_pop).edges.front();
  const auto [b1, b2] = oneway_B_matrices(d.n, d.I, d.J);
  std::vector<double> stat_diff, edge_diff;
  for (int r = 0; r < 20; ++r) {
    auto rng = replicate_engine(3, r);
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d.p, d.p);
    const Eigen::MatrixXd y = simulate_oneway(d, 0.0 * id, id, rng);
    const auto plug = plugin_edge_test(d, y, 0.05);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(manova_estimate(y, b1), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = es.eigenvalues();
    const auto known = edge_test(known_pop, std::span<const double>(ev.data(), ev.size()), known_edge, 0.05);
    ASSERT_TRUE(plug.plugin_variances.has_value());
    stat_diff.push_back(std::abs(plug.statistic - known.statistic));
    edge_diff.push_back(std::abs(plug.edge.e_star - known_edge.e_star));
  }
  EXPECT_LE(detail::median(stat_diff), 0.5);
  EXPECT_LE(detail::median(edge_diff), 10.0 / d.n);
}
