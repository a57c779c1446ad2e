#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "mpedge/tw.hpp"

using namespace mpedge;

// Reference values of det(I - K_s) from a separate mpmath evaluation
// (25 digits, 70 Gauss-Legendre nodes): F1(0) = 0.831908066203,
// F1(0.4501) = 0.899994688507, F1(0.9793) = 0.949998883432,
// F1(2.0234) = 0.989999169259.
TEST(TW, OracleQuantiles) {
  EXPECT_NEAR(f1_quantile(0.90), 0.4501, 5e-3);
  EXPECT_NEAR(f1_quantile(0.95), 0.9793, 5e-3);
  EXPECT_NEAR(f1_quantile(0.99), 2.0234, 5e-3);
  EXPECT_NEAR(f1_cdf(0.4501), 0.90, 5e-3);
  EXPECT_NEAR(f1_cdf(0.0), 0.8319080662, 1e-8);
}

TEST(TW, Tails) {
  EXPECT_LT(f1_cdf(-10.0), 1e-6);
  EXPECT_GT(f1_cdf(10.0), 1.0 - 1e-9);
  EXPECT_LT(f1_cdf(-12.0), f1_cdf(-10.0));
  EXPECT_GT(f1_cdf(-12.0), 0.0);
  EXPECT_LE(f1_cdf(12.0), 1.0);
  EXPECT_EQ(f1_cdf(-INFINITY), 0.0);
  EXPECT_EQ(f1_cdf(INFINITY), 1.0);
  const auto& t = TWTable::instance();
  const double lo = t.x_min();
  const double hi = t.x_max();
  EXPECT_NEAR(f1_cdf(lo - 1e-12) / f1_cdf(lo), 1.0, 1e-9);
  EXPECT_NEAR(1.0 - f1_cdf(hi + 1e-12), 1.0 - f1_cdf(hi), 1e-18);
}

TEST(TW, MonotoneScan) {
  double prev = -1.0;
  for (int i = 0; i <= 10000; ++i) {
    const double x = -12.0 + 24.0 * i / 10000.0;
    const double v = f1_cdf(x);
    ASSERT_GE(v, 0.0);
    ASSERT_LE(v, 1.0);
    ASSERT_GE(v, prev) << x;
    prev = v;
  }
}

TEST(TW, RoundTrips) {
  for (double p : {0.001, 0.1, 0.5, 0.9, 0.95, 0.99, 0.999}) EXPECT_NEAR(f1_cdf(f1_quantile(p)), p, 1e-6);
  for (int i = 0; i <= 80; ++i) {
    const double x = -4.0 + 0.1 * i;
    EXPECT_NEAR(f1_quantile(f1_cdf(x)), x, 1e-5);
  }
  double prev = -INFINITY;
  for (int i = 1; i <= 99; ++i) {
    const double q = f1_quantile(i / 100.0);
    EXPECT_GT(q, prev);
    prev = q;
  }
}

TEST(TW, QuantileDomain) {
  for (double p : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    try {
      f1_quantile(p);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::DomainError);
    }
  }
}

TEST(TW, CsvOverrideMatchesEmbedded) {
  const auto embedded = TWTable::embedded();
  const std::string path = ::testing::TempDir() + "tw_override.csv";
  {
    std::ofstream out(path);
    out << "x,cdf\n";
    out.precision(17);
    for (const auto& n : embedded.nodes()) out << n.x << ',' << n.cdf << '\n';
  }
  const auto loaded = TWTable::from_csv(path);
  std::remove(path.c_str());
  for (double x : {-5.0, -1.3, 0.0, 0.4501, 2.0, 5.5})
    EXPECT_NEAR(loaded.cdf(x), embedded.cdf(x), 1e-6) << x;
  EXPECT_THROW(TWTable::from_csv("/nonexistent/table.csv"), Error);
}
