#include <gtest/gtest.h>

#include <filesystem>

#include "common.hpp"
#include "mpedge/io.hpp"

using namespace mpedge;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "mpedge_test_io";
  fs::create_directories(dir);
  return dir / name;
}

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(PopulationJson, RoundTrip) {
  const auto pop = fixtures::fig1();
  const auto back = io::population_from_json(io::parse_json(io::to_json(pop).dump(), "mem"));
  EXPECT_EQ(back, pop);
}

TEST(PopulationJson, EmptyEntriesRejected) {
  const auto msg = error_of([] { io::population_from_json(io::parse_json(R"({"n_dim": 5, "entries": []})", "f")); });
  EXPECT_NE(msg.find("entries"), std::string::npos);
}

TEST(PopulationJson, FieldContextInErrors) {
  const auto msg = error_of([] {
    io::population_from_json(io::parse_json(R"({"n_dim": 5, "entries": [{"t": 1, "mult": 2}, {"t": 1}]})", "f"), "f");
  });
  EXPECT_NE(msg.find("f.entries[1]"), std::string::npos);
  EXPECT_NE(msg.find("mult"), std::string::npos);
  const auto msg2 = error_of([] {
    io::population_from_json(io::parse_json(R"({"n_dim": 2.5, "entries": [{"t": 1, "mult": 2}]})", "f"), "f");
  });
  EXPECT_NE(msg2.find("n_dim"), std::string::npos);
}

TEST(PopulationJson, SyntaxErrorHasLine) {
  const auto msg = error_of([] { io::parse_json("{\n  \"n_dim\": 5,\n  oops\n}", "spec.json"); });
  EXPECT_NE(msg.find("line 3"), std::string::npos);
}

TEST(SupportJson, HardEdgeSentinel) {
  const auto r = find_edges(fixtures::fig2());
  const auto j = io::to_json(r);
  ASSERT_EQ(j["edges"].size(), 4u);
  int hard = 0;
  for (const auto& e : j["edges"]) {
    if (!e["soft"].get<bool>()) {
      ++hard;
      EXPECT_EQ(e["m_star"], "inf");
      EXPECT_TRUE(e["gamma"].is_null());
    }
  }
  EXPECT_EQ(hard, 1);
  const auto e0 = io::edge_from_json(j["edges"][0]);
  EXPECT_EQ(e0.e_star, r.edges[0].e_star);
  EXPECT_EQ(e0.m_star, r.edges[0].m_star);
  const auto e_hard = io::edge_from_json(j["edges"][2]);
  EXPECT_TRUE(std::isinf(e_hard.m_star));
}

TEST(DensityCsv, HeaderRowsAndAtom) {
  const auto pop = fixtures::identity(200, 300);
  const auto r = find_edges(pop);
  const auto g = density_grid(pop, r, 10);
  const auto text = io::density_csv(g);
  EXPECT_EQ(text.rfind("x,f0\n", 0), 0u);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 12u);
  EXPECT_NE(text.find("# atom_at_zero=0.3333"), std::string::npos);
  const auto m = io::matrix_from_csv(text, "d");
  EXPECT_EQ(m.rows(), 10);
  EXPECT_EQ(m.cols(), 2);
}

TEST(DensityCsv, IdentityMatchesClosedForm) {
  const auto pop = fixtures::identity(500, 500);
  const auto m = io::matrix_from_csv(io::density_csv(density_grid(pop, find_edges(pop))), "d");
  ASSERT_EQ(m.rows(), 2000);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, 0) <= 0.0) continue;  // the closed form is singular at the hard edge
    worst = std::max(worst, std::abs(m(i, 1) - fixtures::identity_density(500, 500, m(i, 0))));
  }
  EXPECT_LE(worst, 1e-6);
}

TEST(DensityCsv, Fig2PositiveOnTwoIntervals) {
  const auto pop = fixtures::fig2();
  const auto r = find_edges(pop);
  ASSERT_EQ(r.intervals.size(), 2u);
  for (const auto& iv : r.intervals) EXPECT_GT(density_f0(pop, 0.5 * (iv.lo + iv.hi)), 0.0);
  const auto g = density_grid(pop, r, 200);
  for (const auto& p : g.points)
    if (!r.contains(p.x)) EXPECT_EQ(p.f0, 0.0);
}

TEST(MatrixCsv, RaggedAndBadValues) {
  EXPECT_EQ(io::matrix_from_csv("1,2\n3,4\n", "m")(1, 0), 3.0);
  EXPECT_NE(error_of([] { io::matrix_from_csv("1,2\n3\n", "m"); }).find("line 2"), std::string::npos);
  EXPECT_NE(error_of([] { io::matrix_from_csv("1,2\n3,x\n", "m"); }).find("'x'"), std::string::npos);
  EXPECT_EQ(io::values_from_csv("# c\n1.5\n2.5 3.5\n", "v").size(), 3u) << "ragged vectors flatten";
}

TEST(OneWayJson, DefaultsAndValidation) {
  const auto d = io::oneway_from_json(io::parse_json(R"({"n": 20, "p": 20, "J": 2})", "d"));
  EXPECT_EQ(d.I, 10);
  EXPECT_EQ(d.sigma2_sq, 1.0);
  EXPECT_THROW(io::oneway_from_json(io::parse_json(R"({"n": 21, "p": 20, "J": 2})", "d")), Error);
}

TEST(AtomicWrite, ReplacesContent) {
  const auto p = scratch("atomic.txt");
  io::atomic_write(p, "first");
  io::atomic_write(p, "second");
  EXPECT_EQ(io::read_text(p), "second");
  fs::path tmp = p;
  tmp += ".tmp";
  EXPECT_FALSE(fs::exists(tmp));
}

TEST(SwapJsonl, RoundTripReplays) {
  const auto pop = fixtures::fig2();
  const auto seq = build_swap_sequence(pop, find_edges(pop).edges.front());
  const auto recs = io::parse_swap_jsonl(io::swap_jsonl(seq), "seq");
  ASSERT_EQ(recs.size(), seq.size());
  EXPECT_EQ(recs.front().diag, seq.front().diag);
  std::vector<std::pair<std::size_t, double>> swaps;
  std::vector<SwapPhase> phases;
  for (std::size_t k = 1; k < recs.size(); ++k) {
    swaps.emplace_back(*recs[k].index, recs[k].new_t);
    phases.push_back(recs[k].phase);
  }
  const auto again = replay_swap_sequence(recs.front().diag, recs.front().n_dim, recs.front().m, swaps, phases);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    EXPECT_EQ(io::hex64(diagonal_digest(again[k].diag)), recs[k].digest);
    EXPECT_EQ(again[k].edge.e_star, recs[k].e);
  }
}

TEST(SwapCsv, OneRowPerStep) {
  const auto pop = fixtures::fig2();
  const auto seq = build_swap_sequence(pop, find_edges(pop).edges.front());
  const auto text = io::swap_diagnostics_csv(seq);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, seq.size());
}

TEST(CoverageCsv, RowsAreLevels) {
  CoverageResult a;
  a.values = {0.9, 0.95, 0.99};
  const auto text = io::coverage_csv({{"p20", a}, {"p100", a}});
  EXPECT_EQ(text.substr(0, text.find('\n')), "level,tw_quantile,p20,p20_se,p100,p100_se");
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  EXPECT_EQ(lines, 4u);
}

TEST(Digest, Fnv1aKnownValues) {
  EXPECT_EQ(io::fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(io::fnv1a("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(io::hex64(0xabcULL), "0000000000000abc");
}
