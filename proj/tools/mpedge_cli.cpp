#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mpedge/mpedge.hpp"

using namespace mpedge;
namespace fs = std::filesystem;
using io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitPrecondition = 4;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::DesignError:
    case ErrorKind::ShapeError:
    case ErrorKind::DomainError:
      return kExitInput;
    case ErrorKind::IrregularEdge:
    case ErrorKind::EmptyWindow:
    case ErrorKind::NoSuchEdge:
    case ErrorKind::SwapRejected:
    case ErrorKind::RegularityLost:
    case ErrorKind::NotSwappable:
      return kExitPrecondition;
    default:
      return kExitNumerical;
  }
}

// A parsed input document: exactly one of the three is set.
struct Input {
  std::string text;
  std::optional<PopulationSpec> population;
  std::optional<OneWayDesign> oneway;
  std::optional<GeneralDesign> general;

  PopulationSpec law() const {
    if (population) return *population;
    if (oneway) return oneway_population(*oneway);
    return general_F_population(*general);
  }
};

Input load_input(const std::string& path) {
  Input in;
  in.text = io::read_text(path);
  const json doc = io::parse_json(in.text, path);
  if (!doc.is_object()) fail(ErrorKind::InvalidInput, path + ": expected a JSON object");
  if (doc.contains("n_dim")) {
    in.population = io::population_from_json(doc, path);
  } else if (doc.contains("U")) {
    in.general = io::general_design_from_json(doc, fs::path(path).parent_path(), path);
  } else if (doc.contains("J")) {
    in.oneway = io::oneway_from_json(doc, path);
  } else {
    fail(ErrorKind::InvalidInput, path + ": not a population (n_dim), one-way design (n, p, J) or general design (U)");
  }
  return in;
}

PopulationSpec load_population(const std::string& path) {
  const Input in = load_input(path);
  if (!in.population) fail(ErrorKind::InvalidInput, path + ": expected a population spec");
  return *in.population;
}

const EdgeInfo& pick_edge(const SupportReport& r, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= r.edges.size())
    fail(ErrorKind::NoSuchEdge, "edge index " + std::to_string(index) + " out of range (" +
                                    std::to_string(r.edges.size()) + " edges)");
  return r.edges[static_cast<std::size_t>(index)];
}

std::vector<double> eigenvalues_of(const Eigen::MatrixXd& s) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

class Run {
 public:
  Run(std::string command, const std::string& input_text) : start_(std::chrono::steady_clock::now()) {
    manifest_.command = std::move(command);
    manifest_.input_digest = io::hex64(io::fnv1a(input_text));
    manifest_.version = MPEDGE_VERSION;
  }

  io::RunManifest& manifest() { return manifest_; }

  void write(const fs::path& path, const std::string& content) {
    io::atomic_write(path, content);
    manifest_.outputs.push_back(path.string());
  }

  void finish(const fs::path& manifest_path) {
    manifest_.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    io::atomic_write(manifest_path, io::to_json(manifest_).dump(2) + "\n");
  }

 private:
  std::chrono::steady_clock::time_point start_;
  io::RunManifest manifest_;
};

fs::path manifest_for(const std::string& out, const std::string& explicit_path) {
  if (!explicit_path.empty()) return explicit_path;
  return out + ".manifest.json";
}

struct Common {
  std::string input;
  std::string out;
  std::string manifest;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_out) {
  cmd->add_option("input", c.input, "Input JSON document")->required();
  c.out = default_out;
  cmd->add_option("--out", c.out, "Output file")->capture_default_str();
  cmd->add_option("--manifest", c.manifest, "Manifest path (default <out>.manifest.json)");
}

// ---------------------------------------------------------------- edges

struct EdgesArgs {
  Common c;
  double tau = 0.05;
};

int cmd_edges(const EdgesArgs& a) {
  const Input in = load_input(a.c.input);
  Run run("edges", in.text);
  const auto pop = in.law();
  const auto report = find_edges(pop);
  json doc = io::to_json(report);
  doc["tau"] = a.tau;
  for (std::size_t i = 0; i < report.edges.size(); ++i)
    doc["edges"][i]["regular"] = report.edges[i].soft && check_regularity(pop, report.edges[i], a.tau);
  run.manifest().parameters = {{"tau", a.tau}};
  run.write(a.c.out, doc.dump(2) + "\n");
  run.finish(manifest_for(a.c.out, a.c.manifest));
  std::size_t soft = 0;
  for (const auto& e : report.edges) soft += e.soft ? 1 : 0;
  std::cout << report.edges.size() << " edges (" << soft << " soft), " << report.intervals.size()
            << " intervals -> " << a.c.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- density

struct DensityArgs {
  Common c;
  std::size_t grid = 2000;
};

int cmd_density(const DensityArgs& a) {
  const Input in = load_input(a.c.input);
  Run run("density", in.text);
  const auto pop = in.law();
  const auto report = find_edges(pop);
  const auto g = density_grid(pop, report, a.grid);
  run.manifest().parameters = {{"grid", a.grid}};
  run.write(a.c.out, io::density_csv(g));
  run.finish(manifest_for(a.c.out, a.c.manifest));
  std::cout << g.points.size() << " points -> " << a.c.out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- test

struct TestArgs {
  Common c;
  std::string eigenvalues;
  std::string data;
  double alpha = 0.05;
  double tau = 0.05;
  int edge_index = 0;
  bool plugin = false;
  bool estimate_sigma1 = false;
  std::uint64_t seed = 1;
  std::string law = "gaussian";
};

int cmd_test(const TestArgs& a) {
  const Input in = load_input(a.c.input);
  Run run("test", in.text);
  json params = {{"alpha", a.alpha}, {"tau", a.tau}, {"edge_index", a.edge_index}, {"plugin", a.plugin}};
  TestReport report;
  const EdgeTestOptions topts{a.tau};

  if (!a.eigenvalues.empty() && !a.data.empty())
    fail(ErrorKind::InvalidInput, "give at most one of --eigenvalues and --data");

  std::optional<Eigen::MatrixXd> y;
  if (!a.data.empty()) {
    y = io::matrix_from_csv(io::read_text(a.data), a.data);
    params["data"] = a.data;
  } else if (a.eigenvalues.empty() && in.oneway) {
    // Worked example: one draw from the design itself.
    auto rng = replicate_engine(a.seed, 0);
    const auto& d = *in.oneway;
    const Eigen::MatrixXd s1 = Eigen::MatrixXd::Identity(d.p, d.p) * d.sigma1_sq;
    const Eigen::MatrixXd s2 = Eigen::MatrixXd::Identity(d.p, d.p) * d.sigma2_sq;
    y = simulate_oneway(d, s1, s2, rng, parse_entry_law(a.law));
    params["simulated"] = true;
    params["law"] = a.law;
    run.manifest().seed = a.seed;
  }

  if (a.plugin) {
    if (!in.oneway || !y) fail(ErrorKind::InvalidInput, "--plugin needs a one-way design and data");
    report = plugin_edge_test(*in.oneway, *y, a.alpha, PluginOptions{a.estimate_sigma1, topts});
  } else {
    const auto pop = in.law();
    std::vector<double> ev;
    if (!a.eigenvalues.empty()) {
      ev = io::values_from_csv(io::read_text(a.eigenvalues), a.eigenvalues);
      params["eigenvalues"] = a.eigenvalues;
    } else if (y) {
      if (in.oneway) {
        ev = eigenvalues_of(manova_estimate(*y, oneway_B_matrices(in.oneway->n, in.oneway->I, in.oneway->J).first));
      } else if (in.general) {
        ev = eigenvalues_of(manova_estimate(*y, in.general->B));
      } else {
        fail(ErrorKind::InvalidInput, "raw data needs a design, not a population");
      }
    } else {
      fail(ErrorKind::InvalidInput, "need --eigenvalues or --data");
    }
    const auto sr = find_edges(pop);
    report = edge_test(pop, ev, pick_edge(sr, a.edge_index), a.alpha, topts);
  }
  run.manifest().parameters = params;
  run.write(a.c.out, io::to_json(report).dump(2) + "\n");
  run.finish(manifest_for(a.c.out, a.c.manifest));
  std::cout << "statistic " << report.statistic << ", p-value " << report.p_value << ", "
            << (report.reject ? "reject" : "do not reject") << " at alpha " << report.alpha << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  Common c;
  std::int64_t reps = 2000;
  std::uint64_t seed = 1;
  std::string law = "gaussian";
  std::string mode = "table1";
  std::string route = "manova";
  int width = 1;
  int edge_index = 0;
  double delta = 0.1;
  double epsilon = 0.2;
  double tau = 0.05;
  double eta = 0.0;
};

int cmd_simulate(const SimulateArgs& a) {
  const Input in = load_input(a.c.input);
  Run run("simulate", in.text);
  SimConfig cfg;
  cfg.reps = a.reps;
  cfg.seed = a.seed;
  cfg.entry_law = parse_entry_law(a.law);
  cfg.parallel_width = a.width;
  cfg.validate();
  run.manifest().seed = a.seed;
  json params = {{"mode", a.mode}, {"reps", a.reps}, {"law", a.law}};
  std::ostringstream table;
  table.precision(10);

  if (a.mode == "table1") {
    if (!in.oneway) fail(ErrorKind::InvalidInput, "table1 mode needs a one-way design");
    if (a.route != "manova" && a.route != "population") fail(ErrorKind::InvalidInput, "--route is manova or population");
    params["route"] = a.route;
    const auto res = table1_experiment(*in.oneway, cfg, a.route == "manova" ? SimRoute::Manova : SimRoute::Population);
    const std::string label = "p" + std::to_string(in.oneway->p) + "_n" + std::to_string(in.oneway->n);
    table << io::coverage_csv({{label, res}});
    std::cout << "coverage " << res.values[0] << " / " << res.values[1] << " / " << res.values[2] << "\n";
  } else {
    const auto pop = in.law();
    if (pop.n_dim() > cfg.max_dim) fail(ErrorKind::InvalidInput, "N exceeds the dense eigensolver limit");
    if (a.mode == "adherence") {
      params["delta"] = a.delta;
      const double rate = support_adherence(pop, cfg, a.delta);
      table << "mode,reps,delta,fraction_outside\nadherence," << a.reps << ',' << a.delta << ',' << rate << '\n';
      std::cout << "fraction with an eigenvalue outside the delta-neighbourhood: " << rate << "\n";
    } else if (a.mode == "concentration" || a.mode == "locallaw") {
      const auto sr = find_edges(pop);
      const auto& edge = pick_edge(sr, a.edge_index);
      params["edge_index"] = a.edge_index;
      params["tau"] = a.tau;
      if (a.mode == "concentration") {
        params["epsilon"] = a.epsilon;
        const double rate = edge_concentration(pop, edge, cfg, a.epsilon, a.tau);
        table << "mode,reps,edge,epsilon,fraction_in_exclusion_zone\nconcentration," << a.reps << ',' << edge.e_star
              << ',' << a.epsilon << ',' << rate << '\n';
        std::cout << "exclusion-zone occupancy: " << rate << "\n";
      } else {
        const double eta = a.eta > 0.0 ? a.eta : 1.0 / std::sqrt(pop.n());
        params["eta"] = eta;
        const auto s = local_law_probe(pop, edge, cfg, eta, a.tau);
        table << "rep,re_z,im_z,m_N_err,entrywise_err,psi\n";
        for (std::size_t r = 0; r < s.probes.size(); ++r) {
          const auto& p = s.probes[r];
          table << r << ',' << p.z.re() << ',' << p.z.im() << ',' << p.m_N_err << ',' << p.entrywise_err << ','
                << p.psi << '\n';
        }
        table << "# median_m_N_err=" << s.median_m_N_err << " median_entrywise_err=" << s.median_entrywise_err
              << " fraction_within_10psi=" << s.fraction_within_10psi << '\n';
        std::cout << "median |m_N - m0| " << s.median_m_N_err << ", within 10 Psi " << s.fraction_within_10psi
                  << "\n";
      }
    } else {
      fail(ErrorKind::InvalidInput, "unknown --mode '" + a.mode + "'");
    }
  }
  run.manifest().parameters = params;
  run.write(a.c.out, table.str());
  run.finish(manifest_for(a.c.out, a.c.manifest));
  return kExitOk;
}

// ---------------------------------------------------------------- swapseq

struct SwapArgs {
  Common c;
  int edge_index = 0;
  double phi = 10.0;
  double c0 = 0.05;
  double tau_prime = 0.01;
  std::string diagnostics;
  bool verify = false;
  double residual_bound = 0.0;
};

int verify_sequence(const SwapArgs& a) {
  const std::string text = io::read_text(a.c.input);
  Run run("swapseq --verify", text);
  const auto recs = io::parse_swap_jsonl(text, a.c.input);
  std::vector<std::pair<std::size_t, double>> swaps;
  std::vector<SwapPhase> phases;
  for (std::size_t k = 1; k < recs.size(); ++k) {
    if (!recs[k].index) fail(ErrorKind::InvalidInput, a.c.input + ": record " + std::to_string(k) + " lacks index");
    swaps.emplace_back(*recs[k].index, recs[k].new_t);
    phases.push_back(recs[k].phase);
  }
  SwapOptions opts{a.c0, a.phi, a.tau_prime};
  std::vector<std::string> violations;
  std::vector<SwapState> seq;
  try {
    seq = replay_swap_sequence(recs.front().diag, recs.front().n_dim, recs.front().m, swaps, phases, opts);
  } catch (const Error& e) {
    violations.push_back(std::string("replay: ") + e.what());
  }
  const double n = static_cast<double>(recs.front().n_dim);
  double r1 = 0.0, r2 = 0.0;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& s = seq[k];
    const std::string at = "step " + std::to_string(k) + ": ";
    if (io::hex64(diagonal_digest(s.diag)) != recs[k].digest) violations.push_back(at + "digest mismatch");
    if (std::abs(s.edge.e_star - recs[k].e) > 1e-9 * std::max(1.0, std::abs(recs[k].e)))
      violations.push_back(at + "E differs from the record");
    if (std::abs(s.edge.gamma.value_or(0.0) - 1.0) > 1e-8) violations.push_back(at + "gamma != 1");
    if (k == 0) continue;
    try {
      const auto d = verify_swappable(seq[k - 1], s, a.phi);
      r1 = std::max(r1, d.sum_rule_1_residual);
      r2 = std::max(r2, d.sum_rule_2_residual);
      if (a.residual_bound > 0.0 && (d.sum_rule_1_residual > a.residual_bound / n ||
                                     d.sum_rule_2_residual > a.residual_bound / n))
        violations.push_back(at + "sum-rule residual above bound/N");
    } catch (const Error& e) {
      violations.push_back(at + e.what());
    }
  }
  if (!seq.empty() && seq.size() - 1 > 2 * seq.front().diag.size()) violations.push_back("L > 2M");
  json doc = {{"steps", recs.size() - 1},
              {"max_r1", r1},
              {"max_r2", r2},
              {"phi", a.phi},
              {"violations", violations},
              {"ok", violations.empty()}};
  run.manifest().parameters = {{"verify", true}, {"phi", a.phi}, {"residual_bound", a.residual_bound}};
  const std::string out = a.c.out == "swap_sequence.jsonl" ? "swap_verify.json" : a.c.out;
  run.write(out, doc.dump(2) + "\n");
  run.finish(manifest_for(out, a.c.manifest));
  for (const auto& v : violations) std::cerr << "violation: " << v << "\n";
  std::cout << (violations.empty() ? "verified " : "FAILED ") << recs.size() - 1 << " swaps, max r1 " << r1
            << ", max r2 " << r2 << "\n";
  return violations.empty() ? kExitOk : kExitPrecondition;
}

int cmd_swapseq(const SwapArgs& a) {
  if (a.verify) return verify_sequence(a);
  const Input in = load_input(a.c.input);
  Run run("swapseq", in.text);
  const auto pop = in.law();
  const auto sr = find_edges(pop);
  const auto& edge = pick_edge(sr, a.edge_index);
  const SwapOptions opts{a.c0, a.phi, a.tau_prime};
  const auto seq = build_swap_sequence(pop, edge, opts);
  for (std::size_t k = 1; k < seq.size(); ++k) verify_swappable(seq[k - 1], seq[k], a.phi);
  const std::string diag_path =
      a.diagnostics.empty() ? fs::path(a.c.out).replace_extension(".csv").string() : a.diagnostics;
  run.manifest().parameters = {
      {"edge_index", a.edge_index}, {"phi", a.phi}, {"c0", a.c0}, {"tau_prime", a.tau_prime}};
  run.write(a.c.out, io::swap_jsonl(seq));
  run.write(diag_path, io::swap_diagnostics_csv(seq));
  run.finish(manifest_for(a.c.out, a.c.manifest));
  std::cout << "L = " << seq.size() - 1 << " swaps (M = " << seq.front().diag.size() << ") -> " << a.c.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge analysis of X'TX spectra: support, edges, Tracy-Widom tests, simulations, swap sequences"};
  app.set_version_flag("--version", std::string(MPEDGE_VERSION));
  app.require_subcommand(1);

  EdgesArgs edges;
  auto* c_edges = app.add_subcommand("edges", "Support intervals and edges of mu0");
  add_common(c_edges, edges.c, "edges.json");
  c_edges->add_option("--tau", edges.tau, "Regularity threshold")->capture_default_str();

  DensityArgs density;
  auto* c_density = app.add_subcommand("density", "Density f0 on a grid spanning the support");
  add_common(c_density, density.c, "density.csv");
  c_density->add_option("--grid", density.grid, "Number of grid points")->capture_default_str()->check(CLI::Range(2, 10000000));

  TestArgs test;
  auto* c_test = app.add_subcommand("test", "Tracy-Widom edge test");
  add_common(c_test, test.c, "test_report.json");
  c_test->add_option("--eigenvalues", test.eigenvalues, "File of observed eigenvalues");
  c_test->add_option("--data", test.data, "Raw n x p data matrix (CSV)");
  c_test->add_option("--alpha", test.alpha, "Level")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  c_test->add_option("--tau", test.tau, "Regularity threshold")->capture_default_str();
  c_test->add_option("--edge-index", test.edge_index, "Edge index, 0 = rightmost")->capture_default_str();
  c_test->add_flag("--plugin", test.plugin, "Estimate variances from the data");
  c_test->add_flag("--estimate-sigma1", test.estimate_sigma1, "With --plugin, also estimate sigma1^2");
  c_test->add_option("--seed", test.seed, "Seed when data are simulated from the design")->capture_default_str();
  c_test->add_option("--law", test.law, "Entry law for simulated data")->capture_default_str();

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo experiments");
  add_common(c_sim, sim.c, "simulate.csv");
  c_sim->add_option("--reps", sim.reps, "Replicates")->capture_default_str();
  c_sim->add_option("--seed", sim.seed, "Seed")->capture_default_str();
  c_sim->add_option("--law", sim.law, "Entry law: gaussian or rademacher")->capture_default_str();
  c_sim->add_option("--mode", sim.mode, "table1, adherence, concentration or locallaw")
      ->capture_default_str()
      ->check(CLI::IsMember({"table1", "adherence", "concentration", "locallaw"}));
  c_sim->add_option("--route", sim.route, "table1: manova (simulate Y) or population (X'TX)")->capture_default_str();
  c_sim->add_option("--width", sim.width, "Worker threads")->capture_default_str();
  c_sim->add_option("--edge-index", sim.edge_index, "Edge index for concentration/locallaw")->capture_default_str();
  c_sim->add_option("--delta", sim.delta, "Adherence neighbourhood")->capture_default_str();
  c_sim->add_option("--epsilon", sim.epsilon, "Exclusion-zone exponent")->capture_default_str();
  c_sim->add_option("--tau", sim.tau, "Regularity threshold")->capture_default_str();
  c_sim->add_option("--eta", sim.eta, "Local-law eta (default N^{-1/2})");

  SwapArgs swap;
  auto* c_swap = app.add_subcommand("swapseq", "Build or verify a swap sequence");
  add_common(c_swap, swap.c, "swap_sequence.jsonl");
  c_swap->add_option("--edge-index", swap.edge_index, "Right edge to track, 0 = rightmost")->capture_default_str();
  c_swap->add_option("--phi", swap.phi, "Swappability constant")->capture_default_str();
  c_swap->add_option("--c0", swap.c0, "Seed fraction for the m* > 0 branch")->capture_default_str();
  c_swap->add_option("--tau-prime", swap.tau_prime, "Regularity floor")->capture_default_str();
  c_swap->add_option("--diagnostics", swap.diagnostics, "Diagnostics CSV (default <out> with .csv)");
  c_swap->add_flag("--verify", swap.verify, "Treat input as an exported sequence and re-verify it");
  c_swap->add_option("--residual-bound", swap.residual_bound, "With --verify, require r1, r2 <= C/N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*c_edges) return cmd_edges(edges);
    if (*c_density) return cmd_density(density);
    if (*c_test) return cmd_test(test);
    if (*c_sim) return cmd_simulate(sim);
    if (*c_swap) return cmd_swapseq(swap);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error [io]: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitInput;
}
