#pragma once

// Text formats shared by the CLI and the tests: JSON documents, CSV tables,
// line-delimited swap records, and atomic file output.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpedge/edges.hpp"
#include "mpedge/error.hpp"
#include "mpedge/manova.hpp"
#include "mpedge/mc.hpp"
#include "mpedge/measure.hpp"
#include "mpedge/population.hpp"
#include "mpedge/swap.hpp"
#include "mpedge/tw_test.hpp"

namespace mpedge::io {

using json = nlohmann::json;
namespace fs = std::filesystem;

inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

inline std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Writes to a sibling temporary and renames it over `path`.
inline void atomic_write(const fs::path& path, std::string_view content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::InvalidInput, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) fail(ErrorKind::InvalidInput, "short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

// ---------------------------------------------------------------- parsing

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const json& field(const json& obj, const std::string& key, const std::string& ctx) {
  if (!obj.is_object()) fail(ErrorKind::InvalidInput, ctx + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(ErrorKind::InvalidInput, ctx + ": missing field '" + key + "'");
  return *it;
}

inline double number(const json& v, const std::string& ctx) {
  if (!v.is_number()) fail(ErrorKind::InvalidInput, ctx + ": expected a number");
  return v.get<double>();
}

inline std::int64_t integer(const json& v, const std::string& ctx) {
  if (v.is_number_integer()) return v.get<std::int64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<std::int64_t>(d);
  }
  fail(ErrorKind::InvalidInput, ctx + ": expected an integer");
}

inline double number_or(const json& obj, const std::string& key, double def, const std::string& ctx) {
  const auto it = obj.find(key);
  return it == obj.end() ? def : number(*it, ctx + "." + key);
}

inline json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

inline double from_finite_or_string(const json& v, const std::string& ctx) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
    fail(ErrorKind::InvalidInput, ctx + ": unknown sentinel '" + s + "'");
  }
  return number(v, ctx);
}

}  // namespace detail

/// Parses JSON text, reporting syntax errors with line and column.
inline json parse_json(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::string where = e.byte > 0 ? detail::line_col(text, e.byte - 1) : "start of input";
    fail(ErrorKind::InvalidInput, source + ": JSON syntax error at " + where);
  }
}

inline PopulationSpec population_from_json(const json& doc, const std::string& source = "population",
                                           const PopulationBounds& bounds = {}) {
  const std::int64_t n_dim = detail::integer(detail::field(doc, "n_dim", source), source + ".n_dim");
  const json& arr = detail::field(doc, "entries", source);
  if (!arr.is_array()) fail(ErrorKind::InvalidInput, source + ".entries: expected an array");
  if (arr.empty()) fail(ErrorKind::InvalidInput, source + ".entries: must not be empty");
  std::vector<PopulationEntry> entries;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string ctx = source + ".entries[" + std::to_string(i) + "]";
    entries.push_back({detail::number(detail::field(arr[i], "t", ctx), ctx + ".t"),
                       detail::integer(detail::field(arr[i], "mult", ctx), ctx + ".mult")});
    if (entries.back().mult <= 0) fail(ErrorKind::InvalidInput, ctx + ".mult: must be positive");
  }
  try {
    return PopulationSpec(std::move(entries), n_dim, bounds);
  } catch (const Error& e) {
    fail(e.kind(), source + ": " + e.what());
  }
}

inline json to_json(const PopulationSpec& pop) {
  json entries = json::array();
  for (const auto& e : pop.entries()) entries.push_back({{"t", e.t}, {"mult", e.mult}});
  return {{"n_dim", pop.n_dim()}, {"entries", std::move(entries)}};
}

inline OneWayDesign oneway_from_json(const json& doc, const std::string& source = "design") {
  OneWayDesign d;
  d.n = detail::integer(detail::field(doc, "n", source), source + ".n");
  d.p = detail::integer(detail::field(doc, "p", source), source + ".p");
  d.J = detail::integer(detail::field(doc, "J", source), source + ".J");
  const auto it = doc.find("I");
  d.I = it != doc.end() ? detail::integer(*it, source + ".I") : (d.J > 0 ? d.n / d.J : 0);
  d.sigma1_sq = detail::number_or(doc, "sigma1_sq", 0.0, source);
  d.sigma2_sq = detail::number_or(doc, "sigma2_sq", 1.0, source);
  d.validate();
  return d;
}

inline json to_json(const OneWayDesign& d) {
  return {{"n", d.n}, {"p", d.p}, {"I", d.I}, {"J", d.J}, {"sigma1_sq", d.sigma1_sq}, {"sigma2_sq", d.sigma2_sq}};
}

namespace detail {

// Numeric rows of a comma- or whitespace-separated table. Blank lines and
// lines starting with '#' are skipped; a leading non-numeric row is a header.
struct CsvRows {
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> line_numbers;
};

inline CsvRows csv_rows(std::string_view text, const std::string& source) {
  CsvRows out;
  auto& rows = out.rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t' || c == '\r') c = ' ';
    std::istringstream ls(line);
    std::vector<double> row;
    std::string tok;
    bool header = false;
    while (ls >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        if (rows.empty() && row.empty()) {
          header = true;
          break;
        }
        fail(ErrorKind::InvalidInput, source + ": line " + std::to_string(line_no) + ": '" + tok + "' is not a number");
      }
      row.push_back(v);
    }
    if (header) continue;
    rows.push_back(std::move(row));
    out.line_numbers.push_back(line_no);
  }
  if (rows.empty()) fail(ErrorKind::InvalidInput, source + ": no numeric rows");
  return out;
}

}  // namespace detail

inline Eigen::MatrixXd matrix_from_csv(std::string_view text, const std::string& source) {
  const auto t = detail::csv_rows(text, source);
  const std::size_t cols = t.rows.front().size();
  for (std::size_t i = 1; i < t.rows.size(); ++i)
    if (t.rows[i].size() != cols)
      fail(ErrorKind::ShapeError, source + ": line " + std::to_string(t.line_numbers[i]) + " has " +
                                      std::to_string(t.rows[i].size()) + " fields, expected " + std::to_string(cols));
  Eigen::MatrixXd m(static_cast<Eigen::Index>(t.rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = t.rows[i][j];
  return m;
}

/// Every number of a table, row by row; rows may differ in length.
inline std::vector<double> values_from_csv(std::string_view text, const std::string& source) {
  std::vector<double> out;
  for (const auto& row : detail::csv_rows(text, source).rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

/// General design document: {"p", "sigma_sq": [...], "U": [paths], "B": path,
/// optional "X": path, optional "norm_bound"}. Paths resolve against `base`.
inline GeneralDesign general_design_from_json(const json& doc, const fs::path& base,
                                              const std::string& source = "design") {
  GeneralDesign d;
  d.p = detail::integer(detail::field(doc, "p", source), source + ".p");
  const json& s = detail::field(doc, "sigma_sq", source);
  const json& u = detail::field(doc, "U", source);
  if (!s.is_array() || !u.is_array()) fail(ErrorKind::InvalidInput, source + ": sigma_sq and U must be arrays");
  for (std::size_t i = 0; i < s.size(); ++i) d.sigma_sq.push_back(detail::number(s[i], source + ".sigma_sq[" + std::to_string(i) + "]"));
  auto load = [&](const json& v, const std::string& ctx) {
    if (!v.is_string()) fail(ErrorKind::InvalidInput, ctx + ": expected a file path");
    const fs::path p = base / v.get<std::string>();
    return matrix_from_csv(read_text(p), p.string());
  };
  for (std::size_t i = 0; i < u.size(); ++i) d.U.push_back(load(u[i], source + ".U[" + std::to_string(i) + "]"));
  d.B = load(detail::field(doc, "B", source), source + ".B");
  if (const auto it = doc.find("X"); it != doc.end()) d.X_fixed = load(*it, source + ".X");
  d.norm_bound = detail::number_or(doc, "norm_bound", d.norm_bound, source);
  d.validate();
  return d;
}

// ---------------------------------------------------------------- reports

inline json to_json(const EdgeInfo& e) {
  json out = {{"e_star", e.e_star},
              {"m_star", detail::finite_or_string(e.m_star)},
              {"gamma", e.gamma ? json(*e.gamma) : json(nullptr)},
              {"side", to_string(e.side)},
              {"extremum_side", to_string(e.extremum_side)},
              {"soft", e.soft},
              {"margin", e.regularity_margin}};
  return out;
}

inline EdgeInfo edge_from_json(const json& j, const std::string& ctx = "edge") {
  EdgeInfo e;
  e.e_star = detail::number(detail::field(j, "e_star", ctx), ctx + ".e_star");
  e.m_star = detail::from_finite_or_string(detail::field(j, "m_star", ctx), ctx + ".m_star");
  e.q_star = std::isfinite(e.m_star) ? 1.0 / e.m_star : 0.0;
  const json& g = detail::field(j, "gamma", ctx);
  if (!g.is_null()) e.gamma = detail::number(g, ctx + ".gamma");
  e.soft = detail::field(j, "soft", ctx).get<bool>();
  e.side = detail::field(j, "side", ctx).get<std::string>() == "left" ? EdgeSide::Left : EdgeSide::Right;
  e.extremum_side = j.value("extremum_side", std::string(to_string(e.side))) == "left" ? EdgeSide::Left : EdgeSide::Right;
  e.regularity_margin = detail::number(detail::field(j, "margin", ctx), ctx + ".margin");
  if (e.gamma) e.curvature = (e.side == EdgeSide::Right ? 2.0 : -2.0) / (*e.gamma * *e.gamma);
  return e;
}

inline json to_json(const SupportReport& r) {
  json edges = json::array();
  for (const auto& e : r.edges) edges.push_back(to_json(e));
  json intervals = json::array();
  for (const auto& iv : r.intervals) intervals.push_back({{"lo", iv.lo}, {"hi", iv.hi}});
  return {{"edges", std::move(edges)},
          {"intervals", std::move(intervals)},
          {"atom_at_zero", r.atom_at_zero},
          {"isolated_zero", r.isolated_zero_flag}};
}

inline std::string density_csv(const DensityGrid& g) {
  std::ostringstream os;
  os << std::setprecision(17) << "x,f0\n";
  for (const auto& p : g.points) os << p.x << ',' << p.f0 << '\n';
  os << "# atom_at_zero=" << g.atom_at_zero << '\n';
  return os.str();
}

inline json to_json(const TestReport& r) {
  json out = {{"edge", to_json(r.edge)},
              {"lambda_used", r.lambda_used},
              {"statistic", r.statistic},
              {"p_value", r.p_value},
              {"alpha", r.alpha},
              {"reject", r.reject},
              {"window_delta", r.window_delta}};
  if (r.plugin_variances) out["plugin_variances"] = *r.plugin_variances;
  return out;
}

/// Coverage table: one row per level, per design the empirical CDF and its
/// standard error.
inline std::string coverage_csv(const std::vector<std::pair<std::string, CoverageResult>>& designs) {
  std::ostringstream os;
  os << std::setprecision(10) << "level,tw_quantile";
  for (const auto& [label, c] : designs) os << ',' << label << ',' << label << "_se";
  os << '\n';
  if (designs.empty()) return os.str();
  const auto& ref = designs.front().second;
  for (std::size_t k = 0; k < ref.levels.size(); ++k) {
    os << ref.levels[k] << ',' << ref.quantiles[k];
    for (const auto& [label, c] : designs) os << ',' << c.values[k] << ',' << c.standard_errors[k];
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- swap records

inline json to_json(const SwapState& s) {
  json out = {{"step", s.step},
              {"digest", hex64(diagonal_digest(s.diag))},
              {"E", s.edge.e_star},
              {"m", s.edge.m_star},
              {"gamma", s.edge.gamma.value_or(0.0)},
              {"margin", s.edge.regularity_margin},
              {"phase", to_string(s.phase)},
              {"n_dim", s.n_dim},
              {"scale", s.scale_factor}};
  if (s.swapped_index) {
    out["index"] = *s.swapped_index;
    out["new_t"] = s.new_t;
  }
  return out;
}

/// First record carries the initial diagonal so the file replays on its own.
inline std::string swap_jsonl(const std::vector<SwapState>& seq) {
  std::string out;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    json rec = to_json(seq[k]);
    if (k == 0) rec["diag"] = seq[k].diag;
    out += rec.dump();
    out += '\n';
  }
  return out;
}

struct SwapRecord {
  std::size_t step = 0;
  std::string digest;
  double e = 0.0, m = 0.0, gamma = 0.0, margin = 0.0;
  SwapPhase phase = SwapPhase::Done;
  std::int64_t n_dim = 0;
  std::optional<std::size_t> index;
  double new_t = 0.0;
  std::vector<double> diag;
};

inline std::vector<SwapRecord> parse_swap_jsonl(std::string_view text, const std::string& source) {
  std::vector<SwapRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string ctx = source + ": line " + std::to_string(line_no);
    const json j = parse_json(line, ctx);
    SwapRecord r;
    r.step = static_cast<std::size_t>(detail::integer(detail::field(j, "step", ctx), ctx + ".step"));
    r.digest = detail::field(j, "digest", ctx).get<std::string>();
    r.e = detail::number(detail::field(j, "E", ctx), ctx + ".E");
    r.m = detail::number(detail::field(j, "m", ctx), ctx + ".m");
    r.gamma = detail::number(detail::field(j, "gamma", ctx), ctx + ".gamma");
    r.margin = detail::number(detail::field(j, "margin", ctx), ctx + ".margin");
    r.phase = parse_swap_phase(detail::field(j, "phase", ctx).get<std::string>());
    r.n_dim = detail::integer(detail::field(j, "n_dim", ctx), ctx + ".n_dim");
    if (const auto it = j.find("index"); it != j.end()) {
      r.index = static_cast<std::size_t>(detail::integer(*it, ctx + ".index"));
      r.new_t = detail::number(detail::field(j, "new_t", ctx), ctx + ".new_t");
    }
    if (const auto it = j.find("diag"); it != j.end()) r.diag = it->get<std::vector<double>>();
    out.push_back(std::move(r));
  }
  if (out.empty()) fail(ErrorKind::InvalidInput, source + ": no records");
  if (out.front().diag.empty()) fail(ErrorKind::InvalidInput, source + ": first record lacks the initial diagonal");
  return out;
}

inline std::string swap_diagnostics_csv(const std::vector<SwapState>& seq) {
  std::ostringstream os;
  os << std::setprecision(12)
     << "step,phase,index,l1_t_diff,m_diff,E_diff,gamma_diff,r1,r2,r_edge,A4,margin\n";
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const auto d = swap_diagnostics(seq[k - 1], seq[k]);
    os << k << ',' << to_string(seq[k].phase) << ',' << *seq[k].swapped_index << ',' << d.l1_t_diff << ','
       << d.m_diff << ',' << d.E_diff << ',' << d.gamma_diff << ',' << d.sum_rule_1_residual << ','
       << d.sum_rule_2_residual << ',' << d.edge_identity_residual << ',' << d.A4 << ','
       << seq[k].edge.regularity_margin << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- manifest

struct RunManifest {
  std::string command;
  std::string input_digest;
  std::optional<std::uint64_t> seed;
  std::string version;
  double wall_time_s = 0.0;
  std::vector<std::string> outputs;
  json parameters = json::object();
};

inline json to_json(const RunManifest& m) {
  json out = {{"command", m.command},
              {"input_digest", m.input_digest},
              {"version", m.version},
              {"wall_time_s", m.wall_time_s},
              {"outputs", m.outputs},
              {"parameters", m.parameters}};
  out["seed"] = m.seed ? json(*m.seed) : json(nullptr);
  return out;
}

}  // namespace mpedge::io
