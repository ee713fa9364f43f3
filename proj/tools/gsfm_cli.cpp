// Copyright 2026 The gsfm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: one subcommand per experiment, writing CSV (default) or
// JSON with a key=value metadata header.
//
// Exit codes: 0 success, 2 invalid parameters, 3 I/O failure, 1 anything else.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gsfm/anneal.hpp"
#include "gsfm/error.hpp"
#include "gsfm/ffgsp.hpp"
#include "gsfm/fourier.hpp"
#include "gsfm/groundtruth.hpp"
#include "gsfm/grid.hpp"
#include "gsfm/spectrum.hpp"

#ifndef GSFM_VERSION
#define GSFM_VERSION "0.0.0"
#endif

using namespace gsfm;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitError = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool quiet = false;

void progress(const std::string& command, const std::string& msg) {
  if (!quiet) std::cerr << "gsfm " << command << ": " << msg << '\n';
}

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

using Cell = std::variant<double, std::int64_t, std::string, BigInt>;

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return num(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return std::get<BigInt>(c).str();
}

json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (std::isfinite(*d)) return *d;
    return num(*d);
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  const BigInt& b = std::get<BigInt>(c);
  if (b <= BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return b.convert_to<std::uint64_t>();
  }
  return b.str();
}

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Document {
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void render(std::ostream& os, const Document& doc, bool as_json) {
  if (as_json) {
    json meta = json::object();
    for (const auto& [k, v] : doc.metadata) meta[k] = v;
    json rows = json::array();
    for (const auto& r : doc.rows) {
      json row = json::array();
      for (const auto& c : r) row.push_back(cell_json(c));
      rows.push_back(std::move(row));
    }
    os << json{{"metadata", meta}, {"columns", doc.columns}, {"rows", rows}}
              .dump(1)
       << '\n';
    return;
  }
  for (const auto& [k, v] : doc.metadata) os << "# " << k << '=' << v << '\n';
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    os << (i ? "," : "") << doc.columns[i];
  }
  os << '\n';
  for (const auto& r : doc.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      os << (i ? "," : "") << cell_text(r[i]);
    }
    os << '\n';
  }
}

/// Writes to `path`, or to standard output when path is empty.
void emit(const std::string& path, const Document& doc, bool as_json) {
  if (path.empty()) {
    render(std::cout, doc, as_json);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  render(out, doc, as_json);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

/// "<stem><suffix><ext>" where ext is the extension of `out` (".csv" or
/// ".json" by default).
std::string derived_path(const std::string& out, const std::string& suffix,
                         bool as_json) {
  const auto slash = out.find_last_of('/');
  const auto dot = out.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    return out.substr(0, dot) + suffix + out.substr(dot);
  }
  return out + suffix + (as_json ? ".json" : ".csv");
}

std::string schedule_suffix(const ScheduleParams& s) {
  return "_T" + num(s.T) + "_M" + std::to_string(s.M);
}

// Every option of the subcommand with its effective value.
Metadata echo_options(const CLI::App& sub) {
  Metadata meta{{"command", sub.get_name()}, {"gsfm_version", GSFM_VERSION}};
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help") continue;
    std::string value;
    if (opt->get_expected_max() == 0) {
      value = opt->count() > 0 ? "true" : "false";
    } else if (opt->count() > 0) {
      const auto& res = opt->results();
      for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
    } else {
      value = opt->get_default_str();
    }
    meta.emplace_back(name, value);
  }
  return meta;
}

std::vector<double> x_grid(double lo, double hi, std::size_t points) {
  if (points == 0) throw InvalidArgument("--points must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InvalidArgument("x window must be finite");
  }
  if (points == 1 ? hi < lo : !(hi > lo)) {
    throw InvalidArgument("x window must satisfy x-min < x-max");
  }
  return linspace(lo, hi, points);
}

Reference parse_reference(const std::string& s) {
  return s == "ite" ? Reference::ite : Reference::exact;
}

Splitting parse_splitting(const std::string& s) {
  return s == "dense" ? Splitting::dense_exact : Splitting::strang_split;
}

double parse_window_bound(const std::string& text) {
  std::string s = text;
  double scale = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    scale = std::numbers::pi;
    s.resize(s.size() - 2);
    if (s.empty()) return scale;
  }
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InvalidArgument("cannot parse window bound '" + text + "'");
  }
  return v * scale;
}

/// "a:b" with optional "pi" suffixes, e.g. "0:2pi" or "0:4".
Window parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw InvalidArgument("window must look like 'a:b', got '" + text + "'");
  }
  Window w{parse_window_bound(text.substr(0, colon)),
           parse_window_bound(text.substr(colon + 1))};
  w.validate();
  return w;
}

StepRule parse_step_rule(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg =
      colon == std::string::npos ? std::string() : text.substr(colon + 1);
  double v = 0;
  const auto res = std::from_chars(arg.data(), arg.data() + arg.size(), v);
  if (arg.empty() || res.ec != std::errc() || res.ptr != arg.data() + arg.size()) {
    throw InvalidArgument("--m must be fixed:K or prop:c, got '" + text + "'");
  }
  if (kind == "fixed") {
    if (v != std::floor(v)) throw InvalidArgument("fixed:K needs an integer K");
    return StepRule::fixed(static_cast<long>(v));
  }
  if (kind == "prop") return StepRule::proportional(v);
  throw InvalidArgument("--m must be fixed:K or prop:c, got '" + text + "'");
}

// Options shared by the chain-based subcommands.
struct ChainOptions {
  int n = 4;
  double h = 0.2;
  bool open = false;

  void add_to(CLI::App* sub) {
    sub->add_option("--n", n, "number of spins N")->capture_default_str();
    sub->add_option("--h", h, "transverse field h")->capture_default_str();
    sub->add_flag("--open-boundary", open, "open instead of periodic chain");
  }
  ChainParams chain() const {
    const ChainParams c{n, h, !open};
    c.at(0.0).validate();
    return c;
  }
};

struct OutputOptions {
  std::string out;
  bool json = false;

  void add_to(CLI::App* sub) {
    sub->add_option("--out", out, "output file (standard output if omitted)");
    sub->add_flag("--json", json, "write a JSON document instead of CSV");
  }
  const std::string& require_out(const std::string& why) const {
    if (out.empty()) throw InvalidArgument("--out is required " + why);
    return out;
  }
};

struct XWindowOptions {
  double x_min = 0.0;
  double x_max = 4.0;
  std::size_t points = 201;

  void add_to(CLI::App* sub) {
    sub->add_option("--x-min", x_min, "lower end of the x grid")
        ->capture_default_str();
    sub->add_option("--x-max", x_max, "upper end of the x grid")
        ->capture_default_str();
    sub->add_option("--points", points, "number of grid points")
        ->capture_default_str();
  }
  std::vector<double> grid() const { return x_grid(x_min, x_max, points); }
};

// ---------------------------------------------------------------------------

struct MagnetizationCmd {
  ChainOptions chain;
  XWindowOptions xs;
  OutputOptions io;

  void run(const CLI::App& sub) const {
    const ChainParams c = chain.chain();
    const auto grid = xs.grid();
    progress("magnetization", std::to_string(grid.size()) + " points");
    const auto curve = magnetization_curve(c.n_qubits, c.h, grid, c.periodic);
    Document doc{echo_options(sub), {"x", "mag_abs_per_site"}, {}};
    for (const auto& p : curve) doc.rows.push_back({p.x, p.mag_abs_per_site});
    emit(io.out, doc, io.json);
  }
};

struct FidelityScanCmd {
  ChainOptions chain;
  XWindowOptions xs;
  OutputOptions io;
  std::optional<double> T;
  std::optional<long> M;
  std::string preset;
  std::string reference = "exact";
  std::string splitting = "strang";
  double tau = 20.0;
  double dtau = 0.01;

  void run(const CLI::App& sub) const {
    std::vector<ScheduleParams> schedules;
    if (!preset.empty()) {
      if (preset != "fig2b") throw InvalidArgument("unknown preset '" + preset + "'");
      if (T || M) throw InvalidArgument("--preset excludes --t and --m");
      schedules = {{10, 100}, {100, 1000}, {1000, 10000}};
      io.require_out("with --preset (one file per schedule)");
    } else {
      if (!T || !M) throw InvalidArgument("give --t and --m, or --preset");
      schedules = {{*T, *M}};
    }
    const ChainParams c = chain.chain();
    const auto grid = xs.grid();
    for (const auto& s : schedules) {
      s.validate();
      progress("fidelity-scan", "T=" + num(s.T) + " M=" + std::to_string(s.M));
      const auto scan = fidelity_scan(c, s, grid, parse_reference(reference),
                                      parse_splitting(splitting), {tau, dtau});
      Document doc{echo_options(sub), {"x", "F", "F_approx", "F_approx_tv"}, {}};
      doc.metadata.emplace_back("T", num(s.T));
      doc.metadata.emplace_back("M", std::to_string(s.M));
      for (std::size_t i = 0; i < grid.size(); ++i) {
        doc.rows.push_back(
            {scan.x[i], scan.full[i], scan.approx[i], scan.approx_tv[i]});
      }
      emit(preset.empty() ? io.out
                          : derived_path(io.out, schedule_suffix(s), io.json),
           doc, io.json);
    }
  }
};

struct InfidelityCmd {
  ChainOptions chain;
  OutputOptions io;
  std::vector<double> t_list{10, 20, 50, 100, 200, 500, 1000};
  std::string rule = "prop:0.01";
  double x = 1.9;
  std::string reference = "exact";
  std::string splitting = "strang";

  void run(const CLI::App& sub) const {
    const StepRule steps = parse_step_rule(rule);
    if (t_list.empty()) throw InvalidArgument("--t-list is empty");
    const ChainParams c = chain.chain();
    progress("infidelity-vs-t", std::to_string(t_list.size()) + " values of T");
    const auto rows = infidelity_vs_T(c, x, t_list, steps,
                                      parse_reference(reference),
                                      parse_splitting(splitting));
    Document doc{echo_options(sub), {"T", "M", "infid", "infid_approx"}, {}};
    for (const auto& r : rows) {
      doc.rows.push_back({r.T, std::int64_t{r.M}, r.infidelity,
                          r.infidelity_approx});
    }
    emit(io.out, doc, io.json);
  }
};

struct BasisCmd {
  ChainOptions chain;
  XWindowOptions xs;
  OutputOptions io;
  double T = 1000;
  long M = 10000;
  std::string splitting = "strang";

  void run(const CLI::App& sub) const {
    const ChainParams c = chain.chain();
    const ScheduleParams s{T, M};
    s.validate();
    const auto grid = xs.grid();
    progress("basis", std::to_string(grid.size()) + " points");
    const Eigen::MatrixXd phi =
        basis_functions(c, s, grid, parse_splitting(splitting));
    Document doc{echo_options(sub), {"x", "j", "phi", "phi_exact"}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto exact =
          exact_ground_state(ising_dense(c.at(grid[i]))).state.probabilities();
      for (std::size_t j = 0; j < exact.size(); ++j) {
        doc.rows.push_back({grid[i], static_cast<std::int64_t>(j),
                            phi(static_cast<Eigen::Index>(j),
                                static_cast<Eigen::Index>(i)),
                            exact[j]});
      }
    }
    emit(io.out, doc, io.json);
  }
};

struct SpectrumCmd {
  OutputOptions io;
  std::string kind = "gsp";
  int n = 4;
  long M = 5;
  std::optional<double> T;
  bool weighted = false;

  void run(const CLI::App& sub) const {
    EigenvalueSet ev;
    long uploads = M;
    if (kind == "gsp") {
      if (n < 1 || n > 62) throw InvalidArgument("--n must lie in [1, 62]");
      ev = ising_eigenvalue_set(n);
    } else {
      if (sub.count("--m") > 0 || T) {
        throw InvalidArgument("--m and --t apply to --kind gsp only");
      }
      if (n < 1 || n > 30) throw InvalidArgument("--n must lie in [1, 30]");
      ev = tower_spectrum(n).eigenvalues;
      uploads = 1;
    }
    progress("spectrum", kind + " N=" + std::to_string(n) +
                             " M=" + std::to_string(uploads));
    const auto mode_u = mode_spectrum(ev, uploads, false);
    const auto mode_w = mode_spectrum(ev, uploads, true);
    const auto gap_u = gap_spectrum(mode_u);
    const auto gap_w = gap_spectrum(mode_w);

    Document doc{echo_options(sub),
                 {"spectrum", "frequency", "count", "count_unweighted",
                  "count_weighted"},
                 {}};
    doc.metadata.emplace_back("frequency_unit",
                              kind == "gsp" ? "dt^2/T" : "1");
    if (T) {
      doc.metadata.emplace_back(
          "frequency_unit_value",
          num(*T / (static_cast<double>(M) * static_cast<double>(M))));
    }
    doc.metadata.emplace_back("mode_degree", std::to_string(mode_u.degree()));
    doc.metadata.emplace_back("gap_degree", std::to_string(gap_u.degree()));
    doc.metadata.emplace_back("mode_support", std::to_string(mode_u.support_size()));
    doc.metadata.emplace_back("gap_support", std::to_string(gap_u.support_size()));
    auto add = [&](const char* name, const SpectrumHistogram& u,
                   const SpectrumHistogram& w) {
      for (const auto& [f, cu] : u.nonzero()) {
        const BigInt cw = w.count(f);
        doc.rows.push_back({std::string(name), f, weighted ? cw : cu, cu, cw});
      }
    };
    add("mode", mode_u, mode_w);
    add("gap", gap_u, gap_w);
    emit(io.out, doc, io.json);
  }
};

struct ScalingCmd {
  OutputOptions io;
  std::string model = "poly";
  int n_min = 1;
  int n_max = 12;
  double c = 1.0;

  void run(const CLI::App& sub) const {
    if (n_min < 1 || n_max < n_min || n_max > 60) {
      throw InvalidArgument("need 1 <= --n-min <= --n-max <= 60");
    }
    std::vector<int> ns;
    for (int n = n_min; n <= n_max; ++n) ns.push_back(n);
    const auto rows =
        degree_scaling(ns, model == "exp" ? GapModel::exp : GapModel::poly, c);
    Document doc{echo_options(sub),
                 {"N", "rotation_degree", "delta_min", "anneal_time",
                  "gsp_degree"},
                 {}};
    for (const auto& r : rows) {
      doc.rows.push_back({std::int64_t{r.n_qubits}, r.rotation_degree,
                          r.delta_min, r.anneal_time, r.gsp_degree});
    }
    emit(io.out, doc, io.json);
  }
};

struct CoefficientsCmd {
  ChainOptions chain;
  OutputOptions io;
  std::string preset;
  std::optional<double> T;
  std::optional<long> M;
  std::string window;
  std::size_t points = 4096;
  long k_cut = 5;
  long k_max = -1;
  bool check_resolution = false;
  std::string splitting = "strang";

  void run(const CLI::App& sub) const {
    std::vector<ScheduleParams> schedules;
    std::vector<Window> windows;
    if (!preset.empty()) {
      if (preset != "fig4") throw InvalidArgument("unknown preset '" + preset + "'");
      if (T || M) throw InvalidArgument("--preset excludes --t and --m");
      io.require_out("with --preset (one file per schedule)");
      schedules = reference_coefficient_schedules();
      windows = window.empty() ? std::vector<Window>{two_pi_window(), {0.0, 4.0}}
                               : std::vector<Window>{parse_window(window)};
    } else {
      if (!T || !M) throw InvalidArgument("give --t and --m, or --preset");
      schedules = {{*T, *M}};
      windows = {window.empty() ? two_pi_window() : parse_window(window)};
    }
    if (k_max > static_cast<long>(points / 2)) {
      throw InvalidArgument("--k-max exceeds P/2");
    }
    const ChainParams c = chain.chain();
    const Splitting split = parse_splitting(splitting);
    for (const auto& s : schedules) {
      s.validate();
      Document doc{echo_options(sub),
                   {"T", "M", "window", "k", "abs_c", "re_c", "im_c"},
                   {}};
      doc.metadata.emplace_back("T", num(s.T));
      doc.metadata.emplace_back("M", std::to_string(s.M));
      for (const auto& w : windows) {
        progress("coefficients", "T=" + num(s.T) + " M=" + std::to_string(s.M) +
                                     " window " + w.label());
        const auto report = coefficient_report(c, {s}, w, points, split).front();
        const auto& table = report.table;
        const std::string tag = "window[" + w.label() + "].";
        doc.metadata.emplace_back(tag + "length", num(w.length()));
        doc.metadata.emplace_back(tag + "harmonic_frequency",
                                  num(table.harmonic_frequency()));
        doc.metadata.emplace_back(tag + "concentration_ratio",
                                  num(concentration_ratio(table, k_cut)));
        doc.metadata.emplace_back(tag + "conjugate_asymmetry",
                                  num(report.diagnostics.conjugate_asymmetry));
        doc.metadata.emplace_back(tag + "parseval_error",
                                  num(report.diagnostics.parseval_error));
        if (check_resolution) {
          const auto r = resolution_check(c, s, w, points, 20, 1e-3, split);
          doc.metadata.emplace_back(tag + "resolution_max_change",
                                    num(r.max_change));
          doc.metadata.emplace_back(tag + "under_resolved",
                                    r.under_resolved ? "true" : "false");
          if (r.under_resolved) {
            std::cerr << "gsfm coefficients: warning: T=" << num(s.T)
                      << " M=" << s.M << " window " << w.label()
                      << " is under-resolved at P=" << points << '\n';
          }
        }
        const long lo = k_max < 0 ? table.k_min() : -k_max;
        const long hi = k_max < 0 ? table.k_max() : std::min(k_max, table.k_max());
        for (long k = lo; k <= hi; ++k) {
          const Complex ck = table.at(k);
          doc.rows.push_back({s.T, std::int64_t{s.M}, w.label(), std::int64_t{k},
                              std::abs(ck), ck.real(), ck.imag()});
        }
      }
      emit(preset.empty() ? io.out
                          : derived_path(io.out, schedule_suffix(s), io.json),
           doc, io.json);
    }
  }
};

struct FfgspCmd {
  OutputOptions io;
  std::vector<int> n_list{2};
  std::vector<double> x_list{1.0};
  double h = 0.2;
  bool open = false;
  std::string rule = "both";
  std::vector<long> ms_list{1, 2, 4, 8, 16, 32, 64};
  double threshold = kPauliPruneThreshold;

  void run(const CLI::App& sub) const {
    const std::string& out = io.require_out("(ffgsp writes three tables)");
    std::vector<CommutationRule> rules;
    if (rule != "qubitwise") rules.push_back(CommutationRule::general);
    if (rule != "general") rules.push_back(CommutationRule::qubitwise);
    if (n_list.empty() || x_list.empty() || ms_list.empty()) {
      throw InvalidArgument("--n, --x and --ms-list must be non-empty");
    }
    for (long m : ms_list) {
      if (m < 1) throw InvalidArgument("--ms-list entries must be >= 1");
    }
    const Metadata meta = echo_options(sub);
    Document words{meta, {"N", "x", "word", "re_phi", "im_phi"}, {}};
    Document groups{meta,
                    {"N", "x", "rule", "num_groups", "num_words", "universe"},
                    {}};
    Document trotter{meta, {"N", "x", "rule", "M_S", "fidelity"}, {}};
    for (int n : n_list) {
      if (n < 1 || n + 1 > kMaxPauliQubits) {
        throw InvalidArgument("--n must lie in [1, " +
                              std::to_string(kMaxPauliQubits - 1) + "]");
      }
      for (double x : x_list) {
        progress("ffgsp", "N=" + std::to_string(n) + " x=" + num(x));
        const auto g = ising_generator({n, x, h, !open});
        const auto terms = pauli_decompose(g, threshold);
        for (const auto& t : terms) {
          words.rows.push_back({std::int64_t{n}, x, t.word.to_string(),
                                t.coefficient.real(), t.coefficient.imag()});
        }
        for (CommutationRule r : rules) {
          const std::string name =
              r == CommutationRule::general ? "general" : "qubitwise";
          const auto partition = commuting_partition(terms, r);
          groups.rows.push_back(
              {std::int64_t{n}, x, name,
               static_cast<std::int64_t>(partition.groups.size()),
               static_cast<std::int64_t>(partition.num_words()),
               std::int64_t{1} << (2 * (n + 1))});
          for (const auto& p : trotterized_ff(g, partition, ms_list)) {
            trotter.rows.push_back(
                {std::int64_t{n}, x, name, std::int64_t{p.steps}, p.fidelity});
          }
        }
      }
    }
    emit(out, words, io.json);
    emit(derived_path(out, "_groups", io.json), groups, io.json);
    emit(derived_path(out, "_trotter", io.json), trotter, io.json);
  }
};

void add_reference_options(CLI::App* sub, std::string& reference,
                           std::string& splitting) {
  sub->add_option("--reference", reference, "reference ground state")
      ->check(CLI::IsMember({"exact", "ite"}))
      ->capture_default_str();
  sub->add_option("--splitting", splitting, "per-step target exponential")
      ->check(CLI::IsMember({"strang", "dense"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-state feature map experiments"};
  // "--h" is the transverse field, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", GSFM_VERSION);
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", quiet, "suppress progress messages");

  MagnetizationCmd mag;
  auto* mag_sub = app.add_subcommand("magnetization", "|<H_Z>|/N on exact ground states");
  mag.chain.add_to(mag_sub);
  mag.xs.add_to(mag_sub);
  mag.io.add_to(mag_sub);

  FidelityScanCmd fid;
  auto* fid_sub = app.add_subcommand("fidelity-scan", "F and F_approx over an x grid");
  fid.chain.add_to(fid_sub);
  fid.xs.add_to(fid_sub);
  fid.io.add_to(fid_sub);
  fid_sub->add_option("--t", fid.T, "total anneal time T");
  fid_sub->add_option("--m", fid.M, "Trotter steps M");
  fid_sub->add_option("--preset", fid.preset, "named schedule set (fig2b)");
  add_reference_options(fid_sub, fid.reference, fid.splitting);
  fid_sub->add_option("--tau", fid.tau, "ITE total imaginary time")
      ->capture_default_str();
  fid_sub->add_option("--dtau", fid.dtau, "ITE step")->capture_default_str();

  InfidelityCmd inf;
  auto* inf_sub = app.add_subcommand("infidelity-vs-t", "1-F at fixed x versus T");
  inf.chain.add_to(inf_sub);
  inf.io.add_to(inf_sub);
  inf_sub->add_option("--t-list", inf.t_list, "values of T")
      ->delimiter(',')
      ->capture_default_str();
  inf_sub->add_option("--m", inf.rule, "step rule fixed:K or prop:c (M=round(cT^2))")
      ->capture_default_str();
  inf_sub->add_option("--x", inf.x, "feature value")->capture_default_str();
  add_reference_options(inf_sub, inf.reference, inf.splitting);

  BasisCmd basis;
  auto* basis_sub = app.add_subcommand("basis", "basis functions |<j|psi_G(x)>|^2");
  basis.chain.add_to(basis_sub);
  basis.xs.add_to(basis_sub);
  basis.io.add_to(basis_sub);
  basis_sub->add_option("--t", basis.T, "total anneal time T")->capture_default_str();
  basis_sub->add_option("--m", basis.M, "Trotter steps M")->capture_default_str();
  basis_sub->add_option("--splitting", basis.splitting, "per-step target exponential")
      ->check(CLI::IsMember({"strang", "dense"}))
      ->capture_default_str();

  SpectrumCmd spec;
  auto* spec_sub = app.add_subcommand("spectrum", "exact mode and gap spectra");
  spec.io.add_to(spec_sub);
  spec_sub->add_option("--kind", spec.kind, "gsp or tower")
      ->check(CLI::IsMember({"gsp", "tower"}))
      ->capture_default_str();
  spec_sub->add_option("--n", spec.n, "number of spins N")->capture_default_str();
  spec_sub->add_option("--m", spec.M, "Trotter steps M (gsp)")->capture_default_str();
  spec_sub->add_option("--t", spec.T, "total time T, for the frequency unit T/M^2");
  spec_sub->add_flag("--weighted", spec.weighted,
                     "mirror eigenspace-weighted counts in the count column");

  ScalingCmd scaling;
  auto* scaling_sub = app.add_subcommand("scaling", "degree versus N for gap models");
  scaling.io.add_to(scaling_sub);
  scaling_sub->add_option("--gap-model", scaling.model, "poly or exp")
      ->check(CLI::IsMember({"poly", "exp"}))
      ->capture_default_str();
  scaling_sub->add_option("--n-min", scaling.n_min, "smallest N")->capture_default_str();
  scaling_sub->add_option("--n-max", scaling.n_max, "largest N")->capture_default_str();
  scaling_sub->add_option("--c", scaling.c, "gap prefactor c")->capture_default_str();

  CoefficientsCmd coef;
  auto* coef_sub = app.add_subcommand("coefficients", "Fourier coefficients of <H_Z>");
  coef.chain.add_to(coef_sub);
  coef.io.add_to(coef_sub);
  coef_sub->add_option("--preset", coef.preset, "named schedule set (fig4)");
  coef_sub->add_option("--t", coef.T, "total anneal time T");
  coef_sub->add_option("--m", coef.M, "Trotter steps M");
  coef_sub->add_option("--window", coef.window,
                       "sampling window a:b, e.g. 0:2pi (default) or 0:4");
  coef_sub->add_option("--points", coef.points, "samples P (power of two >= 64)")
      ->capture_default_str();
  coef_sub->add_option("--k-cut", coef.k_cut, "cutoff for the concentration ratio")
      ->capture_default_str();
  coef_sub->add_option("--k-max", coef.k_max, "largest |k| written (-1: all)")
      ->capture_default_str();
  coef_sub->add_flag("--check-resolution", coef.check_resolution,
                     "compare against 2P samples and flag under-resolved runs");
  coef_sub->add_option("--splitting", coef.splitting, "per-step target exponential")
      ->check(CLI::IsMember({"strang", "dense"}))
      ->capture_default_str();

  FfgspCmd ff;
  auto* ff_sub = app.add_subcommand("ffgsp", "fast-forwarded preparation and Pauli grouping");
  ff.io.add_to(ff_sub);
  ff_sub->add_option("--n,--n-list", ff.n_list, "system sizes N")
      ->delimiter(',')
      ->capture_default_str();
  ff_sub->add_option("--x,--x-list", ff.x_list, "feature values")
      ->delimiter(',')
      ->capture_default_str();
  ff_sub->add_option("--h", ff.h, "transverse field h")->capture_default_str();
  ff_sub->add_flag("--open-boundary", ff.open, "open instead of periodic chain");
  ff_sub->add_option("--rule", ff.rule, "general, qubitwise or both")
      ->check(CLI::IsMember({"general", "qubitwise", "both"}))
      ->capture_default_str();
  ff_sub->add_option("--ms-list", ff.ms_list, "Trotter step counts M_S")
      ->delimiter(',')
      ->capture_default_str();
  ff_sub->add_option("--threshold", ff.threshold, "Pauli coefficient prune threshold")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (mag_sub->parsed()) mag.run(*mag_sub);
    if (fid_sub->parsed()) fid.run(*fid_sub);
    if (inf_sub->parsed()) inf.run(*inf_sub);
    if (basis_sub->parsed()) basis.run(*basis_sub);
    if (spec_sub->parsed()) spec.run(*spec_sub);
    if (scaling_sub->parsed()) scaling.run(*scaling_sub);
    if (coef_sub->parsed()) coef.run(*coef_sub);
    if (ff_sub->parsed()) ff.run(*ff_sub);
  } catch (const IoError& e) {
    std::cerr << "gsfm: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::logic_error& e) {
    // InvalidArgument, DimensionMismatch and SizeError all land here.
    std::cerr << "gsfm: invalid parameters: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "gsfm: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
