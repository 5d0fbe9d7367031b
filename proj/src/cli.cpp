#include "unc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "unc/error.hpp"
#include "unc/quantum.hpp"
#include "unc/uncertainty.hpp"
#include "unc/verify.hpp"

namespace unc::cli {

namespace {

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v + 0.0);  // no "-0"
  return buf;
}

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

MeasureId classical_measure(const std::string& id, const MeasureParams& mp) {
  if (id == "shannon") return MeasureId::shannon();
  if (id == "renyi") return MeasureId::renyi(mp.alpha);
  if (id == "hartley") return MeasureId::hartley();
  if (id == "bhattacharyya") return MeasureId::bhattacharyya();
  if (id == "min-entropy") return MeasureId::min_entropy();
  if (id == "down-renyi") return MeasureId::down_renyi(mp.gamma);
  if (id == "js" || id == "jensen-shannon") return MeasureId::jensen_shannon();
  if (id == "tsallis") return MeasureId::tsallis(mp.beta);
  if (id == "down-tsallis") return MeasureId::down_tsallis(mp.beta);
  if (id == "hellinger") return MeasureId::hellinger();
  if (id == "absolute") return MeasureId::absolute();
  usage("unknown classical measure '" + id + "'");
}

bool is_quantum_id(const std::string& id) {
  static const char* names[] = {"bures", "q-hellinger", "l1", "hs", "schatten", "entrywise",
                                "gen-renyi", "gen-tsallis", "von-neumann"};
  return std::find(std::begin(names), std::end(names), id) != std::end(names);
}

QDistanceSpec quantum_spec(const std::string& id, const MeasureParams& mp) {
  if (id == "bures") return QDistanceSpec::bures();
  if (id == "hellinger" || id == "q-hellinger") return QDistanceSpec::hellinger();
  if (id == "l1") return QDistanceSpec::schatten(1.0);
  if (id == "hs") return QDistanceSpec::hilbert_schmidt();
  if (id == "schatten") return QDistanceSpec::schatten(mp.p);
  if (id == "entrywise") return QDistanceSpec::entrywise(mp.p);
  if (id == "gen-renyi") return QDistanceSpec::gen_renyi(mp.alpha);
  if (id == "gen-tsallis") return QDistanceSpec::gen_tsallis(mp.beta);
  usage("unknown quantum measure '" + id + "'");
}

double quantum_value(const std::string& id, const MeasureParams& mp, const DensityMatrix& rho) {
  if (id == "shannon" || id == "von-neumann") return von_neumann_entropy(rho);
  return induced_quantum_uncertainty(quantum_spec(id, mp), rho);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    if (end > start) out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Normalize parse_normalize(const std::string& s) {
  if (s == "none") return Normalize::None;
  if (s == "paper") return Normalize::Paper;
  if (s == "all") return Normalize::All;
  usage("--normalize must be none, paper or all");
}

void apply_normalization(SweepColumn& col, double max, bool enabled) {
  if (!enabled) return;
  if (!(max > 0.0)) throw Error(ErrorCode::InvalidDimension, col.label + " has no positive maximum");
  col.divisor = max;
  for (double& v : col.values) v /= max;
}

ProbabilityDistribution load_distribution(const std::string& inline_dist, const std::string& file) {
  if (!inline_dist.empty() && !file.empty()) usage("give --dist or --dist-file, not both");
  if (!inline_dist.empty()) return parse_distribution(inline_dist);
  if (file.empty()) usage("a distribution is required (--dist or --dist-file)");
  std::ifstream in(file);
  if (!in) usage("cannot open " + file);
  return read_distribution(in);
}

DensityMatrix load_density_matrix(const std::string& file) {
  std::ifstream in(file);
  if (!in) usage("cannot open " + file);
  return read_density_matrix(in);
}

}  // namespace

std::vector<double> make_grid(double step, double max_step) {
  if (!(step > 0.0 && step <= max_step)) {
    usage("grid step must be in (0, " + fmt12(max_step) + "]");
  }
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double x = static_cast<double>(i) * step;
    if (x > 1.0 + 1e-12) break;
    grid.push_back(std::min(x, 1.0));
  }
  if (grid.back() < 1.0 - 1e-12) grid.push_back(1.0);
  return grid;
}

SweepResult sweep_classical(const std::vector<std::string>& measures, double step, Normalize mode,
                            const MeasureParams& params) {
  if (measures.empty()) usage("measure list is empty");
  SweepResult r{"p", make_grid(step, 0.5), {}};
  for (const auto& id : measures) {
    const auto m = classical_measure(id, params);
    SweepColumn col{id, {}, 1.0};
    col.values.reserve(r.grid.size());
    for (double p : r.grid) col.values.push_back(closed_form(m, make_distribution({p, 1.0 - p})));
    const bool on = mode == Normalize::All ||
                    (mode == Normalize::Paper && (id == "hellinger" || id == "absolute"));
    apply_normalization(col, max_value(m, 2), on);
    r.columns.push_back(std::move(col));
  }
  return r;
}

SweepResult sweep_quantum(const std::vector<std::string>& measures, double step, Normalize mode,
                          const MeasureParams& params) {
  if (measures.empty()) usage("measure list is empty");
  SweepResult r{"p", make_grid(step, 1.0), {}};
  const auto mixed = maximally_mixed(2);
  for (const auto& id : measures) {
    SweepColumn col{id, {}, 1.0};
    for (double p : r.grid) {
      col.values.push_back(quantum_value(id, params, diagonal_state(make_distribution({(1.0 + p) / 2, (1.0 - p) / 2}))));
    }
    const bool on = mode == Normalize::All ||
                    (mode == Normalize::Paper && (id == "bures" || id == "hellinger" || id == "q-hellinger"));
    apply_normalization(col, quantum_value(id, params, mixed), on);
    r.columns.push_back(std::move(col));
  }
  return r;
}

std::string to_csv(const SweepResult& result) {
  std::string out = result.parameter;
  for (const auto& c : result.columns) out += "," + c.label;
  out += "\n";
  for (std::size_t i = 0; i < result.grid.size(); ++i) {
    out += fmt12(result.grid[i]);
    for (const auto& c : result.columns) out += "," + fmt12(c.values[i]);
    out += "\n";
  }
  return out;
}

int print_reports(const std::vector<verify::PropertyReport>& reports, std::ostream& out) {
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out << verify::serialize(r);
    if (!r.passed()) ++failed;
  }
  out << "SUMMARY reports=" << reports.size() << " failed=" << failed << "\n";
  return failed == 0 ? 0 : 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uncertainty measures induced by divergences"};
  app.require_subcommand(1);

  std::string id;
  std::string dist;
  std::string dist_file;
  std::string dm_file;
  std::string normalize = "none";
  std::string measure_list;
  std::string suite = "all";
  double grid_step = 0.01;
  std::uint64_t seed = 7;
  std::size_t trials = 0;
  MeasureParams mp;

  auto* measure = app.add_subcommand("measure", "Evaluate one measure on a distribution or density matrix");
  measure->add_option("--id", id, "Measure name")->required();
  measure->add_option("--alpha", mp.alpha, "Renyi order");
  measure->add_option("--beta", mp.beta, "Tsallis order");
  measure->add_option("--gamma", mp.gamma, "Down-Renyi order");
  measure->add_option("--p", mp.p, "Norm order for schatten and entrywise");
  measure->add_option("--dist", dist, "Comma-separated probabilities");
  measure->add_option("--dist-file", dist_file, "File with one distribution");
  measure->add_option("--dm-file", dm_file, "Density matrix file");

  auto* sweep_c = app.add_subcommand("sweep-classical", "CSV sweep over the binary family {p, 1-p}");
  auto* sweep_q = app.add_subcommand("sweep-quantum", "CSV sweep over p|0><0| + (1-p) I/2");
  for (auto* sub : {sweep_c, sweep_q}) {
    sub->add_option("--grid-step", grid_step, "Grid spacing");
    sub->add_option("--normalize", normalize, "none, paper or all");
    sub->add_option("--measures", measure_list, "Comma-separated column names");
    sub->add_option("--alpha", mp.alpha, "Renyi order");
    sub->add_option("--beta", mp.beta, "Tsallis order");
    sub->add_option("--gamma", mp.gamma, "Down-Renyi order");
    sub->add_option("--p", mp.p, "Norm order");
  }

  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", suite, "classical, quantum, errata or all");
  verify_cmd->add_option("--seed", seed, "Base seed");
  verify_cmd->add_option("--trials", trials, "Override every trial count");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (measure->parsed()) {
      double v = 0.0;
      if (is_quantum_id(id)) {
        if (dm_file.empty()) usage(id + " needs --dm-file");
        v = quantum_value(id, mp, load_density_matrix(dm_file));
      } else if (!dm_file.empty()) {
        if (id != "shannon") usage(id + " takes a distribution, not a density matrix");
        v = von_neumann_entropy(load_density_matrix(dm_file));
      } else {
        const auto m = classical_measure(id, mp);
        v = closed_form(m, load_distribution(dist, dist_file));
      }
      out << fmt12(v) << "\n";
      return 0;
    }
    if (sweep_c->parsed() || sweep_q->parsed()) {
      const auto mode = parse_normalize(normalize);
      if (sweep_c->parsed()) {
        const auto cols = measure_list.empty() ? std::vector<std::string>{"shannon", "js", "absolute", "hellinger"}
                                               : split_list(measure_list);
        out << to_csv(sweep_classical(cols, grid_step, mode, mp));
      } else {
        const auto cols = measure_list.empty() ? std::vector<std::string>{"bures", "l1", "hs", "shannon"}
                                               : split_list(measure_list);
        out << to_csv(sweep_quantum(cols, grid_step, mode, mp));
      }
      return 0;
    }

    verify::SuiteOptions opts;
    opts.seed = seed;
    if (trials > 0) {
      opts.classical_trials = opts.oracle_trials = opts.quantum_trials = opts.unitary_trials = trials;
    }
    std::vector<verify::PropertyReport> reports;
    auto append = [&reports](std::vector<verify::PropertyReport> more) {
      for (auto& r : more) reports.push_back(std::move(r));
    };
    if (suite == "classical" || suite == "all") append(verify::run_classical_suite(opts));
    if (suite == "quantum" || suite == "all") append(verify::run_quantum_suite(opts));
    if (suite == "errata" || suite == "all") append(verify::run_errata_suite());
    if (reports.empty()) usage("--suite must be classical, quantum, errata or all");

    return print_reports(reports, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace unc::cli
