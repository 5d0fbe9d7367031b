#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unc/distribution.hpp"
#include "unc/verify.hpp"

namespace unc::cli {

enum class Normalize { None, Paper, All };

struct SweepColumn {
  std::string label;
  std::vector<double> values;
  double divisor = 1.0;  // 1 when the column is left unnormalized
};

struct SweepResult {
  std::string parameter;
  std::vector<double> grid;
  std::vector<SweepColumn> columns;
};

/// 0, step, 2 step, ... up to 1; 1 itself is appended when step does not divide it.
/// Throws ParseError unless step is in (0, max_step].
std::vector<double> make_grid(double step, double max_step = 1.0);

struct MeasureParams {
  double alpha = 2.0;
  double beta = 2.0;
  double gamma = 0.5;
  double p = 1.0;  // order of the Schatten and entrywise norms
};

/// Binary family {p, 1 - p}. Column names: shannon, renyi, hartley, bhattacharyya,
/// min-entropy, down-renyi, js, tsallis, down-tsallis, hellinger, absolute.
SweepResult sweep_classical(const std::vector<std::string>& measures, double step, Normalize mode,
                            const MeasureParams& params = {});

/// rho = p |0><0| + (1 - p) I/2. Column names: bures, hellinger, l1, hs, shannon,
/// schatten, entrywise, gen-renyi, gen-tsallis.
SweepResult sweep_quantum(const std::vector<std::string>& measures, double step, Normalize mode,
                          const MeasureParams& params = {});

/// Header then one row per grid point; %.12g, '\n' line endings.
std::string to_csv(const SweepResult& result);

/// Serialized reports plus a SUMMARY line; returns 0 when every report passed, else 1.
int print_reports(const std::vector<verify::PropertyReport>& reports, std::ostream& out);

/// Exit codes: 0 success, 1 property failure, 2 usage or validation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unc::cli
