// Copyright 2026 The covphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include "CLI11.hpp"
#include "cli/selftest.hpp"
#include "covphase/bounds.hpp"
#include "covphase/errors.hpp"
#include "covphase/oracle.hpp"

namespace covphase::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSnapTolerance = 1e-12;
constexpr int kMaxSweepPoints = 1'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

// Runs fn(i) for i in [0, count) on a small pool; results land in slot i so
// output order never depends on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), count));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw UsageError("failed writing output file '" + path + "'");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw UsageError("unknown format '" + name + "'");
}

std::string render(const Table& table, OutputFormat format) {
  if (format == OutputFormat::kJson) return render_json(table);
  if (format == OutputFormat::kText) {
    std::string text;
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        text += table.columns[c] + " = ";
        if (const auto* i = std::get_if<long long>(&row[c])) {
          text += std::to_string(*i);
        } else {
          text += format_number(std::get<double>(row[c]));
        }
        text += '\n';
      }
    }
    return text;
  }
  return render_csv(table);
}

std::vector<Cell> report_row(const EstimationReport& r) {
  return {static_cast<long long>(r.n_qubits), r.r, r.theta_polar, r.avg_cos,
          r.avg_variance_cost, r.avg_infidelity_cost, r.cr_bound, r.ratio_to_bound};
}

struct CommonOptions {
  std::string format;
  std::string out_path;
};

int cmd_eval(int n, double r, double theta, bool degrees, bool oracle,
             const CommonOptions& common, std::ostream& out, std::ostream& err) {
  const OutputFormat format = parse_format(common.format);
  if (degrees) theta *= kPi / 180.0;
  const BlochState state(r, theta);
  const EstimationReport report = evaluate(n, state);

  Table table = report_table({report});
  int exit_code = kExitOk;
  if (oracle) {
    const int cap = dense_cap_from_env();
    const double reference = oracle_avg_cosine(n, r, theta, cap);
    const double diff = std::fabs(reference - report.avg_cos);
    table.columns.push_back("oracle_avg_cos");
    table.columns.push_back("oracle_abs_diff");
    table.rows[0].push_back(reference);
    table.rows[0].push_back(diff);
    if (!(diff <= kOracleTolerance)) {
      err << "covphase: estimator and dense oracle disagree by " << format_number(diff) << "\n";
      exit_code = kExitValidation;
    }
  }
  write_output(render(table, format), common.out_path, out);
  return exit_code;
}

int cmd_sweep(const std::string& n_text, const std::string& r_text,
              const std::string& theta_text, bool degrees, bool oracle,
              const CommonOptions& common, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  spec.n_values = parse_n_list(n_text);
  spec.r_range = r_text.empty() ? default_r_range() : parse_range(r_text);
  spec.theta_range = theta_text.empty() ? default_theta_range()
                                        : parse_range(theta_text, degrees ? kPi / 180.0 : 1.0);
  spec.output_format = common.format.empty() ? OutputFormat::kCsv : parse_format(common.format);
  if (spec.output_format == OutputFormat::kText) {
    throw UsageError("sweep supports --format csv or json");
  }
  spec.oracle_check = oracle;

  int cap = kDefaultDenseCap;
  if (spec.oracle_check) {
    cap = dense_cap_from_env();
    if (spec.n_values.back() > cap) {
      throw UsageError("--oracle requires every N <= " + std::to_string(cap));
    }
  }

  const std::vector<EstimationReport> reports = run_sweep(spec);
  int exit_code = kExitOk;
  if (spec.oracle_check) {
    std::vector<double> diffs(reports.size());
    parallel_for(reports.size(), [&](std::size_t i) {
      const EstimationReport& rep = reports[i];
      diffs[i] = std::fabs(oracle_avg_cosine(rep.n_qubits, rep.r, rep.theta_polar, cap) -
                           rep.avg_cos);
    });
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (!(diffs[i] <= kOracleTolerance)) {
        err << "covphase: oracle mismatch at n=" << reports[i].n_qubits
            << " r=" << format_number(reports[i].r)
            << " theta=" << format_number(reports[i].theta_polar)
            << " diff=" << format_number(diffs[i]) << "\n";
        exit_code = kExitValidation;
      }
    }
  }
  write_output(render(report_table(reports), spec.output_format), common.out_path, out);
  return exit_code;
}

int cmd_fig(int which, const CommonOptions& common, std::ostream& out) {
  OutputFormat format = common.format.empty() ? OutputFormat::kCsv : parse_format(common.format);
  if (format == OutputFormat::kText) throw UsageError("fig supports --format csv or json");
  write_output(render(figure_table(which), format), common.out_path, out);
  return kExitOk;
}

int cmd_selftest(int max_n, bool inject_fault, std::ostream& out) {
  SelftestOptions options;
  options.max_n = max_n;
  options.dense_cap = dense_cap_from_env();
  options.inject_wigner_exponent_fault = inject_fault;
  const std::vector<SuiteResult> results = run_selftest(options);
  out << render_selftest(results);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const SuiteResult& s) { return s.passed; });
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

std::vector<int> parse_n_list(std::string_view text) {
  std::vector<int> values;
  for (std::string_view item : split(text, ',')) {
    const std::vector<std::string_view> parts = split(item, ':');
    if (parts.size() == 1) {
      values.push_back(parse_number<int>(parts[0], "qubit count"));
      continue;
    }
    if (parts.size() > 3) throw UsageError("malformed qubit range '" + std::string(item) + "'");
    const int lo = parse_number<int>(parts[0], "qubit count");
    const int hi = parse_number<int>(parts[1], "qubit count");
    const int step = parts.size() == 3 ? parse_number<int>(parts[2], "qubit step") : 1;
    if (step <= 0 || hi < lo) throw UsageError("malformed qubit range '" + std::string(item) + "'");
    for (int n = lo; n <= hi; n += step) values.push_back(n);
  }
  if (values.empty()) throw UsageError("no qubit counts given");
  for (int n : values) {
    if (n < 1) throw UsageError("qubit counts must be >= 1, got " + std::to_string(n));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Range parse_range(std::string_view text, double scale) {
  const std::vector<std::string_view> parts = split(text, ':');
  if (parts.size() == 1) {
    const double v = parse_number<double>(parts[0], "value") * scale;
    return Range{v, v, 1.0};
  }
  if (parts.size() != 3) {
    throw UsageError("range must be 'start:stop:step', got '" + std::string(text) + "'");
  }
  return Range{parse_number<double>(parts[0], "range start") * scale,
               parse_number<double>(parts[1], "range stop") * scale,
               parse_number<double>(parts[2], "range step") * scale};
}

std::vector<double> expand_range(const Range& range, double lo, double hi,
                                 std::string_view name) {
  const std::string label(name);
  if (!std::isfinite(range.start) || !std::isfinite(range.stop) || !std::isfinite(range.step)) {
    throw UsageError(label + " range has non-finite values");
  }
  if (!(range.step > 0.0)) throw UsageError(label + " range step must be > 0");
  if (range.stop < range.start) throw UsageError(label + " range is empty (stop < start)");
  const double span = (range.stop - range.start) / range.step;
  if (span > kMaxSweepPoints) throw UsageError(label + " range has too many points");
  const int count = static_cast<int>(std::floor(span + 1e-9)) + 1;

  std::vector<double> values;
  for (int i = 0; i < count; ++i) {
    double v = range.start + i * range.step;
    if (std::fabs(v - lo) <= kSnapTolerance) v = lo;
    if (std::fabs(v - hi) <= kSnapTolerance) v = hi;
    if (v >= lo && v <= hi) values.push_back(v);
  }
  if (values.empty()) {
    throw UsageError(label + " range has no points inside [" + format_number(lo) + ", " +
                     format_number(hi) + "]");
  }
  return values;
}

Range default_r_range() { return Range{0.0, 1.0, 0.05}; }
Range default_theta_range() { return Range{0.0, kPi, kPi / 64.0}; }

int dense_cap_from_env() {
  const char* raw = std::getenv("COVPHASE_MAX_DENSE_N");
  if (raw == nullptr || *raw == '\0') return kDefaultDenseCap;
  const int cap = parse_number<int>(trim(raw), "COVPHASE_MAX_DENSE_N");
  if (cap < 1 || cap > kHardDenseCap) {
    throw UsageError("COVPHASE_MAX_DENSE_N must lie in [1, " + std::to_string(kHardDenseCap) +
                     "], got " + std::to_string(cap));
  }
  return cap;
}

std::vector<EstimationReport> run_sweep(const SweepSpec& spec) {
  if (spec.n_values.empty()) throw UsageError("no qubit counts given");
  const std::vector<double> rs = expand_range(spec.r_range, 0.0, 1.0, "r");
  const std::vector<double> thetas = expand_range(spec.theta_range, 0.0, kPi, "theta");

  std::vector<int> ns = spec.n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

  std::vector<std::tuple<int, double, double>> points;
  for (int n : ns) {
    for (double r : rs) {
      for (double t : thetas) points.emplace_back(n, r, t);
    }
  }
  std::vector<EstimationReport> reports(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    const auto& [n, r, t] = points[i];
    reports[i] = evaluate(n, BlochState(r, t));
  });
  return reports;
}

Table report_table(const std::vector<EstimationReport>& reports) {
  Table table{{"n", "r", "theta", "avg_cos", "var_proxy", "infidelity_cost", "cr_bound",
               "ratio_to_bound"},
              {}};
  for (const EstimationReport& r : reports) table.rows.push_back(report_row(r));
  return table;
}

Table figure_table(int which) {
  Table table;
  if (which == 1) {
    // <c> surface over (r, theta) for N = 10 and N = 20.
    table.columns = {"n", "r", "theta", "avg_cos"};
    SweepSpec spec{{10, 20}, default_r_range(), default_theta_range(), OutputFormat::kCsv, false};
    for (const EstimationReport& r : run_sweep(spec)) {
      table.rows.push_back({static_cast<long long>(r.n_qubits), r.r, r.theta_polar, r.avg_cos});
    }
  } else if (which == 2) {
    // 2(1 - <c>) against N at the equator, one series per purity.
    table.columns = {"n", "r", "var_proxy"};
    const std::vector<double> purities = {0.7, 0.8, 0.9, 1.0};
    std::vector<std::pair<int, double>> points;
    for (double r : purities) {
      for (int n = 1; n <= 21; ++n) points.emplace_back(n, r);
    }
    std::vector<double> values(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
      values[i] = variance_proxy(averaged_cosine(points[i].first, BlochState(points[i].second, kPi / 2)));
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
      table.rows.push_back({static_cast<long long>(points[i].first), points[i].second, values[i]});
    }
  } else if (which == 3) {
    // 2N(1 - <c>) against r at the equator with the 1/r^2 Cramer-Rao line.
    table.columns = {"n", "r", "scaled_var", "cr_line"};
    const std::vector<double> rs = expand_range(Range{0.3, 1.0, 0.05}, 0.0, 1.0, "r");
    std::vector<std::pair<int, double>> points;
    for (int n : {16, 18, 20}) {
      for (double r : rs) points.emplace_back(n, r);
    }
    std::vector<double> values(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
      const auto [n, r] = points[i];
      values[i] = n * variance_proxy(averaged_cosine(n, BlochState(r, kPi / 2)));
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto [n, r] = points[i];
      table.rows.push_back({static_cast<long long>(n), r, values[i],
                            n * cramer_rao(n, r, kPi / 2)});
    }
  } else {
    throw UsageError("unknown figure id " + std::to_string(which) + " (expected 1, 2 or 3)");
  }
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal covariant phase estimation for N identical mixed qubits", "covphase"};
  app.require_subcommand(1);

  CommonOptions eval_common;
  CommonOptions sweep_common;
  CommonOptions fig_common;

  int eval_n = 0;
  double eval_r = 0.0;
  double eval_theta = 0.0;
  bool degrees = false;
  bool oracle = false;
  auto* eval = app.add_subcommand("eval", "Evaluate one (N, r, theta) point");
  eval->add_option("--n", eval_n, "Number of qubits")->required();
  eval->add_option("--r", eval_r, "Bloch-vector length in [0, 1]")->required();
  eval->add_option("--theta", eval_theta, "Polar angle from +z (radians)")->required();
  eval->add_flag("--degrees", degrees, "Interpret --theta in degrees");
  eval->add_flag("--oracle", oracle, "Cross-check against the dense oracle");
  eval->add_option("--format", eval_common.format, "text, csv or json")->default_val("text");
  eval->add_option("--out", eval_common.out_path, "Write to FILE instead of stdout");

  std::string sweep_n;
  std::string sweep_r;
  std::string sweep_theta;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a grid of points");
  sweep->add_option("--n", sweep_n, "Qubit counts, e.g. 1,2,4:8")->required();
  sweep->add_option("--r", sweep_r, "r value or start:stop:step (default 0:1:0.05)");
  sweep->add_option("--theta", sweep_theta, "theta value or start:stop:step (default 0:pi:pi/64)");
  sweep->add_flag("--degrees", degrees, "Interpret --theta in degrees");
  sweep->add_flag("--oracle", oracle, "Cross-check every point against the dense oracle");
  sweep->add_option("--format", sweep_common.format, "csv or json");
  sweep->add_option("--out", sweep_common.out_path, "Write to FILE instead of stdout");

  int figure = 0;
  auto* fig = app.add_subcommand("fig", "Emit the dataset behind figure 1, 2 or 3");
  fig->add_option("which", figure, "Figure id (1, 2 or 3)")->required();
  fig->add_option("--format", fig_common.format, "csv or json");
  fig->add_option("--out", fig_common.out_path, "Write to FILE instead of stdout");

  int max_n = 10;
  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "Run the property and oracle suites");
  selftest->add_option("--max-n", max_n, "Largest N for dense cross-checks")->default_val(10);
  selftest->add_flag("--inject-wigner-fault", inject_fault,
                     "Build Wigner matrices without the -2t cosine exponent term");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "covphase: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    dense_cap_from_env();  // a malformed override is rejected whatever the subcommand
    if (eval->parsed()) {
      return cmd_eval(eval_n, eval_r, eval_theta, degrees, oracle, eval_common, out, err);
    }
    if (sweep->parsed()) {
      return cmd_sweep(sweep_n, sweep_r, sweep_theta, degrees, oracle, sweep_common, out, err);
    }
    if (fig->parsed()) return cmd_fig(figure, fig_common, out);
    if (selftest->parsed()) return cmd_selftest(max_n, inject_fault, out);
  } catch (const UsageError& e) {
    err << "covphase: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "covphase: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "covphase: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalValidationError& e) {
    err << "covphase: numerical validation failed: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace covphase::cli
