#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfinetti/bounds.hpp"
#include "qfinetti/definetti.hpp"
#include "qfinetti/measures.hpp"
#include "qfinetti/projection.hpp"
#include "qfinetti/serialization.hpp"
#include "qfinetti/verify_suite.hpp"

namespace qfinetti::cli {

namespace {

/// Bad user input; reported on stderr with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string float17(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string exact_and_float(const Scalar& s) {
  if (!s.is_exact()) return s.to_string();
  return s.to_string() + "  (~" + float17(s.to_double()) + ")";
}

QParam parse_q(const std::string& text, Mode mode = Mode::exact) {
  try {
    return QParam::parse(text, mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--q: ") + e.what());
  }
}

std::vector<QParam> parse_q_list(const std::string& text) {
  std::vector<QParam> out;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    out.push_back(parse_q(std::string(rest.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.empty()) throw UsageError("--q: empty list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw UsageError("--n: invalid range '" + text + "' (expected a..b)");
    }
    return v;
  };
  const std::string_view view = text;
  const auto dots = view.find("..");
  if (dots == std::string_view::npos) {
    const int v = to_int(view);
    return {v, v};
  }
  return {to_int(view.substr(0, dots)), to_int(view.substr(dots + 2))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Sends output to a file when a path is given, otherwise to `fallback`.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "'");
}

std::string csv_row(const DistanceReport& r) {
  std::ostringstream os;
  os << r.n << ',' << r.k << ',' << r.n1 << ',' << r.q.to_string() << ',' << float17(r.distance.to_double()) << ','
     << float17(r.upper.to_double()) << ',' << (r.lower ? float17(r.lower->to_double()) : std::string()) << ','
     << float17(r.distance_over_qn());
  return os.str();
}

// ---- subcommands ---------------------------------------------------------

struct QbinomArgs {
  int n = 0;
  int k = 0;
  std::string q;
};

int cmd_qbinom(const QbinomArgs& a, std::ostream& out) {
  const QParam q = parse_q(a.q);
  if (a.n < 0 || a.k < 0 || a.k > a.n) {
    throw UsageError("qbinom needs 0 <= k <= n, got n=" + std::to_string(a.n) + " k=" + std::to_string(a.k));
  }
  out << q_binomial(a.n, a.k, q).to_string() << '\n';
  return kSuccess;
}

struct DistanceArgs {
  int n = 0;
  int n1 = 0;
  int k = 0;
  std::string q;
  std::string format = "table";
};

int cmd_distance(const DistanceArgs& a, std::ostream& out) {
  require_format(a.format, {"table", "json"});
  const QParam q = parse_q(a.q);
  if (!(0 <= a.k && a.k <= a.n && 0 <= a.n1 && a.n1 <= a.n)) {
    throw UsageError("distance needs 0 <= k <= n and 0 <= n1 <= n");
  }
  const auto r = distance_report(a.n, a.n1, a.k, q);
  if (a.format == "json") {
    out << to_json(r, 2) << '\n';
  } else {
    out << "n = " << r.n << ", k = " << r.k << ", n1 = " << r.n1 << ", q = " << q.to_string() << '\n';
    out << "D = " << r.distance.to_string() << '\n';
    out << "D ~ " << float17(r.distance.to_double()) << '\n';
    out << "upper c_k*q^n = " << exact_and_float(r.upper) << "  " << (r.upper_ok() ? "PASS" : "FAIL") << '\n';
    if (r.lower) {
      out << "lower c~_k*q^n = " << exact_and_float(*r.lower) << "  " << (r.lower_ok() ? "PASS" : "FAIL") << '\n';
    } else {
      out << "lower c~_k*q^n = n/a (requires 1 <= k <= n1)\n";
    }
    out << (r.passes() ? "PASS" : "FAIL") << '\n';
  }
  return r.passes() ? kSuccess : kCheckFailed;
}

struct SweepArgs {
  std::string q;
  int k = 1;
  std::string range;
  std::string rule = "equal";
  std::string mode = "exact";
  std::string format = "csv";
  std::string out_path;
};

RateSweepConfig make_config(const SweepArgs& a, Mode mode) {
  N1Rule rule;
  try {
    rule = parse_n1_rule(a.rule);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--n1: ") + e.what());
  }
  const auto [first, last] = parse_range(a.range);
  RateSweepConfig cfg{parse_q(a.q, mode), a.k, first, last, rule};
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Mode parse_mode_flag(const std::string& text) {
  try {
    return parse_mode(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--mode: ") + e.what());
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  require_format(a.format, {"csv", "json"});
  const auto cfg = make_config(a, parse_mode_flag(a.mode));
  const auto reports = sweep_rate(cfg);
  OutputTarget target(a.out_path, out);
  if (a.format == "json") {
    auto doc = nlohmann::json::array();
    for (const auto& r : reports) doc.push_back(nlohmann::json::parse(to_json(r)));
    target.stream() << doc.dump(2) << '\n';
    for (const auto& r : reports) {
      if (!r.passes()) return kCheckFailed;
    }
    return kSuccess;
  }
  return write_sweep_csv(reports, target.stream()) ? kSuccess : kCheckFailed;
}

int cmd_fit(const SweepArgs& a, std::ostream& out) {
  const auto cfg = make_config(a, parse_mode_flag(a.mode));
  const auto reports = sweep_rate(cfg);
  double slope = 0.0;
  try {
    slope = fit_log_slope(reports);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const double target = std::log(cfg.q.fraction().get_d());
  const double gap = std::fabs(slope - target);
  const bool bounds_ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passes(); });
  out << "slope = " << float17(slope) << '\n';
  out << "ln q = " << float17(target) << '\n';
  out << "|slope - ln q| = " << float17(gap) << " (tolerance 0.05)\n";
  out << "bounds " << (bounds_ok ? "PASS" : "FAIL") << '\n';
  const bool pass = gap <= 0.05 && bounds_ok;
  out << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kSuccess : kCheckFailed;
}

struct DecomposeArgs {
  std::string path;
  int k = 0;
  std::string format = "table";
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  require_format(a.format, {"table", "json"});
  const std::string text = a.path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(a.path);
  std::optional<QExchMeasure> parsed;
  try {
    parsed = measure_from_json(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(a.path + ": " + e.what());
  }
  const QExchMeasure& m = *parsed;
  if (a.k < 0 || a.k > m.n()) {
    throw UsageError("--k must satisfy 0 <= k <= n = " + std::to_string(m.n()));
  }
  const auto mu = decompose(m);
  const Scalar error = approx_error(m, a.k);
  const Scalar bound = upper_constant(a.k, m.q()) * m.q().pow(m.n());
  const bool pass = error <= bound;
  if (a.format == "json") {
    nlohmann::json doc{{"mixing", nlohmann::json::parse(to_json(mu))},
                       {"k", a.k},
                       {"error", error.to_string()},
                       {"bound", bound.to_string()},
                       {"pass", pass}};
    out << doc.dump(2) << '\n';
  } else {
    out << "n = " << m.n() << ", q = " << m.q().to_string() << ", k = " << a.k << '\n';
    for (int i = 0; i <= mu.n(); ++i) out << "alpha[" << i << "] = " << exact_and_float(mu.alpha(i)) << '\n';
    out << "||P_k - P_mu,k|| = " << exact_and_float(error) << '\n';
    out << "c_k*q^n = " << exact_and_float(bound) << '\n';
    out << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? kSuccess : kCheckFailed;
}

struct MeasureArgs {
  std::string type;
  int n = 0;
  int level = 0;
  std::uint64_t seed = 0;
  std::string q;
  std::string out_path;
};

int cmd_measure(const MeasureArgs& a, std::ostream& out) {
  const QParam q = parse_q(a.q);
  if (a.n < 0) throw UsageError("--n must be nonnegative");
  std::optional<QExchMeasure> m;
  if (a.type == "extreme") {
    if (a.level < 0 || a.level > a.n) throw UsageError("extreme measure needs 0 <= n1 <= n");
    m = extreme_measure(a.n, a.level, q);
  } else if (a.type == "bernoulli") {
    if (a.level < 0) throw UsageError("bernoulli measure needs a nonnegative exponent");
    m = q_bernoulli(a.n, DeltaQPoint{a.level}, q);
  } else if (a.type == "random") {
    m = random_q_exch(a.n, q, a.seed);
  } else {
    throw UsageError("unknown measure type '" + a.type + "' (expected extreme|bernoulli|random)");
  }
  OutputTarget target(a.out_path, out);
  target.stream() << to_json(*m, 2) << '\n';
  return kSuccess;
}

struct VerifyArgs {
  int max_n = 10;
  int max_k = 4;
  int seeds = 10;
  std::string q = "1/2,1/3,2/3";
  bool inject_fault = false;
};

int cmd_verify_all(const VerifyArgs& a, std::ostream& out) {
  if (a.max_n < 0 || a.max_k < 0 || a.seeds < 0) throw UsageError("verify-all parameters must be nonnegative");
  VerifyOptions options;
  options.max_n = a.max_n;
  options.max_k = a.max_k;
  options.random_seeds = a.seeds;
  options.qs = parse_q_list(a.q);
  options.inject_fault = a.inject_fault;
  const auto results = run_verify_all(options);
  bool all_ok = true;
  for (const auto& r : results) {
    out << r.name << ": " << r.checks << " checks " << (r.ok() ? "PASS" : "FAIL") << '\n';
    if (!r.ok()) {
      out << "  counterexample: " << *r.counterexample << '\n';
      all_ok = false;
    }
  }
  out << (all_ok ? "ALL PASS" : "FAILED") << '\n';
  return all_ok ? kSuccess : kCheckFailed;
}

}  // namespace

bool write_sweep_csv(const std::vector<DistanceReport>& reports, std::ostream& out) {
  out << kSweepHeader << '\n';
  for (const auto& r : reports) out << csv_row(r) << '\n';
  bool ok = true;
  for (const auto& r : reports) {
    if (!r.passes()) {
      out << "VIOLATION," << csv_row(r) << '\n';
      ok = false;
    }
  }
  return ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite q-de Finetti toolkit: q-exchangeable measures, projections and q^n rate certificates",
               "qfinetti"};
  app.require_subcommand(1);

  QbinomArgs qbinom;
  auto* qbinom_cmd = app.add_subcommand("qbinom", "Print the Gaussian binomial [n, k] at q");
  qbinom_cmd->add_option("n", qbinom.n)->required();
  qbinom_cmd->add_option("k", qbinom.k)->required();
  qbinom_cmd->add_option("--q", qbinom.q, "q as an exact fraction p/r")->required();

  DistanceArgs distance;
  auto* distance_cmd =
      app.add_subcommand("distance", "TV distance between k-marginals of e_{n,n1} and nu_{q^n1}, with bounds");
  distance_cmd->add_option("--n", distance.n)->required();
  distance_cmd->add_option("--n1", distance.n1)->required();
  distance_cmd->add_option("--k", distance.k)->required();
  distance_cmd->add_option("--q", distance.q)->required();
  distance_cmd->add_option("--format", distance.format, "table|json");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Certify lower <= D <= upper over an n range, CSV output");
  sweep_cmd->add_option("--q", sweep.q)->required();
  sweep_cmd->add_option("--k", sweep.k)->required();
  sweep_cmd->add_option("--n", sweep.range, "n range a..b")->required();
  sweep_cmd->add_option("--n1", sweep.rule, "half|equal|fixed:<v>|list:<a,b,..>");
  sweep_cmd->add_option("--mode", sweep.mode, "exact|float");
  sweep_cmd->add_option("--format", sweep.format, "csv|json");
  sweep_cmd->add_option("--out", sweep.out_path, "output file (default stdout)");

  SweepArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit the slope of ln D against n and compare with ln q");
  fit_cmd->add_option("--q", fit.q)->required();
  fit_cmd->add_option("--k", fit.k)->required();
  fit_cmd->add_option("--n", fit.range, "n range a..b")->required();
  fit_cmd->add_option("--n1", fit.rule, "half|equal|fixed:<v>|list:<a,b,..>");
  fit_cmd->add_option("--mode", fit.mode, "exact|float");

  DecomposeArgs decompose_args;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Mixing measure of a JSON measure and its k-marginal approximation error");
  decompose_cmd->add_option("file", decompose_args.path, "measure JSON ('-' for stdin)")->required();
  decompose_cmd->add_option("--k", decompose_args.k)->required();
  decompose_cmd->add_option("--format", decompose_args.format, "table|json");

  MeasureArgs measure;
  auto* measure_cmd = app.add_subcommand("measure", "Emit a measure as JSON");
  measure_cmd->add_option("type", measure.type, "extreme|bernoulli|random")->required();
  measure_cmd->add_option("--n", measure.n)->required();
  measure_cmd->add_option("--q", measure.q)->required();
  measure_cmd->add_option("--n1", measure.level, "level (extreme) or exponent (bernoulli)");
  measure_cmd->add_option("--seed", measure.seed, "seed (random)");
  measure_cmd->add_option("--out", measure.out_path);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify-all", "Run every invariant suite");
  verify_cmd->add_option("--max-n", verify.max_n);
  verify_cmd->add_option("--max-k", verify.max_k);
  verify_cmd->add_option("--seeds", verify.seeds, "random measures per n");
  verify_cmd->add_option("--q", verify.q, "comma-separated fractions");
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "perturb one value; the run must fail");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (qbinom_cmd->parsed()) return cmd_qbinom(qbinom, out);
    if (distance_cmd->parsed()) return cmd_distance(distance, out);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep, out);
    if (fit_cmd->parsed()) return cmd_fit(fit, out);
    if (decompose_cmd->parsed()) return cmd_decompose(decompose_args, out);
    if (measure_cmd->parsed()) return cmd_measure(measure, out);
    if (verify_cmd->parsed()) return cmd_verify_all(verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace qfinetti::cli
