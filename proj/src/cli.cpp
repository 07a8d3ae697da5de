#include "puregaps/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <span>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "puregaps/detail/parallel.hpp"
#include "puregaps/errors.hpp"
#include "puregaps/family_gk.hpp"
#include "puregaps/family_kummer.hpp"
#include "puregaps/gamma_file.hpp"
#include "puregaps/oracle.hpp"
#include "puregaps/report.hpp"

namespace puregaps::cli {

namespace {

struct EmitOptions {
  std::string emit = "summary";
  std::string format = "tsv";
  bool skip_oracle = false;
  bool timings = false;
};

void add_emit_options(CLI::App* cmd, EmitOptions& opts) {
  cmd->add_option("--emit", opts.emit, "What to print")
      ->check(CLI::IsMember({"summary", "gamma", "puregaps"}))
      ->capture_default_str();
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  cmd->add_flag("--skip-oracle", opts.skip_oracle, "Skip the O(g^2) direct glb cross-check");
  cmd->add_flag("--timings", opts.timings, "Include wall-clock timings in the summary");
}

void write_json_points(std::ostream& out, std::span<const LatticePoint> points) {
  out << '[';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out << ',';
    out << '[' << points[i].a << ',' << points[i].b << ']';
  }
  out << ']';
}

void write_points(std::ostream& out, const PointSet& points, const std::string& format) {
  if (format == "json") {
    write_json_points(out, points);
    out << '\n';
    return;
  }
  for (const auto& p : points) out << p.a << '\t' << p.b << '\n';
}

void write_gamma(std::ostream& out, const GeneratingSet& gamma, const std::string& format) {
  if (format == "json") {
    out << "{\"period\":" << gamma.period() << ",\"points\":";
    write_json_points(out, gamma.points());
    out << "}\n";
    return;
  }
  io::write_gamma_file(out, gamma);
}

int emit(std::ostream& out, const io::Evaluation& ev, const GeneratingSet& gamma, const EmitOptions& opts) {
  if (opts.emit == "puregaps") {
    write_points(out, ev.g0, opts.format);
  } else if (opts.emit == "gamma") {
    write_gamma(out, gamma, opts.format);
  } else if (opts.format == "json") {
    out << io::format_summary_json(ev.report, opts.timings);
  } else {
    out << io::format_summary_tsv(ev.report, opts.timings);
  }
  return ev.report.passed() ? kExitOk : kExitFailure;
}

io::CheckOptions check_options(const EmitOptions& opts) {
  return io::CheckOptions{.oracle = !opts.skip_oracle, .threads = worker_count()};
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

struct VerifyOptions {
  std::string family = "all";
  std::string special = "none";
  std::int64_t q_min = 2;
  std::int64_t q_max = 4;
  std::int64_t kummer_max = 15;
  std::int64_t u_max = 3;
  std::int64_t r_max = 10;
  std::int64_t qn_max = 11;
  std::string format = "tsv";
  bool skip_oracle = false;
  bool timings = false;
};

using Job = std::function<io::Evaluation(const io::CheckOptions&)>;

std::vector<Job> verify_jobs(const VerifyOptions& v) {
  std::vector<Job> jobs;
  const bool gk = v.family == "gk" || v.family == "all";
  const bool kummer = v.family == "kummer" || v.family == "all";
  const bool plain = v.special == "none";
  if (gk && plain) {
    for (std::int64_t q = v.q_min; q <= v.q_max; ++q) jobs.push_back([q](const auto& o) { return io::evaluate_gk(q, o); });
  }
  if (kummer && plain) {
    for (std::int64_t m = 2; m <= v.kummer_max; ++m) {
      for (std::int64_t r = 2; r <= v.kummer_max; ++r) {
        if (std::gcd(m, r) == 1) jobs.push_back([m, r](const auto& o) { return io::evaluate_kummer(m, r, o); });
      }
    }
  }
  const bool all_specials = v.family == "all" && plain;
  if (kummer && (v.special == "ur1" || all_specials)) {
    for (std::int64_t u = 1; u <= v.u_max; ++u) {
      for (std::int64_t r = 2; r <= v.r_max; ++r) {
        jobs.push_back([u, r](const auto& o) { return io::evaluate_kummer_ur1(u, r, o); });
      }
    }
  }
  if (kummer && (v.special == "qN" || all_specials)) {
    for (std::int64_t q = 3; q <= v.qn_max; ++q) {
      for (std::int64_t N : divisors(q + 1)) {
        if (q - 2 - N >= 0) jobs.push_back([q, N](const auto& o) { return io::evaluate_kummer_qN(q, N, o); });
      }
    }
  }
  return jobs;
}

int cmd_verify(const VerifyOptions& v, std::ostream& out) {
  if (v.special != "none" && v.family == "gk") {
    throw ParameterError(ParameterKind::InvalidParams, "--special applies to the kummer family only");
  }
  const auto jobs = verify_jobs(v);
  std::vector<io::RunReport> reports(jobs.size());
  const io::CheckOptions per_job{.oracle = !v.skip_oracle, .threads = 1};
  detail::parallel_for(jobs.size(), worker_count(), [&](std::size_t i) {
    try {
      reports[i] = jobs[i](per_job).report;
    } catch (const ConsistencyError& e) {
      reports[i].set_verdict("internal", io::Verdict::Fail, e.what());
    }
  });

  std::size_t failures = 0;
  const io::RunReport* first_failure = nullptr;
  if (v.format == "json") out << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (!r.passed()) {
      ++failures;
      if (!first_failure) first_failure = &r;
    }
    if (v.format == "json") {
      std::string obj = io::format_summary_json(r, v.timings);
      obj.pop_back();
      out << obj << (i + 1 < reports.size() ? ",\n" : "\n");
    } else {
      out << io::format_report_line(r, v.timings) << '\n';
    }
  }
  if (v.format == "json") out << "]\n";

  if (v.format == "tsv") {
    out << "# points=" << reports.size() << " failures=" << failures << '\n';
    if (first_failure) {
      out << "# first failure:\n" << io::format_summary_tsv(*first_failure, true);
    }
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

struct BenchOptions {
  std::string family = "gk";
  std::int64_t q = 5;
  std::int64_t m = 0;
  std::int64_t r = 0;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_bench(const BenchOptions& b, std::ostream& out) {
  const bool gk = b.family == "gk";
  if (!gk && (b.m == 0 || b.r == 0)) throw ParameterError(ParameterKind::InvalidParams, "bench --family kummer needs --m and --r");
  const GeneratingSet gamma = gk ? gk::gk_generating_set(b.q) : kummer::kummer_generating_set(b.m, b.r);
  const std::string params = gk ? "q=" + std::to_string(b.q) : "m=" + std::to_string(b.m) + ",r=" + std::to_string(b.r);
  const EngineOptions engine{.threads = worker_count()};

  auto start = std::chrono::steady_clock::now();
  const PointSet direct = oracle::pure_gaps_direct(gamma);
  const double direct_s = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const BoxedGamma rows = decompose(gamma);
  const PureGapResult boxed = assemble_pure_gaps(rows, engine);
  const double boxed_s = seconds_since(start);

  // Candidate glbs formed by the decomposition: G1, G2 and G3 pairs; G4 is
  // a reflection when Gamma is diagonal.
  WideInt candidates = 0;
  for (std::int64_t k = 0; k < rows.kmax; ++k) {
    const WideInt above = rows.rows_above(k), here = rows.row_size(k);
    candidates += above * above + here * (here - 1) / 2 + here * above * (rows.diagonal ? 1 : 2);
  }

  start = std::chrono::steady_clock::now();
  const PureGapResult closed = gk ? gk::gk_pure_gaps(b.q, engine) : kummer::kummer_pure_gaps(b.m, b.r, engine);
  const double closed_s = seconds_since(start);

  const bool equal = direct == boxed.g0 && closed.g0 == boxed.g0;
  if (!equal) {
    out << "outputs differ: direct=" << direct.size() << " decomposition=" << boxed.g0.size()
        << " closed_form=" << closed.g0.size() << '\n';
    return kExitFailure;
  }

  const auto g = gamma.genus();
  const WideInt pairs = static_cast<WideInt>(g) * (g - 1) / 2;
  out << "family\tparams\tgenus\tpure_gaps\tmethod\tevaluations\tseconds\n";
  auto row = [&](const char* method, const std::string& evaluations, double seconds) {
    out << b.family << '\t' << params << '\t' << g << '\t' << direct.size() << '\t' << method << '\t' << evaluations
        << '\t' << std::fixed << std::setprecision(6) << seconds << '\n';
  };
  row("direct_glb", to_string(pairs), direct_s);
  row("box_decomposition", to_string(candidates), boxed_s);
  row("closed_form_components", "-", closed_s);
  out << "# outputs_equal=yes\n";
  return kExitOk;
}

}  // namespace

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PUREGAPS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pure gaps at two places from the minimal generating set"};
  app.require_subcommand(1);

  EmitOptions gk_opts;
  std::int64_t q = 0;
  auto* gk_cmd = app.add_subcommand("gk", "GK function field at (P0, P_inf)");
  gk_cmd->add_option("--q", q, "Field parameter q (>= 2)")->required();
  add_emit_options(gk_cmd, gk_opts);

  EmitOptions kummer_opts;
  std::int64_t m = 0, r = 0;
  auto* kummer_cmd = app.add_subcommand("kummer", "Kummer extension y^m = f(x)^lambda, deg f = r");
  kummer_cmd->add_option("--m", m, "Exponent m (>= 2)")->required();
  kummer_cmd->add_option("--r", r, "Degree r of f (>= 2, coprime to m)")->required();
  add_emit_options(kummer_cmd, kummer_opts);

  EmitOptions generic_opts;
  std::string input;
  auto* generic_cmd = app.add_subcommand("generic", "Arbitrary Gamma read from a file");
  generic_cmd->add_option("--input,input", input, "Gamma file ('-' for stdin)")->required();
  add_emit_options(generic_cmd, generic_opts);

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check engine, oracle and closed forms over a grid");
  verify_cmd->add_option("--family", verify_opts.family)->check(CLI::IsMember({"gk", "kummer", "all"}))->capture_default_str();
  verify_cmd->add_option("--special", verify_opts.special)->check(CLI::IsMember({"none", "ur1", "qN"}))->capture_default_str();
  verify_cmd->add_option("--q-min", verify_opts.q_min, "Smallest GK q")->capture_default_str();
  verify_cmd->add_option("--q-max", verify_opts.q_max, "Largest GK q")->capture_default_str();
  verify_cmd->add_option("--max", verify_opts.kummer_max, "Kummer grid: all coprime 2 <= m, r <= max")->capture_default_str();
  verify_cmd->add_option("--u-max", verify_opts.u_max, "m = ur+1 sweep: largest u")->capture_default_str();
  verify_cmd->add_option("--r-max", verify_opts.r_max, "m = ur+1 sweep: largest r")->capture_default_str();
  verify_cmd->add_option("--qn-max", verify_opts.qn_max, "m = (q+1)/N sweep: largest q")->capture_default_str();
  verify_cmd->add_option("--format", verify_opts.format)->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
  verify_cmd->add_flag("--skip-oracle", verify_opts.skip_oracle);
  verify_cmd->add_flag("--timings", verify_opts.timings);

  BenchOptions bench_opts;
  auto* bench_cmd = app.add_subcommand("bench", "Time the direct glb scan against the box decomposition");
  bench_cmd->add_option("--family", bench_opts.family)->check(CLI::IsMember({"gk", "kummer"}))->capture_default_str();
  bench_cmd->add_option("--q", bench_opts.q, "GK q")->capture_default_str();
  bench_cmd->add_option("--m", bench_opts.m, "Kummer m");
  bench_cmd->add_option("--r", bench_opts.r, "Kummer r");

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
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gk_cmd->parsed()) {
      const gk::GKParams params(q);
      if (!params.prime_power()) {
        err << "warning: q=" << q << " is not a prime power; no GK curve exists, results are purely combinatorial\n";
      }
      return emit(out, io::evaluate_gk(q, check_options(gk_opts)), gk::gk_generating_set(q), gk_opts);
    }
    if (kummer_cmd->parsed()) {
      return emit(out, io::evaluate_kummer(m, r, check_options(kummer_opts)), kummer::kummer_generating_set(m, r),
                  kummer_opts);
    }
    if (generic_cmd->parsed()) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (input != "-") {
        file.open(input);
        if (!file) {
          err << "error: cannot open " << input << '\n';
          return kExitUsage;
        }
        in = &file;
      }
      const GeneratingSet gamma = io::load_gamma_file(*in);
      return emit(out, io::evaluate_generic(gamma, check_options(generic_opts)), gamma, generic_opts);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, out);
    if (bench_cmd->parsed()) return cmd_bench(bench_opts, out);
  } catch (const io::GammaFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: parameters beyond supported range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace puregaps::cli
