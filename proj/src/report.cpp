#include "puregaps/report.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "puregaps/errors.hpp"
#include "puregaps/family_gk.hpp"
#include "puregaps/family_kummer.hpp"
#include "puregaps/oracle.hpp"

namespace puregaps::io {

using puregaps::to_string;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "skipped";
}

bool RunReport::passed() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.second == Verdict::Fail; });
}

void RunReport::set_verdict(const std::string& name, Verdict v, const std::string& detail) {
  auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const auto& e) { return e.first == name; });
  if (it == verdicts.end()) {
    verdicts.emplace_back(name, v);
  } else if (it->second != Verdict::Fail) {
    it->second = v;
  }
  if (v == Verdict::Fail && failure_detail.empty()) failure_detail = name + ": " + detail;
}

std::optional<Verdict> RunReport::verdict(const std::string& name) const {
  auto it = std::find_if(verdicts.begin(), verdicts.end(), [&](const auto& e) { return e.first == name; });
  if (it == verdicts.end()) return std::nullopt;
  return it->second;
}

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string first_difference(const PointSet& lhs, const PointSet& rhs, const char* lhs_name, const char* rhs_name) {
  PointSet only_lhs, only_rhs;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(only_lhs));
  std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(), std::back_inserter(only_rhs));
  std::ostringstream os;
  os << lhs_name << " has " << lhs.size() << " points, " << rhs_name << " has " << rhs.size();
  if (!only_lhs.empty()) os << "; " << only_lhs.front() << " only in " << lhs_name;
  if (!only_rhs.empty()) os << "; " << only_rhs.front() << " only in " << rhs_name;
  return os.str();
}

const char* const kFamilyVerdicts[] = {"explicit_components", "closed_form_vs_enumeration"};

}  // namespace

Evaluation evaluate_generic(const GeneratingSet& gamma, const CheckOptions& options) {
  Evaluation ev;
  RunReport& r = ev.report;
  r.genus = gamma.genus();
  r.period = gamma.period();

  BoxedGamma boxed;
  try {
    boxed = decompose(gamma);
    r.set_verdict("genus_identity", Verdict::Pass);
  } catch (const ConsistencyError& e) {
    r.set_verdict("genus_identity", Verdict::Fail, e.what());
    return ev;
  }
  r.gamma_k0_sizes = boxed.row_sizes();

  const auto period_report = oracle::check_period_property(gamma);
  if (period_report.ok()) {
    r.set_verdict("period_property", Verdict::Pass);
  } else {
    const auto& v = period_report.violations.front();
    std::ostringstream os;
    os << "point " << v.point << ", k=" << v.k << ": " << v.reason;
    r.set_verdict("period_property", Verdict::Fail, os.str());
  }

  PureGapResult result;
  {
    Stopwatch watch;
    try {
      result = assemble_pure_gaps(boxed, EngineOptions{.verify = true, .threads = options.threads});
      r.set_verdict("engine_consistency", Verdict::Pass);
    } catch (const ConsistencyError& e) {
      const bool diagonal = e.kind() == ConsistencyKind::DiagonalReflectionMismatch;
      r.set_verdict(diagonal ? "diagonal_lemma" : "engine_consistency", Verdict::Fail, e.what());
      return ev;
    }
    r.timings.emplace_back("engine_s", watch.seconds());
  }
  r.pure_gaps = result.cardinality;
  r.bounds = result.bounds;

  if (boxed.diagonal) {
    const auto nonempty = std::find_if(result.per_box.begin(), result.per_box.end(),
                                       [](const BoxComponents& c) { return !c.g2.empty(); });
    if (nonempty == result.per_box.end()) {
      r.set_verdict("diagonal_lemma", Verdict::Pass);
    } else {
      r.set_verdict("diagonal_lemma", Verdict::Fail,
                    "G2 nonempty at k=" + std::to_string(nonempty - result.per_box.begin()) + " on diagonal Gamma");
    }
  } else {
    r.set_verdict("diagonal_lemma", Verdict::Skipped);
  }

  if (options.oracle) {
    Stopwatch watch;
    const PointSet direct = oracle::pure_gaps_direct(gamma);
    r.timings.emplace_back("oracle_s", watch.seconds());
    if (direct == result.g0) {
      r.set_verdict("engine_vs_oracle", Verdict::Pass);
    } else {
      r.set_verdict("engine_vs_oracle", Verdict::Fail, first_difference(result.g0, direct, "engine", "oracle"));
    }
  } else {
    r.set_verdict("engine_vs_oracle", Verdict::Skipped);
  }

  const auto& b = result.bounds;
  const bool sandwich = b.lower <= r.pure_gaps && r.pure_gaps <= b.upper && r.pure_gaps <= b.homma_kim;
  r.set_verdict("bound_sandwich", sandwich ? Verdict::Pass : Verdict::Fail,
                "lower=" + to_string(b.lower) + " |G0|=" + to_string(r.pure_gaps) + " upper=" + to_string(b.upper) +
                    " homma_kim=" + to_string(b.homma_kim));

  for (const char* name : kFamilyVerdicts) r.set_verdict(name, Verdict::Skipped);
  ev.g0 = std::move(result.g0);
  return ev;
}

namespace {

template <typename VerifyComponents, typename ExplicitAssembly>
void family_checks(Evaluation& ev, WideInt closed_form, VerifyComponents&& verify_components,
                   ExplicitAssembly&& explicit_assembly) {
  RunReport& r = ev.report;
  if (!r.verdict("engine_consistency") || r.verdict("engine_consistency") != Verdict::Pass) return;
  try {
    verify_components();
    r.set_verdict("explicit_components", Verdict::Pass);
  } catch (const ConsistencyError& e) {
    r.set_verdict("explicit_components", Verdict::Fail, e.what());
  }

  Stopwatch watch;
  try {
    const PureGapResult assembled = explicit_assembly();
    r.timings.emplace_back("closed_form_s", watch.seconds());
    if (assembled.g0 != ev.g0) {
      r.set_verdict("closed_form_vs_enumeration", Verdict::Fail,
                    first_difference(assembled.g0, ev.g0, "explicit", "engine"));
    } else if (closed_form != r.pure_gaps) {
      r.set_verdict("closed_form_vs_enumeration", Verdict::Fail,
                    "closed form " + to_string(closed_form) + " vs |G0| " + to_string(r.pure_gaps));
    } else {
      r.set_verdict("closed_form_vs_enumeration", Verdict::Pass);
    }
  } catch (const ConsistencyError& e) {
    r.set_verdict("closed_form_vs_enumeration", Verdict::Fail, e.what());
  }
}

void check_genus(RunReport& r, std::int64_t closed_genus, std::int64_t weighted_rows) {
  if (r.genus != closed_genus || weighted_rows != closed_genus) {
    r.set_verdict("genus_identity", Verdict::Fail,
                  "genus formula " + std::to_string(closed_genus) + ", |Gamma| " + std::to_string(r.genus) +
                      ", sum (k+1)|Gamma_k0| from closed form " + std::to_string(weighted_rows));
  }
}

}  // namespace

Evaluation evaluate_gk(std::int64_t q, const CheckOptions& options) {
  const gk::GKParams params(q);
  Evaluation ev = evaluate_generic(gk::gk_generating_set(q), options);
  RunReport& r = ev.report;
  r.parameters = {{"family", "gk"}, {"q", std::to_string(q)}};

  std::int64_t weighted = 0;
  for (std::int64_t k = 0; k <= params.last_row(); ++k) weighted += (k + 1) * gk::gk_card_gamma_k0(q, k);
  check_genus(r, params.genus(), weighted);

  const WideInt closed_upper = gk::gk_upper_bound(q);
  if (r.verdict("engine_consistency") == Verdict::Pass) {
    if (closed_upper != r.bounds.upper) {
      r.set_verdict("bound_sandwich", Verdict::Fail,
                    "upper bound polynomial " + to_string(closed_upper) + " vs engine " + to_string(r.bounds.upper));
    } else if (q >= 3 && !(r.bounds.upper < r.bounds.homma_kim)) {
      r.set_verdict("bound_sandwich", Verdict::Fail, "upper bound not below Homma-Kim for q >= 3");
    }
  }

  family_checks(
      ev, gk::gk_card_g0(q), [&] { gk::gk_verify_components(q, EngineOptions{.verify = true, .threads = options.threads}); },
      [&] { return gk::gk_pure_gaps(q, EngineOptions{.threads = options.threads}); });
  return ev;
}

Evaluation evaluate_kummer(std::int64_t m, std::int64_t r_deg, const CheckOptions& options) {
  const kummer::KummerParams params(m, r_deg);
  Evaluation ev = evaluate_generic(kummer::kummer_generating_set(m, r_deg), options);
  RunReport& r = ev.report;
  r.parameters = {{"family", "kummer"}, {"m", std::to_string(m)}, {"r", std::to_string(r_deg)}};

  std::int64_t weighted = 0;
  for (std::int64_t k = 0; k <= params.last_row(); ++k) weighted += (k + 1) * kummer::kummer_card_gamma_k0(m, r_deg, k);
  check_genus(r, params.genus(), weighted);

  family_checks(
      ev, kummer::kummer_card_g0(m, r_deg),
      [&] { kummer::kummer_verify_components(m, r_deg, EngineOptions{.verify = true, .threads = options.threads}); },
      [&] { return kummer::kummer_pure_gaps(m, r_deg, EngineOptions{.threads = options.threads}); });
  return ev;
}

Evaluation evaluate_kummer_ur1(std::int64_t u, std::int64_t r_deg, const CheckOptions& options) {
  if (u < 1 || r_deg < 2) {
    throw ParameterError(ParameterKind::InvalidParams, "m = ur + 1 sweep requires u >= 1, r >= 2");
  }
  const std::int64_t m = checked_add(checked_mul(u, r_deg), 1);
  Evaluation ev = evaluate_kummer(m, r_deg, options);
  RunReport& r = ev.report;
  r.parameters.emplace_back("u", std::to_string(u));
  try {
    const WideInt closed = kummer::kummer_card_special_ur1(u, r_deg);
    r.set_verdict("special_closed_form", closed == r.pure_gaps ? Verdict::Pass : Verdict::Fail,
                  "u^2(r-1)(r-2)r(r+3)/12 = " + to_string(closed) + " vs |G0| = " + to_string(r.pure_gaps));
  } catch (const ConsistencyError& e) {
    r.set_verdict("special_closed_form", Verdict::Fail, e.what());
  }
  if (u == 1) {
    r.set_verdict("sharpness", r.bounds.upper == r.pure_gaps ? Verdict::Pass : Verdict::Fail,
                  "upper bound " + to_string(r.bounds.upper) + " vs |G0| " + to_string(r.pure_gaps));
  } else {
    r.set_verdict("sharpness", Verdict::Skipped);
  }
  return ev;
}

Evaluation evaluate_kummer_qN(std::int64_t q, std::int64_t N, const CheckOptions& options) {
  if (q < 2 || N < 1 || (q + 1) % N != 0 || q - 2 - N < 0) {
    throw ParameterError(ParameterKind::InvalidParams, "m = (q+1)/N sweep requires N | q+1 and q-2-N >= 0");
  }
  Evaluation ev = evaluate_kummer((q + 1) / N, q, options);
  RunReport& r = ev.report;
  r.parameters.emplace_back("q", std::to_string(q));
  r.parameters.emplace_back("N", std::to_string(N));
  try {
    const WideInt closed = kummer::kummer_card_special_qN(q, N);
    r.set_verdict("special_closed_form", closed == r.pure_gaps ? Verdict::Pass : Verdict::Fail,
                  "(q+1)/N closed form = " + to_string(closed) + " vs |G0| = " + to_string(r.pure_gaps));
  } catch (const ConsistencyError& e) {
    r.set_verdict("special_closed_form", Verdict::Fail, e.what());
  }
  return ev;
}

namespace {

std::string join_sizes(const std::vector<std::int64_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes[i]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> fields(const RunReport& r, bool with_timings) {
  std::vector<std::pair<std::string, std::string>> out(r.parameters.begin(), r.parameters.end());
  out.emplace_back("genus", std::to_string(r.genus));
  out.emplace_back("period", std::to_string(r.period));
  out.emplace_back("gamma_k0_sizes", join_sizes(r.gamma_k0_sizes));
  out.emplace_back("pure_gaps", to_string(r.pure_gaps));
  out.emplace_back("lower_bound", to_string(r.bounds.lower));
  out.emplace_back("upper_bound", to_string(r.bounds.upper));
  out.emplace_back("homma_kim_bound", to_string(r.bounds.homma_kim));
  for (const auto& [name, v] : r.verdicts) out.emplace_back("verdict." + name, std::string(to_string(v)));
  if (with_timings) {
    for (const auto& [name, seconds] : r.timings) {
      std::ostringstream os;
      os.precision(6);
      os << std::fixed << seconds;
      out.emplace_back("time." + name, os.str());
    }
  }
  return out;
}

nlohmann::ordered_json wide_json(WideInt v) {
  if (auto narrow = narrow_to_int64(v)) return *narrow;
  return to_string(v);
}

}  // namespace

std::string format_summary_tsv(const RunReport& report, bool with_timings) {
  std::string out;
  for (const auto& [key, value] : fields(report, with_timings)) out += key + '\t' + value + '\n';
  if (!report.failure_detail.empty()) out += "failure\t" + report.failure_detail + '\n';
  return out;
}

std::string format_report_line(const RunReport& report, bool with_timings) {
  std::string out;
  for (const auto& [key, value] : fields(report, with_timings)) {
    if (!out.empty()) out += '\t';
    out += key + '=' + value;
  }
  return out;
}

std::string format_summary_json(const RunReport& r, bool with_timings) {
  nlohmann::ordered_json j;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;
  j["genus"] = r.genus;
  j["period"] = r.period;
  j["gamma_k0_sizes"] = r.gamma_k0_sizes;
  j["pure_gaps"] = wide_json(r.pure_gaps);
  j["lower_bound"] = wide_json(r.bounds.lower);
  j["upper_bound"] = wide_json(r.bounds.upper);
  j["homma_kim_bound"] = wide_json(r.bounds.homma_kim);
  auto& verdicts = j["verdicts"] = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.verdicts) verdicts[name] = std::string(to_string(v));
  if (with_timings) {
    auto& timings = j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [name, seconds] : r.timings) timings[name] = seconds;
  }
  if (!r.failure_detail.empty()) j["failure"] = r.failure_detail;
  return j.dump(2) + '\n';
}

}  // namespace puregaps::io
