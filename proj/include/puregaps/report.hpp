#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "puregaps/gap_engine.hpp"
#include "puregaps/generating_set.hpp"
#include "puregaps/wide_int.hpp"

namespace puregaps::io {

enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Verdict v);

/// Everything computed for one parameter point.
struct RunReport {
  std::vector<std::pair<std::string, std::string>> parameters;
  std::int64_t genus = 0;
  std::int64_t period = 1;
  std::vector<std::int64_t> gamma_k0_sizes;
  WideInt pure_gaps = 0;
  BoundValues bounds;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  /// Wall-clock seconds per method.
  std::vector<std::pair<std::string, double>> timings;
  /// First counterexample or error message of the first failing verdict.
  std::string failure_detail;

  bool passed() const;
  void set_verdict(const std::string& name, Verdict v, const std::string& detail = {});
  std::optional<Verdict> verdict(const std::string& name) const;
};

struct CheckOptions {
  /// Run the O(g^2) glb oracle and compare with the engine.
  bool oracle = true;
  unsigned threads = 1;
};

/// Report plus the engine's pure gap set.
struct Evaluation {
  RunReport report;
  PointSet g0;
};

/// Generic checks on any validated Gamma: genus identity, period property,
/// engine vs oracle, diagonal lemma, bound sandwich. Family verdicts are
/// marked skipped.
Evaluation evaluate_generic(const GeneratingSet& gamma, const CheckOptions& options = {});

/// Generic checks plus explicit components, closed-form cardinality, closed-form
/// genus and (for q >= 3) upper bound below Homma-Kim.
Evaluation evaluate_gk(std::int64_t q, const CheckOptions& options = {});
Evaluation evaluate_kummer(std::int64_t m, std::int64_t r, const CheckOptions& options = {});

/// Kummer point m = ur + 1: adds the closed form and, for u = 1, sharpness of
/// the upper bound.
Evaluation evaluate_kummer_ur1(std::int64_t u, std::int64_t r, const CheckOptions& options = {});
/// Kummer point m = (q+1)/N, r = q.
Evaluation evaluate_kummer_qN(std::int64_t q, std::int64_t N, const CheckOptions& options = {});

/// "key\tvalue" lines.
std::string format_summary_tsv(const RunReport& report, bool with_timings);
/// One line of tab-separated key=value fields.
std::string format_report_line(const RunReport& report, bool with_timings);
std::string format_summary_json(const RunReport& report, bool with_timings);

}  // namespace puregaps::io
