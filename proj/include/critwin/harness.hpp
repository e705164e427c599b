#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "critwin/real.hpp"

namespace critwin::harness {

// Grid evaluation request. The window exponent is selected by the model:
// V^{-1/2} for tree/animal/saw, V^{-1/3} for perc.
struct SweepSpec {
  std::string model = "tree";    // tree | animal | saw | perc
  std::vector<long long> V_grid;
  std::vector<double> s_grid;
  std::string quantity = "chi";  // chi | g0 | g01 (tree/animal), chi | two_point (saw), chi (perc)
  unsigned precision_bits = 128;
  std::string output_path;       // empty: stdout only
  std::uint64_t seed = 1;        // perc only
  long long replicas = 10000;    // perc only
  int threads = 1;
  int table_max = 64;            // animal capacity
};

struct ReportRow {
  std::string model;
  long long V = 0;
  double s = 0;
  double p = 0;
  std::string value;       // decimal strings, fixed formatting for byte-stable CSV
  std::string profile;
  std::string ratio;
  std::string tail_bound;  // empty when untruncated
  std::string note;        // per-point errors land here; the sweep never aborts
  bool ok = false;
  double ratio_d = 0;
};

struct ConvergenceReport {
  std::vector<ReportRow> rows;
  double fitted_exponent = 0;
  double fit_residual = 0;
  std::string fit_status;  // "ok" | "declined: ..." | "skipped: ..."
};

ConvergenceReport run_sweep(const SweepSpec& spec);

// Least-squares fit of ln|ratio - 1| against ln V over the finite rows.
// Declined (nullopt) when ratios sit at 1 to precision or fewer than three
// distinct V survive.
struct FitResult {
  double exponent = 0;
  double residual = 0;
};
std::optional<FitResult> fit_convergence(const ConvergenceReport& report,
                                         std::string* status = nullptr);

std::string to_csv(const ConvergenceReport& report);
void write_report(const SweepSpec& spec, const ConvergenceReport& report);

// ---- acceptance criteria -------------------------------------------------

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  int threads = 2;
};

// suite: counts | bounds | theorems | profiles | saw | all
// (the percolation and determinism criteria need Monte Carlo test oracles and
// live in the acceptance runner)
std::vector<std::string> criteria_in_suite(const std::string& suite);
CriterionResult run_criterion(const std::string& id, const VerifyOptions& opt);

// Runs a suite, printing one pass/fail line per criterion; returns failure count.
int run_suite(const std::string& suite, const VerifyOptions& opt);

}  // namespace critwin::harness
