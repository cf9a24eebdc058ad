#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glpc/bench.hpp"
#include "glpc/decider.hpp"
#include "glpc/formula.hpp"
#include "glpc/qbf.hpp"
#include "glpc/selftest.hpp"
#include "glpc/setcode.hpp"

namespace {

// Exit statuses: 0 success/provable/match, 1 not provable or failed suites,
// 2 parse or usage errors, 3 round-trip mismatch (implementation bug signal).
constexpr int kExitProvable = 0;
constexpr int kExitNotProvable = 1;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

void warn_large_indices(const glpc::Formula& f) {
  const auto mm = glpc::max_modality(f);
  if (mm && *mm > 12) {
    std::cerr << "warning: modality index " << *mm
              << " implies a degree-" << (*mm + 4)
              << " polynomial decision bound; expect a long runtime\n";
  }
}

int cmd_decide(const std::string& text, bool show_witness, bool show_stats, bool show_trace) {
  glpc::Formula f;
  try {
    f = glpc::parse_formula(text);
  } catch (const glpc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  warn_large_indices(f);
  const glpc::Verdict verdict = glpc::decide(f, show_trace);
  std::cout << (verdict.provable ? "PROVABLE" : "NOT PROVABLE") << '\n';
  if (show_witness && verdict.witness) {
    std::cout << "witness: " << verdict.witness->to_string() << '\n';
  }
  if (show_stats) {
    std::cout << "stats: n=" << verdict.stats.level << " max_w=" << verdict.stats.max_width
              << " max_oc=" << verdict.stats.max_ord_cost << " millis=" << verdict.stats.millis
              << '\n';
  }
  if (show_trace) {
    for (const auto& row : verdict.trace) {
      std::cout << "trace: |psi|=" << row.size << " w=" << row.width << " oc=" << row.ord_cost
                << "  " << row.formula << '\n';
    }
  }
  return verdict.provable ? kExitProvable : kExitNotProvable;
}

int cmd_reduce_qbf(const std::string& text, bool also_decide) {
  glpc::Qbf q;
  try {
    q = glpc::parse_qbf(text);
  } catch (const glpc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  const glpc::Formula reduced = glpc::reduce_to_glp(q);
  std::cout << reduced.to_string() << '\n';
  if (!also_decide) return kExitProvable;
  const bool truth = glpc::eval_brute(q);
  const bool provable = glpc::decide(reduced).provable;
  const bool match = truth == provable;
  std::cout << "QBF=" << (truth ? "true" : "false")
            << " DECIDE=" << (provable ? "provable" : "not-provable")
            << (match ? " MATCH" : " MISMATCH") << '\n';
  return match ? kExitProvable : kExitMismatch;
}

int cmd_selftest(const std::string& suite, std::uint64_t seed) {
  std::vector<glpc::SuiteReport> reports;
  glpc::MeasureAudit::reset();
  try {
    if (suite == "all") {
      reports = glpc::run_all_suites(seed);
    } else {
      reports.push_back(glpc::run_suite(suite, seed));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  bool all_passed = true;
  for (const auto& report : reports) {
    std::cout << report.name << ": " << report.detail << " ("
              << static_cast<long>(report.millis) << " ms)"
              << (report.passed() ? "" : " FAILED") << '\n';
    all_passed = all_passed && report.passed();
  }
  const auto op_checks = glpc::MeasureAudit::op_checks.load();
  const auto op_violations = glpc::MeasureAudit::op_violations.load();
  const auto sub_checks = glpc::MeasureAudit::subformula_checks.load();
  const auto sub_violations = glpc::MeasureAudit::subformula_violations.load();
  std::cout << "measure audit: " << op_checks << " op checks, " << op_violations
            << " violations; " << sub_checks << " subformula checks, " << sub_violations
            << " violations\n";
  if (op_violations != 0 || sub_violations != 0) all_passed = false;
  return all_passed ? kExitProvable : kExitNotProvable;
}

int cmd_bench(const std::string& family, std::vector<std::size_t> sizes, const std::string& csv,
              std::uint64_t seed) {
  if (sizes.empty()) {
    sizes = family == "qbf" ? std::vector<std::size_t>{1, 2, 3}
                            : std::vector<std::size_t>{100, 200, 400, 800};
  }
  std::vector<glpc::BenchRow> rows;
  try {
    rows = glpc::run_bench(family, sizes, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  if (csv.empty()) {
    glpc::write_csv(std::cout, rows);
    return kExitProvable;
  }
  std::ofstream out(csv);
  if (!out) {
    std::cerr << "cannot write to " << csv << '\n';
    return kExitUsage;
  }
  glpc::write_csv(out, rows);
  return out.good() ? kExitProvable : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision engine for the closed fragment of the polymodal provability logic GLP"};
  app.require_subcommand(1);

  std::string formula_text;
  bool show_witness = false;
  bool show_stats = false;
  bool show_trace = false;
  auto* decide_cmd = app.add_subcommand("decide", "decide provability of a closed formula");
  decide_cmd->add_option("formula", formula_text, "formula, e.g. \"~<0>~T\"")->required();
  decide_cmd->add_flag("--witness", show_witness, "print a falsifying world when not provable");
  decide_cmd->add_flag("--stats", show_stats, "print level, code measures and elapsed time");
  decide_cmd->add_flag("--trace", show_trace, "dump per-subformula code measures");

  std::string qbf_text;
  bool also_decide = false;
  auto* reduce_cmd = app.add_subcommand("reduce-qbf", "translate a QBF into a closed formula");
  reduce_cmd->add_option("qbf", qbf_text, "e.g. \"E0 A1 : (x0 | ~x1)\"")->required();
  reduce_cmd->add_flag("--decide", also_decide,
                       "decide the reduction and compare with brute-force QBF truth");

  std::string suite = "all";
  std::uint64_t seed = 42;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the property suites");
  selftest_cmd->add_option("--suite", suite,
                           "ordinal | setcode | gl-agreement | axioms | fact1 | schemas | "
                           "qbf-roundtrip | all");
  selftest_cmd->add_option("--seed", seed, "random seed");

  std::string family;
  std::vector<std::size_t> sizes;
  std::string csv_path;
  std::uint64_t bench_seed = 1;
  auto* bench_cmd = app.add_subcommand("bench", "time the decision procedure");
  bench_cmd->add_option("--family", family, "words | random | qbf")->required();
  bench_cmd->add_option("--sizes", sizes, "comma-separated sizes")->delimiter(',');
  bench_cmd->add_option("--csv", csv_path, "write rows to this file instead of stdout");
  bench_cmd->add_option("--seed", bench_seed, "random seed (rows are stable per seed)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  if (decide_cmd->parsed()) return cmd_decide(formula_text, show_witness, show_stats, show_trace);
  if (reduce_cmd->parsed()) return cmd_reduce_qbf(qbf_text, also_decide);
  if (selftest_cmd->parsed()) return cmd_selftest(suite, seed);
  if (bench_cmd->parsed()) return cmd_bench(family, sizes, csv_path, bench_seed);
  return kExitUsage;
}
