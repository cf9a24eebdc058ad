#include "glpc/decider.hpp"

#include <chrono>
#include <stdexcept>
#include <unordered_map>

namespace glpc {

namespace {

struct CodeTable {
  Formula root;  // the normalized formula
  std::unordered_map<Formula, WorldCode, FormulaHash, FormulaEq> codes;
  std::size_t max_width = 0;
  std::size_t max_ord_cost = 0;
};

// Builds the subformula-to-code mapping for the normalized form of f over
// U^level_{w_level}. Structurally identical subformulas share one code. Along
// the way the construction checks the per-subformula size bounds
// width <= |psi| and ord_cost <= (level + 1) * |psi|.
CodeTable build_code_table(const Formula& f, unsigned level, const Ordinal& bound,
                           std::vector<TraceRow>* trace) {
  CodeTable table{normalize(f), {}, 0, 0};
  std::unordered_map<Formula, std::size_t, FormulaHash, FormulaEq> sizes;
  const std::size_t n = level;
  for (const Formula& psi : subformulas_bottom_up(table.root)) {
    WorldCode code = [&]() -> WorldCode {
      switch (psi.kind()) {
        case FormulaKind::Bot:
          return emp_s(n, bound);
        case FormulaKind::Not:
          return cmpl(n, bound, table.codes.at(psi.child()));
        case FormulaKind::And:
          return intr(n, bound, table.codes.at(psi.left()), table.codes.at(psi.right()));
        case FormulaKind::Diamond:
          return r_inv(n, psi.modality(), bound, table.codes.at(psi.child()));
        default:
          throw std::logic_error("build_code_table: formula not in normalized basis");
      }
    }();
    std::size_t size = 1;
    switch (psi.kind()) {
      case FormulaKind::Bot:
        break;
      case FormulaKind::Not:
      case FormulaKind::Diamond:
        size = sizes.at(psi.child()) + 1;
        break;
      default:
        size = sizes.at(psi.left()) + sizes.at(psi.right()) + 1;
        break;
    }
    sizes.emplace(psi, size);
    const CodeMeasures m = measures(n, bound, code);
    MeasureAudit::record_subformula(m.width <= size &&
                                    m.ord_cost <= size * (static_cast<std::size_t>(level) + 1));
    table.max_width = std::max(table.max_width, m.width);
    table.max_ord_cost = std::max(table.max_ord_cost, m.ord_cost);
    if (trace) trace->push_back({psi.to_string(), size, m.width, m.ord_cost});
    table.codes.emplace(psi, std::move(code));
  }
  return table;
}

}  // namespace

Verdict decide_at_level(const Formula& f, unsigned level, bool collect_trace) {
  const auto start = std::chrono::steady_clock::now();
  if (const auto mm = max_modality(f); mm && *mm >= level) {
    throw std::invalid_argument("decide_at_level: level too small for the formula");
  }
  const Ordinal bound = Ordinal::omega_tower(level);
  Verdict verdict;
  verdict.stats.level = level;
  CodeTable table =
      build_code_table(f, level, bound, collect_trace ? &verdict.trace : nullptr);
  const WorldCode refutations = cmpl(level, bound, table.codes.at(table.root));
  verdict.provable = is_emp(level, bound, refutations);
  if (!verdict.provable) verdict.witness = find_witness(level, bound, refutations);
  verdict.stats.max_width = table.max_width;
  verdict.stats.max_ord_cost = table.max_ord_cost;
  verdict.stats.millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

Verdict decide(const Formula& f, bool collect_trace) {
  const auto mm = max_modality(f);
  return decide_at_level(f, mm ? *mm + 1 : 0, collect_trace);
}

bool eval_at(const Formula& f, const World& w) {
  const auto mm = max_modality(f);
  const unsigned level = mm ? *mm + 1 : 0;
  const Ordinal bound = Ordinal::omega_tower(level);
  if (!valid_world(w, level, bound)) {
    throw std::invalid_argument("eval_at: world does not belong to the formula's model");
  }
  CodeTable table = build_code_table(f, level, bound, nullptr);
  return member(w, table.codes.at(table.root), level, bound);
}

}  // namespace glpc
