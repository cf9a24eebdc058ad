#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glpc/formula.hpp"
#include "glpc/setcode.hpp"

namespace glpc {

struct DecideStats {
  unsigned level = 0;  // modal level n of the ambient model U^n_{w_n}
  std::size_t max_width = 0;
  std::size_t max_ord_cost = 0;
  double millis = 0.0;
};

struct TraceRow {
  std::string formula;
  std::size_t size = 0;
  std::size_t width = 0;
  std::size_t ord_cost = 0;
};

struct Verdict {
  bool provable = false;
  std::optional<World> witness;  // a falsifying world, present iff !provable
  DecideStats stats;
  std::vector<TraceRow> trace;  // per-subformula code measures, when requested
};

/// Decides provability of a closed formula: the formula is normalized, each
/// subformula is mapped bottom-up to a code over U^n_{w_n} with
/// n = 1 + (largest modality index), and the formula is provable iff the
/// complement of its code denotes the empty set. Pure and deterministic.
Verdict decide(const Formula& f, bool collect_trace = false);

/// Same, over the explicitly given (possibly larger) model level. Throws when
/// the level does not accommodate the formula's modalities.
Verdict decide_at_level(const Formula& f, unsigned level, bool collect_trace = false);

/// Truth of f at a world of U^n_{w_n} for n = 1 + max modality. Throws when w
/// is not a valid world of that model.
bool eval_at(const Formula& f, const World& w);

}  // namespace glpc
