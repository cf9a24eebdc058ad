#include "glpc/setcode.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>

namespace glpc {

std::atomic<std::uint64_t> MeasureAudit::op_checks{0};
std::atomic<std::uint64_t> MeasureAudit::op_violations{0};
std::atomic<std::uint64_t> MeasureAudit::subformula_checks{0};
std::atomic<std::uint64_t> MeasureAudit::subformula_violations{0};
std::atomic<bool> MeasureAudit::enabled{true};

void MeasureAudit::reset() {
  op_checks = 0;
  op_violations = 0;
  subformula_checks = 0;
  subformula_violations = 0;
}

void MeasureAudit::record_op(bool ok) {
  op_checks.fetch_add(1, std::memory_order_relaxed);
  if (!ok) op_violations.fetch_add(1, std::memory_order_relaxed);
}

void MeasureAudit::record_subformula(bool ok) {
  subformula_checks.fetch_add(1, std::memory_order_relaxed);
  if (!ok) subformula_violations.fetch_add(1, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// Worlds
// ---------------------------------------------------------------------------

std::string World::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += coords[i].to_string();
  }
  out += ')';
  return out;
}

bool valid_world(const World& w, std::size_t n, const Ordinal& bound) {
  if (w.coords.size() != n) return false;
  if (n == 0) return true;
  if (!(w.coords[0] < bound)) return false;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(w.coords[i + 1] <= w.coords[i].end_log())) return false;
  }
  return true;
}

bool world_rel(std::size_t k, const World& w, const World& v) {
  if (w.coords.size() != v.coords.size() || k >= w.coords.size()) {
    throw std::invalid_argument("world_rel: length mismatch or index out of range");
  }
  if (!(v.coords[k] < w.coords[k])) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (v.coords[i] != w.coords[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Codes
// ---------------------------------------------------------------------------

WorldCode WorldCode::leaf(bool bit) {
  WorldCode c;
  c.bit_ = bit;
  return c;
}

WorldCode WorldCode::node(std::vector<Part> parts) {
  if (parts.empty()) throw std::invalid_argument("WorldCode::node: partition must be nonempty");
  WorldCode c;
  c.parts_ = std::make_shared<const std::vector<Part>>(std::move(parts));
  return c;
}

const std::vector<WorldCode::Part>& WorldCode::parts() const {
  if (!parts_) throw std::logic_error("WorldCode::parts: level-0 code");
  return *parts_;
}

namespace {

void require_node(const WorldCode& c, std::size_t n) {
  if (n == 0) {
    if (!c.is_leaf()) throw std::invalid_argument("level-0 code expected");
  } else if (c.is_leaf()) {
    throw std::invalid_argument("positive-level code expected");
  }
}

// Unique part whose interval contains x; the partition is sorted and
// contiguous, so this is the last part with lo <= x.
const WorldCode::Part& locate(const std::vector<WorldCode::Part>& parts, const Ordinal& x) {
  auto it = std::upper_bound(
      parts.begin(), parts.end(), x,
      [](const Ordinal& value, const WorldCode::Part& p) { return value < p.interval.lo; });
  if (it == parts.begin()) throw std::invalid_argument("locate: value below the partition");
  return *std::prev(it);
}

bool member_impl(std::span<const Ordinal> coords, const WorldCode& c, std::size_t n,
                 const Ordinal& bound) {
  require_node(c, n);
  if (n == 0) return c.leaf_bit();
  const Ordinal& head = coords[0];
  if (!(head < bound)) throw std::invalid_argument("member: world outside the model bound");
  const WorldCode::Part& part = locate(c.parts(), head);
  return member_impl(coords.subspan(1), part.child, n - 1, part.child_bound);
}

}  // namespace

bool member(const World& w, const WorldCode& c, std::size_t n, const Ordinal& bound) {
  if (w.coords.size() != n) throw std::invalid_argument("member: world/level mismatch");
  return member_impl(std::span<const Ordinal>(w.coords), c, n, bound);
}

WorldCode emp_s(std::size_t n, const Ordinal& bound) {
  if (bound.is_zero()) throw std::invalid_argument("emp_s: bound must be positive");
  if (n == 0) return WorldCode::leaf(false);
  Interval all(Ordinal(), bound);
  Ordinal child_bound = end_log(all);
  WorldCode child = emp_s(n - 1, child_bound);
  std::vector<WorldCode::Part> parts;
  parts.push_back({std::move(all), std::move(child_bound), std::move(child)});
  return WorldCode::node(std::move(parts));
}

WorldCode full_code(std::size_t n, const Ordinal& bound) {
  return cmpl(n, bound, emp_s(n, bound));
}

bool is_emp(std::size_t n, const Ordinal& bound, const WorldCode& c) {
  (void)bound;
  require_node(c, n);
  if (n == 0) return !c.leaf_bit();
  // Every interval is nonempty and its end_log values cover [0, child_bound),
  // so the set is empty exactly when all children are.
  for (const auto& part : c.parts()) {
    if (!is_emp(n - 1, part.child_bound, part.child)) return false;
  }
  return true;
}

WorldCode cmpl(std::size_t n, const Ordinal& bound, const WorldCode& c) {
  require_node(c, n);
  WorldCode out;
  if (n == 0) {
    out = WorldCode::leaf(!c.leaf_bit());
  } else {
    std::vector<WorldCode::Part> parts;
    parts.reserve(c.parts().size());
    for (const auto& part : c.parts()) {
      parts.push_back(
          {part.interval, part.child_bound, cmpl(n - 1, part.child_bound, part.child)});
    }
    out = WorldCode::node(std::move(parts));
  }
  if (MeasureAudit::enabled.load(std::memory_order_relaxed)) {
    const CodeMeasures before = measures(n, bound, c);
    const CodeMeasures after = measures(n, bound, out);
    MeasureAudit::record_op(before.width == after.width && before.ord_cost == after.ord_cost);
  }
  return out;
}

Ordinal inf_first(std::size_t n, const Ordinal& bound, const WorldCode& c) {
  if (n == 0) throw std::invalid_argument("inf_first: requires level >= 1");
  require_node(c, n);
  for (const auto& part : c.parts()) {
    if (is_emp(n - 1, part.child_bound, part.child)) continue;
    Ordinal result;
    if (n == 1) {
      result = part.interval.lo;
    } else {
      Ordinal delta = inf_first(n - 1, part.child_bound, part.child);
      result = delta.is_zero() ? part.interval.lo
                               : part.interval.lo + Ordinal::omega_pow(std::move(delta));
    }
    if (MeasureAudit::enabled.load(std::memory_order_relaxed)) {
      MeasureAudit::record_op(result.complexity() <= measures(n, bound, c).ord_cost);
    }
    return result;
  }
  throw std::invalid_argument("inf_first: the empty set has no least element");
}

namespace {

WorldCode r_inv_impl(std::size_t n, std::size_t k, const Ordinal& bound, const WorldCode& c) {
  if (k == 0) {
    // Worlds with an R_0-successor in the set are exactly those whose first
    // coordinate exceeds the least first coordinate of a member.
    if (is_emp(n, bound, c)) return emp_s(n, bound);
    Ordinal split = inf_first(n, bound, c).successor();
    if (split == bound) return emp_s(n, bound);
    Interval low(Ordinal(), split);
    Interval high(std::move(split), bound);
    Ordinal low_bound = end_log(low);
    Ordinal high_bound = end_log(high);
    WorldCode low_child = emp_s(n - 1, low_bound);
    WorldCode high_child = cmpl(n - 1, high_bound, emp_s(n - 1, high_bound));
    std::vector<WorldCode::Part> parts;
    parts.push_back({std::move(low), std::move(low_bound), std::move(low_child)});
    parts.push_back({std::move(high), std::move(high_bound), std::move(high_child)});
    return WorldCode::node(std::move(parts));
  }
  // k > 0: an R_k-step fixes the first coordinate, so the partition is
  // preserved and the children are mapped through R_{k-1}.
  std::vector<WorldCode::Part> parts;
  parts.reserve(c.parts().size());
  for (const auto& part : c.parts()) {
    parts.push_back(
        {part.interval, part.child_bound, r_inv(n - 1, k - 1, part.child_bound, part.child)});
  }
  return WorldCode::node(std::move(parts));
}

}  // namespace

WorldCode r_inv(std::size_t n, std::size_t k, const Ordinal& bound, const WorldCode& c) {
  if (k >= n) throw std::invalid_argument("r_inv: relation index must be below the level");
  require_node(c, n);
  WorldCode out = r_inv_impl(n, k, bound, c);
  if (MeasureAudit::enabled.load(std::memory_order_relaxed)) {
    const CodeMeasures before = measures(n, bound, c);
    const CodeMeasures after = measures(n, bound, out);
    MeasureAudit::record_op(after.width <= before.width + 1 &&
                            after.ord_cost <= before.ord_cost + n);
  }
  return out;
}

namespace {

WorldCode rstr_impl(std::size_t n, const Ordinal& bound, const Ordinal& new_bound,
                    const WorldCode& c) {
  if (n == 0) return c;
  if (new_bound == bound) return c;
  std::vector<WorldCode::Part> parts;
  for (const auto& part : c.parts()) {
    if (part.interval.hi <= new_bound) {
      parts.push_back(part);
      continue;
    }
    if (!(part.interval.lo < new_bound)) break;
    Interval cut(part.interval.lo, new_bound);
    Ordinal cut_bound = end_log(cut);
    WorldCode child = rstr(n - 1, part.child_bound, cut_bound, part.child);
    parts.push_back({std::move(cut), std::move(cut_bound), std::move(child)});
    break;
  }
  return WorldCode::node(std::move(parts));
}

}  // namespace

WorldCode rstr(std::size_t n, const Ordinal& bound, const Ordinal& new_bound, const WorldCode& c) {
  if (new_bound.is_zero() || bound < new_bound) {
    throw std::invalid_argument("rstr: requires 0 < new_bound <= bound");
  }
  require_node(c, n);
  WorldCode out = rstr_impl(n, bound, new_bound, c);
  if (MeasureAudit::enabled.load(std::memory_order_relaxed)) {
    const CodeMeasures before = measures(n, bound, c);
    const CodeMeasures after = measures(n, new_bound, out);
    MeasureAudit::record_op(after.width <= before.width && after.ord_cost <= before.ord_cost);
  }
  return out;
}

namespace {

WorldCode intr_impl(std::size_t n, const Ordinal& bound, const WorldCode& a, const WorldCode& b) {
  if (n == 0) return WorldCode::leaf(a.leaf_bit() && b.leaf_bit());
  const auto& pa = a.parts();
  const auto& pb = b.parts();
  std::vector<WorldCode::Part> parts;
  parts.reserve(pa.size() + pb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Ordinal lo;  // 0
  while (i < pa.size() && j < pb.size()) {
    const Ordinal& hi = std::min(pa[i].interval.hi, pb[j].interval.hi);
    Interval piece(lo, hi);
    Ordinal piece_bound = end_log(piece);
    WorldCode left = rstr(n - 1, pa[i].child_bound, piece_bound, pa[i].child);
    WorldCode right = rstr(n - 1, pb[j].child_bound, piece_bound, pb[j].child);
    WorldCode child = intr(n - 1, piece_bound, left, right);
    parts.push_back({std::move(piece), std::move(piece_bound), std::move(child)});
    const bool advance_a = pa[i].interval.hi == hi;
    const bool advance_b = pb[j].interval.hi == hi;
    lo = hi;
    if (advance_a) ++i;
    if (advance_b) ++j;
  }
  // Both partitions cover [0, bound), so they exhaust together.
  if (i != pa.size() || j != pb.size()) {
    throw std::invalid_argument("intr: partitions do not cover the same bound");
  }
  (void)bound;
  return WorldCode::node(std::move(parts));
}

}  // namespace

WorldCode intr(std::size_t n, const Ordinal& bound, const WorldCode& a, const WorldCode& b) {
  require_node(a, n);
  require_node(b, n);
  WorldCode out = intr_impl(n, bound, a, b);
  if (MeasureAudit::enabled.load(std::memory_order_relaxed)) {
    const CodeMeasures ma = measures(n, bound, a);
    const CodeMeasures mb = measures(n, bound, b);
    const CodeMeasures after = measures(n, bound, out);
    MeasureAudit::record_op(after.width <= ma.width + mb.width &&
                            after.ord_cost <= ma.ord_cost + mb.ord_cost);
  }
  return out;
}

CodeMeasures measures(std::size_t n, const Ordinal& bound, const WorldCode& c) {
  require_node(c, n);
  if (n == 0) return {1, 1};
  CodeMeasures out;
  out.width = c.parts().size();
  std::size_t max_lo = 0;
  std::size_t max_child = 0;
  for (const auto& part : c.parts()) {
    const CodeMeasures child = measures(n - 1, part.child_bound, part.child);
    out.width = std::max(out.width, child.width);
    max_child = std::max(max_child, child.ord_cost);
    max_lo = std::max(max_lo, part.interval.lo.complexity());
  }
  out.ord_cost = max_lo + max_child;
  (void)bound;
  return out;
}

std::optional<World> find_witness(std::size_t n, const Ordinal& bound, const WorldCode& c) {
  require_node(c, n);
  if (is_emp(n, bound, c)) return std::nullopt;
  if (n == 0) return World{};
  for (const auto& part : c.parts()) {
    if (is_emp(n - 1, part.child_bound, part.child)) continue;
    std::optional<World> tail = find_witness(n - 1, part.child_bound, part.child);
    // Head: the interval's lower end, bumped by w^delta when the tail needs
    // end_log(head) = delta > 0.
    Ordinal head = part.interval.lo;
    if (!tail->coords.empty() && !tail->coords.front().is_zero()) {
      head = head + Ordinal::omega_pow(tail->coords.front());
    }
    World out;
    out.coords.reserve(n);
    out.coords.push_back(std::move(head));
    for (auto& coord : tail->coords) out.coords.push_back(std::move(coord));
    return out;
  }
  return std::nullopt;  // unreachable: is_emp was false
}

void validate_code(std::size_t n, const Ordinal& bound, const WorldCode& c) {
  if (bound.is_zero()) throw std::invalid_argument("validate_code: zero bound");
  if (n == 0) {
    if (!c.is_leaf()) throw std::invalid_argument("validate_code: expected a level-0 bit");
    return;
  }
  if (c.is_leaf()) throw std::invalid_argument("validate_code: expected a partition");
  const auto& parts = c.parts();
  if (parts.empty()) throw std::invalid_argument("validate_code: empty partition");
  if (!parts.front().interval.lo.is_zero()) {
    throw std::invalid_argument("validate_code: partition must start at 0");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    if (!(part.interval.lo < part.interval.hi)) {
      throw std::invalid_argument("validate_code: empty interval");
    }
    if (!part.interval.lo.end_log().is_zero()) {
      throw std::invalid_argument("validate_code: interval lower end must be 0 or a successor");
    }
    if (i + 1 < parts.size() && !(part.interval.hi == parts[i + 1].interval.lo)) {
      throw std::invalid_argument("validate_code: partition gaps or overlaps");
    }
    if (!(part.child_bound == end_log(part.interval))) {
      throw std::invalid_argument("validate_code: stale child bound");
    }
    validate_code(n - 1, part.child_bound, part.child);
  }
  if (!(parts.back().interval.hi == bound)) {
    throw std::invalid_argument("validate_code: partition must end at the model bound");
  }
}

std::string to_string(const WorldCode& c) {
  if (c.is_leaf()) return c.leaf_bit() ? "1" : "0";
  std::string out = "{";
  bool first = true;
  for (const auto& part : c.parts()) {
    if (!first) out += ", ";
    first = false;
    out += part.interval.to_string();
    out += "->";
    out += to_string(part.child);
  }
  out += '}';
  return out;
}

}  // namespace glpc
