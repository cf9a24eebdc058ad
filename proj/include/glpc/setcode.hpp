#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glpc/ordinal.hpp"

namespace glpc {

/// An element of the truncated model U^n_bound: an ordinal sequence
/// (a_0, ..., a_{n-1}) with a_0 < bound and a_{i+1} <= end_log(a_i).
struct World {
  std::vector<Ordinal> coords;

  bool operator==(const World& rhs) const { return coords == rhs.coords; }
  std::string to_string() const;  // "(a, b, c)"
};

bool valid_world(const World& w, std::size_t n, const Ordinal& bound);

/// Accessibility: w R_k v iff v_k < w_k and v_i = w_i for all i < k.
/// Throws when the worlds have different lengths or k is out of range.
bool world_rel(std::size_t k, const World& w, const World& v);

/// Width and ordinal-cost complexity measures of a code. Both are >= 1; for
/// a level-0 code both are 1, and for a partition code the width is the
/// maximum of the part count and the children's widths while the ordinal
/// cost is max_i c(lo_i) + max_i ord_cost(child_i).
struct CodeMeasures {
  std::size_t width = 1;
  std::size_t ord_cost = 1;
};

/// Code for a definable subset of U^n_bound. A level-0 code is a bit (1
/// accepts the empty world, 0 rejects it). A positive-level code is a
/// partition of [0, bound) into consecutive intervals, each interval's lower
/// end 0 or a successor, with a level-(n-1) child code over the interval's
/// end_log. Codes are immutable and share structure across copies.
class WorldCode {
 public:
  struct Part;

  static WorldCode leaf(bool bit);
  static WorldCode node(std::vector<Part> parts);

  bool is_leaf() const { return parts_ == nullptr; }
  bool leaf_bit() const { return bit_; }
  const std::vector<Part>& parts() const;

 private:
  std::shared_ptr<const std::vector<Part>> parts_;
  bool bit_ = false;
};

struct WorldCode::Part {
  Interval interval;
  Ordinal child_bound;  // end_log(interval), cached at construction
  WorldCode child;
};

/// Membership of w in the set denoted by c over U^n_bound: locate the
/// interval containing the first coordinate and recurse on the tail.
bool member(const World& w, const WorldCode& c, std::size_t n, const Ordinal& bound);

/// Code of the empty set: a single interval with a recursively empty child.
/// Width 1 and ordinal cost n + 1, the minimum any level-n code can have.
WorldCode emp_s(std::size_t n, const Ordinal& bound);

/// Code of all of U^n_bound.
WorldCode full_code(std::size_t n, const Ordinal& bound);

/// 1 iff the denoted set is empty, i.e. all children are recursively empty.
bool is_emp(std::size_t n, const Ordinal& bound, const WorldCode& c);

/// Complement within U^n_bound: same partition, children complemented.
/// Preserves both measures exactly.
WorldCode cmpl(std::size_t n, const Ordinal& bound, const WorldCode& c);

/// Least first coordinate of a member; pre: the denoted set is nonempty
/// (check is_emp first). complexity(result) <= ord_cost(c).
Ordinal inf_first(std::size_t n, const Ordinal& bound, const WorldCode& c);

/// Preimage of the denoted set under R_k: the set of worlds with an
/// R_k-successor inside it. Adds at most 1 to the width and at most n to the
/// ordinal cost. Throws when k >= n.
WorldCode r_inv(std::size_t n, std::size_t k, const Ordinal& bound, const WorldCode& c);

/// Restriction to U^n_new_bound for 0 < new_bound <= bound: intervals left of
/// new_bound survive, the straddling interval is truncated and its child
/// restricted. Neither measure increases.
WorldCode rstr(std::size_t n, const Ordinal& bound, const Ordinal& new_bound, const WorldCode& c);

/// Intersection: common refinement of the two partitions (a linear merge of
/// the sorted boundary sequences), children restricted and intersected.
/// Both measures are subadditive.
WorldCode intr(std::size_t n, const Ordinal& bound, const WorldCode& a, const WorldCode& b);

CodeMeasures measures(std::size_t n, const Ordinal& bound, const WorldCode& c);

/// A member of the denoted set, or nullopt when it is empty. The head of the
/// returned world equals inf_first of the code.
std::optional<World> find_witness(std::size_t n, const Ordinal& bound, const WorldCode& c);

/// Checks every structural invariant recursively; throws std::invalid_argument
/// with a description on the first violation.
void validate_code(std::size_t n, const Ordinal& bound, const WorldCode& c);

/// Debug rendering: leaves as "0"/"1", partitions as "{[lo, hi)->child, ...}".
std::string to_string(const WorldCode& c);

/// Global tally of the per-call measure-bound checks. Every cmpl / r_inv /
/// rstr / intr call (including recursive ones) verifies its lemma bound and
/// records the outcome here; the decision procedure records its
/// per-subformula bounds in the second pair of counters. Test suites assert
/// that the violation counters stay at zero.
struct MeasureAudit {
  static std::atomic<std::uint64_t> op_checks;
  static std::atomic<std::uint64_t> op_violations;
  static std::atomic<std::uint64_t> subformula_checks;
  static std::atomic<std::uint64_t> subformula_violations;
  static std::atomic<bool> enabled;

  static void reset();
  static void record_op(bool ok);
  static void record_subformula(bool ok);
};

}  // namespace glpc
