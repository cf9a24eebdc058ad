#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace glpc {

/// Ordinals below epsilon_0 in Cantor normal form.
///
/// The ordinal w^{b_0} + ... + w^{b_{m-1}} is stored as its exponent sequence
/// b_0 >= b_1 >= ... >= b_{m-1}, each exponent again an Ordinal; the empty
/// sequence denotes 0. The representation is canonical: two Ordinals denote
/// the same ordinal iff they compare equal iff they are structurally equal.
/// Values are immutable after construction and safe to share across threads.
class Ordinal {
 public:
  Ordinal() = default;  // zero

  /// n as the sum of n copies of w^0.
  static Ordinal natural(std::size_t n);
  static Ordinal omega();
  /// Single-term w^exponent.
  static Ordinal omega_pow(Ordinal exponent);
  /// Tower w_0 = 1, w_{n+1} = w^{w_n}.
  static Ordinal omega_tower(unsigned n);
  /// Builds from an explicit exponent sequence; throws std::invalid_argument
  /// unless the sequence is non-increasing.
  static Ordinal from_exponents(std::vector<Ordinal> exponents);

  bool is_zero() const { return exps_.empty(); }
  bool is_natural() const;
  std::size_t as_natural() const;  // pre: is_natural()
  const std::vector<Ordinal>& exponents() const { return exps_; }

  std::strong_ordering operator<=>(const Ordinal& rhs) const;
  bool operator==(const Ordinal& rhs) const { return exps_ == rhs.exps_; }

  /// End-logarithm: the last exponent of the normal form, and 0 for the
  /// ordinal 0. Governs which tails may extend a world.
  const Ordinal& end_log() const;

  /// Notation-size measure c: 1 plus the measures of all exponents.
  /// Proportional to the stored size; c(natural(n)) = 1 + n.
  std::size_t complexity() const;

  Ordinal successor() const;

  /// Diagnostic rendering: "0", "w", "w^w + w^2 + 1" (trailing w^0 terms
  /// collapse to a natural).
  std::string to_string() const;

 private:
  static Ordinal unchecked(std::vector<Ordinal> exponents);

  std::vector<Ordinal> exps_;

  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);
};

/// Ordinal addition in normal form: the terms of a whose exponent lies below
/// b's leading exponent are absorbed. complexity(a + b) <= complexity(a) +
/// complexity(b).
Ordinal operator+(const Ordinal& a, const Ordinal& b);

/// Half-open ordinal interval [lo, hi). Nonempty by construction.
struct Interval {
  Ordinal lo;
  Ordinal hi;

  Interval(Ordinal lo_init, Ordinal hi_init);

  bool contains(const Ordinal& x) const { return lo <= x && x < hi; }
  std::string to_string() const;
};

/// sup{ end_log(g) + 1 | g in A } for an interval whose lower end is 0 or a
/// successor. The result z satisfies { end_log(g) | g in A } = [0, z), and
/// complexity(z) <= complexity(A.hi). Throws std::invalid_argument when
/// end_log(A.lo) != 0.
Ordinal end_log(const Interval& a);

}  // namespace glpc
