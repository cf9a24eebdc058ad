#include "glpc/ordinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace glpc {

namespace {
const Ordinal kZero{};
}

Ordinal Ordinal::unchecked(std::vector<Ordinal> exponents) {
  Ordinal out;
  out.exps_ = std::move(exponents);
  return out;
}

Ordinal Ordinal::natural(std::size_t n) { return unchecked(std::vector<Ordinal>(n)); }

Ordinal Ordinal::omega() { return omega_pow(natural(1)); }

Ordinal Ordinal::omega_pow(Ordinal exponent) {
  std::vector<Ordinal> exps;
  exps.push_back(std::move(exponent));
  return unchecked(std::move(exps));
}

Ordinal Ordinal::omega_tower(unsigned n) {
  Ordinal t = natural(1);
  for (unsigned i = 0; i < n; ++i) t = omega_pow(std::move(t));
  return t;
}

Ordinal Ordinal::from_exponents(std::vector<Ordinal> exponents) {
  for (std::size_t i = 0; i + 1 < exponents.size(); ++i) {
    if (exponents[i] < exponents[i + 1]) {
      throw std::invalid_argument("Ordinal: exponent sequence must be non-increasing");
    }
  }
  return unchecked(std::move(exponents));
}

bool Ordinal::is_natural() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const Ordinal& e) { return e.is_zero(); });
}

std::size_t Ordinal::as_natural() const {
  if (!is_natural()) throw std::logic_error("Ordinal::as_natural: not a natural number");
  return exps_.size();
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& rhs) const {
  // Lexicographic walk over exponent sequences; for normal forms a proper
  // prefix denotes the smaller ordinal.
  const std::size_t n = exps_.size();
  const std::size_t m = rhs.exps_.size();
  for (std::size_t i = 0; i < std::min(n, m); ++i) {
    auto cmp = exps_[i] <=> rhs.exps_[i];
    if (cmp != 0) return cmp;
  }
  return n <=> m;
}

const Ordinal& Ordinal::end_log() const { return exps_.empty() ? kZero : exps_.back(); }

std::size_t Ordinal::complexity() const {
  std::size_t total = 1;
  for (const auto& e : exps_) total += e.complexity();
  return total;
}

Ordinal Ordinal::successor() const { return *this + natural(1); }

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.exps_.front();
  std::vector<Ordinal> out;
  out.reserve(a.exps_.size() + b.exps_.size());
  for (const auto& e : a.exps_) {
    if (e < lead) break;
    out.push_back(e);
  }
  out.insert(out.end(), b.exps_.begin(), b.exps_.end());
  return Ordinal::unchecked(std::move(out));
}

std::string Ordinal::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  std::size_t i = 0;
  while (i < exps_.size() && !exps_[i].is_zero()) {
    if (!out.empty()) out += " + ";
    const Ordinal& e = exps_[i];
    if (e.is_natural() && e.as_natural() == 1) {
      out += "w";
    } else {
      std::string es = e.to_string();
      if (es.find(' ') != std::string::npos) {
        out += "w^(" + es + ")";
      } else {
        out += "w^" + es;
      }
    }
    ++i;
  }
  const std::size_t trailing = exps_.size() - i;
  if (trailing > 0) {
    if (!out.empty()) out += " + ";
    out += std::to_string(trailing);
  }
  return out;
}

Interval::Interval(Ordinal lo_init, Ordinal hi_init)
    : lo(std::move(lo_init)), hi(std::move(hi_init)) {
  if (!(lo < hi)) throw std::invalid_argument("Interval: requires lo < hi");
}

std::string Interval::to_string() const {
  return "[" + lo.to_string() + ", " + hi.to_string() + ")";
}

Ordinal end_log(const Interval& a) {
  if (!a.lo.end_log().is_zero()) {
    throw std::invalid_argument("end_log(Interval): lower end must be 0 or a successor");
  }
  const auto& ae = a.lo.exponents();
  const auto& be = a.hi.exponents();
  const std::size_t n = ae.size();
  const std::size_t m = be.size();
  // k is the first position where the normal forms diverge (then ae[k] < be[k]
  // because lo < hi), or n when lo's form is a proper prefix of hi's. Either
  // way k < m.
  std::size_t k = n;
  for (std::size_t i = 0; i < std::min(n, m); ++i) {
    if (ae[i] != be[i]) {
      k = i;
      break;
    }
  }
  const Ordinal& bk = be[k];
  if (k + 1 == m) return bk.is_zero() ? Ordinal::natural(1) : bk;
  return bk.successor();
}

}  // namespace glpc
