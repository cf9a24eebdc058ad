#include "glpc/sampling.hpp"

#include <algorithm>

namespace glpc {

Ordinal random_cnf_ordinal(std::mt19937_64& rng, unsigned tower_height,
                           std::size_t max_complexity) {
  if (tower_height == 0 || max_complexity <= 1) return Ordinal();
  if (tower_height == 1) {
    // below w: a natural number
    std::uniform_int_distribution<std::size_t> nat(0, std::min<std::size_t>(max_complexity - 1, 6));
    return Ordinal::natural(nat(rng));
  }
  std::uniform_int_distribution<int> term_count(0, 3);
  const int terms = term_count(rng);
  std::vector<Ordinal> exps;
  std::size_t budget = max_complexity - 1;
  for (int t = 0; t < terms && budget > 0; ++t) {
    Ordinal e = random_cnf_ordinal(rng, tower_height - 1, std::max<std::size_t>(budget / 2, 2));
    if (e.complexity() > budget) break;
    budget -= e.complexity();
    exps.push_back(std::move(e));
  }
  std::sort(exps.begin(), exps.end(), [](const Ordinal& a, const Ordinal& b) { return b < a; });
  return Ordinal::from_exponents(std::move(exps));
}

Ordinal random_ordinal_below(const Ordinal& bound, std::mt19937_64& rng) {
  if (bound.is_zero()) throw std::invalid_argument("random_ordinal_below: zero bound");
  if (bound.is_natural()) {
    std::uniform_int_distribution<std::size_t> nat(0, bound.as_natural() - 1);
    return Ordinal::natural(nat(rng));
  }
  for (int attempt = 0; attempt < 8; ++attempt) {
    Ordinal candidate = random_cnf_ordinal(rng, 3, 12);
    if (candidate < bound) return candidate;
  }
  std::uniform_int_distribution<std::size_t> nat(0, 4);
  return Ordinal::natural(nat(rng));
}

WorldCode random_code(std::size_t n, const Ordinal& bound, std::mt19937_64& rng,
                      unsigned max_parts) {
  if (n == 0) {
    std::uniform_int_distribution<int> bit(0, 1);
    return WorldCode::leaf(bit(rng) == 1);
  }
  // Split points must have end_log 0: successors of random ordinals below
  // the bound.
  std::uniform_int_distribution<unsigned> split_count(0, max_parts - 1);
  std::vector<Ordinal> splits;
  const unsigned wanted = split_count(rng);
  for (unsigned i = 0; i < wanted; ++i) {
    Ordinal split = random_ordinal_below(bound, rng).successor();
    if (split < bound) splits.push_back(std::move(split));
  }
  std::sort(splits.begin(), splits.end());
  splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
  std::vector<WorldCode::Part> parts;
  Ordinal lo;
  for (std::size_t i = 0; i <= splits.size(); ++i) {
    Ordinal hi = i < splits.size() ? splits[i] : bound;
    Interval interval(std::move(lo), hi);
    Ordinal child_bound = end_log(interval);
    WorldCode child = random_code(n - 1, child_bound, rng, max_parts);
    parts.push_back({std::move(interval), std::move(child_bound), std::move(child)});
    lo = std::move(hi);
  }
  return WorldCode::node(std::move(parts));
}

namespace {

// Random ordinal <= limit.
Ordinal random_ordinal_at_most(const Ordinal& limit, std::mt19937_64& rng) {
  if (limit.is_zero()) return Ordinal();
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0:
      return limit;
    case 1:
      return Ordinal();
    default:
      return random_ordinal_below(limit, rng);
  }
}

void extend_chain(World& w, std::size_t n, std::mt19937_64& rng) {
  while (w.coords.size() < n) {
    const Ordinal& limit = w.coords.back().end_log();
    w.coords.push_back(random_ordinal_at_most(limit, rng));
  }
}

}  // namespace

World random_world(std::size_t n, const Ordinal& bound, std::mt19937_64& rng) {
  World w;
  if (n == 0) return w;
  w.coords.push_back(random_ordinal_below(bound, rng));
  extend_chain(w, n, rng);
  return w;
}

World random_world_for_code(std::size_t n, const Ordinal& bound, const WorldCode& c,
                            std::mt19937_64& rng) {
  World w;
  if (n == 0) return w;
  std::uniform_int_distribution<int> coin(0, 3);
  if (c.is_leaf() || coin(rng) == 0) return random_world(n, bound, rng);
  const auto& parts = c.parts();
  std::uniform_int_distribution<std::size_t> part_pick(0, parts.size() - 1);
  const WorldCode::Part& part = parts[part_pick(rng)];
  Ordinal head = part.interval.lo;
  switch (coin(rng)) {
    case 0:
      break;  // the endpoint itself
    case 1: {
      Ordinal bumped = head.successor();
      if (part.interval.contains(bumped)) head = std::move(bumped);
      break;
    }
    default: {
      if (!part.child_bound.is_zero()) {
        Ordinal delta = random_ordinal_below(part.child_bound, rng);
        if (!delta.is_zero()) {
          Ordinal bumped = head + Ordinal::omega_pow(std::move(delta));
          if (part.interval.contains(bumped)) head = std::move(bumped);
        }
      }
      break;
    }
  }
  // Bias the tail towards the child code's endpoints as well.
  World tail = random_world_for_code(n - 1, part.child_bound, part.child, rng);
  if (!tail.coords.empty() && !(tail.coords.front() <= head.end_log())) {
    // Tail does not fit under this head: fall back to a chain extension.
    w.coords.push_back(std::move(head));
    extend_chain(w, n, rng);
    return w;
  }
  w.coords.push_back(std::move(head));
  for (auto& coord : tail.coords) w.coords.push_back(std::move(coord));
  return w;
}

}  // namespace glpc
