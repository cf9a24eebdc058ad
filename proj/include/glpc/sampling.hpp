#pragma once

#include <cstddef>
#include <random>

#include "glpc/ordinal.hpp"
#include "glpc/setcode.hpp"

namespace glpc {

/// Random normal-form ordinal below w_{tower_height} with complexity capped
/// near max_complexity.
Ordinal random_cnf_ordinal(std::mt19937_64& rng, unsigned tower_height,
                           std::size_t max_complexity);

/// Random ordinal strictly below bound (bound > 0).
Ordinal random_ordinal_below(const Ordinal& bound, std::mt19937_64& rng);

/// Random well-formed code over U^n_bound with at most max_parts intervals
/// per level.
WorldCode random_code(std::size_t n, const Ordinal& bound, std::mt19937_64& rng,
                      unsigned max_parts = 4);

/// Random world of U^n_bound built along the end_log chain.
World random_world(std::size_t n, const Ordinal& bound, std::mt19937_64& rng);

/// Random world biased towards the code's interval endpoints (heads drawn
/// from lo, lo+1, lo+w^d, ...), where the interval logic is most likely to
/// break; falls back to chain sampling when a biased pick is invalid.
World random_world_for_code(std::size_t n, const Ordinal& bound, const WorldCode& c,
                            std::mt19937_64& rng);

}  // namespace glpc
