#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "glpc/formula.hpp"

namespace glpc {

struct BenchRow {
  std::string family;
  std::size_t size = 0;
  unsigned n_modal = 0;
  double millis = 0.0;
  std::size_t max_w = 0;
  std::size_t max_oc = 0;
};

/// families:
///   "words"  — <0>^m T -> <0>^m T chains, |f| close to the requested size
///   "random" — random normalized formulas of the requested size at level 2
///   "qbf"    — reduction round-trips; size = number of quantified variables
/// Rows are deterministic for a fixed seed except for the millis column.
std::vector<BenchRow> run_bench(const std::string& family, const std::vector<std::size_t>& sizes,
                                std::uint64_t seed);

/// header: family,size,n_modal,millis,max_w,max_oc
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// The chain formula used by the "words" family.
Formula words_chain_formula(std::size_t size);

/// Least-squares slope of log(millis) against log(size).
double fit_loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace glpc
