#include "glpc/bench.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "glpc/decider.hpp"
#include "glpc/qbf.hpp"

namespace glpc {

Formula words_chain_formula(std::size_t size) {
  // |<0>^m T -> <0>^m T| = 2m + 3; pick the largest m that fits.
  const std::size_t m = size >= 5 ? (size - 3) / 2 : 1;
  Formula word = Formula::top();
  for (std::size_t i = 0; i < m; ++i) word = Formula::diamond(0, std::move(word));
  return Formula::implication(word, word);
}

namespace {

Formula random_normalized_formula(std::mt19937_64& rng, std::size_t size, unsigned max_index) {
  if (size <= 1) return Formula::bot();
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<unsigned> index(0, max_index);
  if (size == 2 || kind(rng) != 0) {
    if (kind(rng) == 1) return Formula::negation(random_normalized_formula(rng, size - 1, max_index));
    return Formula::diamond(index(rng), random_normalized_formula(rng, size - 1, max_index));
  }
  std::uniform_int_distribution<std::size_t> split(1, size - 2);
  const std::size_t left = split(rng);
  return Formula::conjunction(random_normalized_formula(rng, left, max_index),
                              random_normalized_formula(rng, size - 1 - left, max_index));
}

double median_of_three(double a, double b, double c) {
  return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

BenchRow time_decide(const std::string& family, std::size_t size, const Formula& f,
                     unsigned level) {
  BenchRow row{family, size, level, 0.0, 0, 0};
  double samples[3] = {0, 0, 0};
  Verdict verdict;
  for (double& sample : samples) {
    verdict = decide_at_level(f, level);
    sample = verdict.stats.millis;
  }
  row.millis = median_of_three(samples[0], samples[1], samples[2]);
  row.max_w = verdict.stats.max_width;
  row.max_oc = verdict.stats.max_ord_cost;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::string& family, const std::vector<std::size_t>& sizes,
                                std::uint64_t seed) {
  std::vector<BenchRow> rows;
  std::mt19937_64 rng(seed);
  for (const std::size_t size : sizes) {
    if (family == "words") {
      rows.push_back(time_decide(family, size, words_chain_formula(size), 1));
    } else if (family == "random") {
      const Formula f = random_normalized_formula(rng, std::max<std::size_t>(size, 1), 1);
      rows.push_back(time_decide(family, size, f, 2));
    } else if (family == "qbf") {
      if (size == 0 || size > 5) throw std::invalid_argument("qbf family: sizes are 1..5 variables");
      Qbf q;
      std::uniform_int_distribution<int> coin(0, 1);
      for (std::size_t v = 0; v < size; ++v) {
        q.prefix.push_back(coin(rng) ? Quantifier::ForAll : Quantifier::Exists);
      }
      std::uniform_int_distribution<int> shape(0, 2);
      BoolExpr matrix = BoolExpr::variable(0);
      for (std::size_t v = 1; v < size; ++v) {
        BoolExpr var = BoolExpr::variable(static_cast<unsigned>(v));
        switch (shape(rng)) {
          case 0:
            matrix = BoolExpr::conjunction(std::move(matrix), std::move(var));
            break;
          case 1:
            matrix = BoolExpr::disjunction(std::move(matrix), std::move(var));
            break;
          default:
            matrix = BoolExpr::implication(std::move(matrix), std::move(var));
            break;
        }
      }
      q.matrix = std::move(matrix);
      const Formula reduced = reduce_to_glp(q);
      const unsigned level = static_cast<unsigned>(4 * size);
      BenchRow row = time_decide(family, size, reduced, level);
      rows.push_back(std::move(row));
    } else {
      throw std::invalid_argument("unknown bench family: " + family);
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "family,size,n_modal,millis,max_w,max_oc\n";
  for (const auto& row : rows) {
    out << row.family << ',' << row.size << ',' << row.n_modal << ',';
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", row.millis);
    out << buffer << ',' << row.max_w << ',' << row.max_oc << '\n';
  }
}

double fit_loglog_slope(const std::vector<BenchRow>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("fit_loglog_slope: need at least two rows");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(rows.size());
  for (const auto& row : rows) {
    const double x = std::log(static_cast<double>(row.size));
    const double y = std::log(std::max(row.millis, 1e-6));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace glpc
