#pragma once

#include <vector>

#include "cfm/cf_core.hpp"
#include "cfm/dinterval.hpp"

namespace cfm {

// Two-sided enclosure of a Lebesgue measure. exact == true means both ends
// coincide and were computed in exact rational arithmetic.
struct CertifiedMeasure {
  Rat lower;
  Rat upper;
  bool exact = false;

  Rat width() const { return upper - lower; }
  double rel_width() const;
  bool contains(const Rat& v) const { return lower <= v && v <= upper; }
  double mid() const;

  static CertifiedMeasure from_exact(const Rat& v) { return {v, v, true}; }
  static CertifiedMeasure from_interval(const DInterval& iv);
};

struct MeasureOptions {
  double tol = 1e-9;                   // relative bracket width target
  long long term_budget = 10'000'000;  // materialized summands per call
};

// Exact measure of {x in I_n(w) : a_{n+1}(x) a_{n+2}(x) >= l}.
Rat product_tail_measure(const Word& w, const Rat& l);

// Measure of the union over one adjacent quotient pair (inserted between
// `prefix` and `suffix`) constrained to have product >= l, everything else
// fixed. Bracket width <= tol * upper, or budget_exceeded.
CertifiedMeasure pair_product_measure(const Word& prefix, const Word& suffix, const Rat& l,
                                      const MeasureOptions& opt = {});

// Same cylinders with the complementary constraint (product < l).
CertifiedMeasure pair_product_complement(const Word& prefix, const Word& suffix, const Rat& l,
                                         const MeasureOptions& opt = {});

enum class OverlapVariant {
  both_pairs_large,         // a_{n-1} a_n >= l and a_n a_{n+1} >= l
  first_small_second_large  // a_{n-1} a_n < l and a_n a_{n+1} >= l
};

// Overlapping pair constraints at the last three positions after `prefix`;
// the trailing quotient sum is exact, the two leading sums are certified.
CertifiedMeasure overlapping_pair_measure(const Word& prefix, const Rat& l, OverlapVariant variant,
                                          const MeasureOptions& opt = {});

// Shape of the upper bound for the measure of the two-hit event at level n
// with threshold phi_n: n log^2(phi_n)/phi_n^2 + 1/phi_n. Requires phi_n > 1.
double event_measure_bound(double n, double phi_n);

// Partial sums of sum_n (phi(n) + n log^2 phi(n)) / phi(n)^2 for a tabulated
// nondecreasing phi >= 1 (values for n = 1..N in order).
struct SeriesPartials {
  std::vector<double> total;
  std::vector<double> inverse_part;  // sum of 1/phi(n)
  std::vector<double> log_part;      // sum of n log^2 phi(n) / phi(n)^2
};
SeriesPartials series_partial(const std::vector<double>& phi);

// Certified tail sum over a single quotient position:
//   sum_{a >= a0} 1/((a X + Y)(a Z + W)),  X,Z >= 1, Y,W >= 0.
// Used by the measure brackets; exposed for tests.
DInterval tail_sum_recip_quad(const BigInt& X, const BigInt& Y, const BigInt& Z, const BigInt& W,
                              const BigInt& a0, double rel_tol);

// Certified finite-range version over a in [a_lo, a_hi].
DInterval range_sum_recip_quad(const BigInt& X, const BigInt& Y, const BigInt& Z, const BigInt& W,
                               const BigInt& a_lo, const BigInt& a_hi, double rel_tol);

}  // namespace cfm
