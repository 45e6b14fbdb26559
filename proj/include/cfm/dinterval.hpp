#pragma once

#include <cmath>
#include <limits>

#include "cfm/bigint.hpp"

namespace cfm {

// Double-precision interval with outward rounding. Directed rounding is
// emulated with nextafter around correctly-rounded (or <=2 ulp for libm)
// operations, which is orders of magnitude below the 1e-6..1e-9 tolerances
// this project certifies against.
struct DInterval {
  double lo = 0.0;
  double hi = 0.0;

  static DInterval exact(double v) { return {v, v}; }
  static DInterval zero() { return {0.0, 0.0}; }

  DInterval operator+(const DInterval& o) const {
    return {step_down(lo + o.lo), step_up(hi + o.hi)};
  }
  DInterval operator-(const DInterval& o) const {
    return {step_down(lo - o.hi), step_up(hi - o.lo)};
  }
  DInterval operator*(const DInterval& o) const {
    double c[4] = {lo * o.lo, lo * o.hi, hi * o.lo, hi * o.hi};
    double mn = c[0], mx = c[0];
    for (double v : c) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    return {step_down(mn), step_up(mx)};
  }
  DInterval operator/(const DInterval& o) const {
    // Denominator must not straddle zero.
    double c[4] = {lo / o.lo, lo / o.hi, hi / o.lo, hi / o.hi};
    double mn = c[0], mx = c[0];
    for (double v : c) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    return {step_down(mn), step_up(mx)};
  }

  DInterval clamped_nonneg() const { return {lo < 0 ? 0.0 : lo, hi < 0 ? 0.0 : hi}; }
  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }

  static double step_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
  static double step_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
};

inline DInterval di_widen(const DInterval& x, double abs_err) {
  return {DInterval::step_down(x.lo - abs_err), DInterval::step_up(x.hi + abs_err)};
}

// Encloses a nonnegative rational. mpq_get_d truncates toward zero.
inline DInterval di_from_rat(const Rat& r) {
  double d = mpq_get_d(r.get_mpq_t());
  return {d, DInterval::step_up(d)};
}

// Encloses a nonnegative big integer. mpz_get_d truncates toward zero.
inline DInterval di_from_big(const BigInt& z) {
  double d = mpz_get_d(z.get_mpz_t());
  return {d, DInterval::step_up(d)};
}

// Encloses 1/(d1*d2) for positive big integers.
inline DInterval di_inv_of_product(const BigInt& d1, const BigInt& d2) {
  BigInt den = d1 * d2;
  double d = mpz_get_d(den.get_mpz_t());  // d <= den < step_up(d)
  double hi = DInterval::step_up(1.0 / d);
  double lo = DInterval::step_down(1.0 / DInterval::step_up(d));
  if (lo < 0) lo = 0;
  return {lo, hi};
}

// log1p on a nonnegative interval; assumes libm log1p within 2 ulp.
inline DInterval di_log1p(const DInterval& x) {
  double lo = std::log1p(x.lo);
  double hi = std::log1p(x.hi);
  lo = DInterval::step_down(DInterval::step_down(lo));
  hi = DInterval::step_up(DInterval::step_up(hi));
  return {lo, hi};
}

}  // namespace cfm
