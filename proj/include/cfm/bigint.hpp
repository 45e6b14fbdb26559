#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <vector>

namespace cfm {

using BigInt = mpz_class;
using Rat = mpq_class;

inline BigInt big(unsigned long v) { return BigInt(v); }

// ceil(num/den) for positive operands.
inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

// ceil of a positive rational.
inline BigInt ceil_rat(const Rat& x) {
  return ceil_div(BigInt(x.get_num()), BigInt(x.get_den()));
}

inline BigInt floor_rat(const Rat& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

// log of a positive big integer, accurate to long double precision.
inline long double log_big(const BigInt& z) {
  signed long exp_part = 0;
  double mant = mpz_get_d_2exp(&exp_part, z.get_mpz_t());
  return std::log((long double)mant) + (long double)exp_part * 0.693147180559945309417232121458L;
}

// log of a positive rational.
inline long double log_rat(const Rat& x) {
  return log_big(BigInt(x.get_num())) - log_big(BigInt(x.get_den()));
}

// Sums a list of exact rationals pairwise so intermediate denominators stay
// balanced (a flat left fold goes quadratic in the summand count).
inline Rat balanced_sum(std::vector<Rat> terms) {
  if (terms.empty()) return Rat(0);
  while (terms.size() > 1) {
    std::vector<Rat> next;
    next.reserve((terms.size() + 1) / 2);
    for (size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] + terms[i + 1]);
    if (terms.size() % 2) next.push_back(terms.back());
    terms.swap(next);
  }
  return terms[0];
}

}  // namespace cfm
