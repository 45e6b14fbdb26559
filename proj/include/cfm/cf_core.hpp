#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "cfm/bigint.hpp"

namespace cfm {

// Finite sequence of positive integer partial quotients (a_1, ..., a_n).
// The empty word (order 0) is legal and indexes the whole space [0,1).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<BigInt> quotients);
  Word(std::initializer_list<unsigned long> quotients);

  int order() const { return (int)q_.size(); }
  bool empty() const { return q_.empty(); }
  // 1-based, mirroring the usual a_1..a_n indexing.
  const BigInt& at(int i) const { return q_.at((size_t)i - 1); }
  const std::vector<BigInt>& quotients() const { return q_; }

  Word appended(const BigInt& a) const;
  Word concat(const Word& other) const;
  Word prefix(int len) const;

  bool operator==(const Word& other) const { return q_ == other.q_; }
  std::string str() const;

 private:
  std::vector<BigInt> q_;
};

// Continuant rows p_i, q_i for i = -1, 0, ..., n, stored with a +1 offset so
// the conventional seed rows (p_-1,q_-1) = (1,0), (p_0,q_0) = (0,1) sit first.
struct ContinuantTable {
  std::vector<BigInt> p;
  std::vector<BigInt> q;

  int order() const { return (int)p.size() - 2; }
  const BigInt& p_at(int i) const { return p.at((size_t)(i + 1)); }
  const BigInt& q_at(int i) const { return q.at((size_t)(i + 1)); }
  const BigInt& pn() const { return p.back(); }
  const BigInt& qn() const { return q.back(); }
  const BigInt& pn_prev() const { return p[p.size() - 2]; }
  const BigInt& qn_prev() const { return q[q.size() - 2]; }
};

enum class ClosedSide { left, right };

// Subinterval of [0,1] with exact rational endpoints; half-open on the side
// opposite to closed_side.
struct RationalInterval {
  Rat left;
  Rat right;
  ClosedSide closed_side = ClosedSide::left;
  int order = 0;

  Rat length() const { return right - left; }
  bool contains(const Rat& x) const;
};

// Canonical continued fraction expansion of a rational in (0,1); the final
// quotient is >= 2 except for the single-letter words 1/a.
Word cf_expand(const Rat& x);

ContinuantTable continuants(const Word& w);

// The basic cylinder of the word: every rational in it expands with prefix w.
RationalInterval cylinder(const Word& w);

// Exactly 1/(q_n (q_n + q_{n-1})).
Rat cylinder_length(const Word& w);

// Lebesgue measure of {x in I_n(w) : a_{n+1}(x) >= m}, i.e.
// 1/(q_n (m q_n + q_{n-1})). m >= 1.
Rat tail_measure(const Word& w, const BigInt& m);
Rat tail_measure(const ContinuantTable& t, const BigInt& m);

// k-fold Gauss map T(x) = 1/x mod 1 with T(0) = 0, exact on rationals.
Rat gauss_iterate(const Rat& x, unsigned long k);

// Value p_n/q_n of the word as a finite continued fraction.
Rat word_value(const Word& w);

}  // namespace cfm
