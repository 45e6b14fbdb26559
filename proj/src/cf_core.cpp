#include "cfm/cf_core.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace cfm {

Word::Word(std::vector<BigInt> quotients) : q_(std::move(quotients)) {
  for (const BigInt& a : q_) {
    if (a < 1) throw std::invalid_argument("Word: every partial quotient must be >= 1");
  }
}

Word::Word(std::initializer_list<unsigned long> quotients) {
  q_.reserve(quotients.size());
  for (unsigned long a : quotients) {
    if (a < 1) throw std::invalid_argument("Word: every partial quotient must be >= 1");
    q_.emplace_back(a);
  }
}

Word Word::appended(const BigInt& a) const {
  if (a < 1) throw std::invalid_argument("Word: appended quotient must be >= 1");
  std::vector<BigInt> q = q_;
  q.push_back(a);
  Word w;
  w.q_ = std::move(q);
  return w;
}

Word Word::concat(const Word& other) const {
  std::vector<BigInt> q = q_;
  q.insert(q.end(), other.q_.begin(), other.q_.end());
  Word w;
  w.q_ = std::move(q);
  return w;
}

Word Word::prefix(int len) const {
  Word w;
  w.q_.assign(q_.begin(), q_.begin() + len);
  return w;
}

std::string Word::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < q_.size(); ++i) {
    if (i) os << ",";
    os << q_[i];
  }
  os << ")";
  return os.str();
}

bool RationalInterval::contains(const Rat& x) const {
  if (closed_side == ClosedSide::left) return x >= left && x < right;
  return x > left && x <= right;
}

Word cf_expand(const Rat& x) {
  if (x <= 0 || x >= 1) throw std::domain_error("cf_expand: x must lie in (0,1)");
  // Euclid on num/den; remainders stay in (0,1) so the final quotient
  // is >= 2 automatically (a trailing 1 would force a remainder of 1).
  BigInt num = x.get_num();
  BigInt den = x.get_den();
  std::vector<BigInt> q;
  while (num != 0) {
    BigInt a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    q.push_back(a);
    den = num;
    num = r;
  }
  return Word(std::move(q));
}

ContinuantTable continuants(const Word& w) {
  ContinuantTable t;
  const int n = w.order();
  t.p.reserve((size_t)n + 2);
  t.q.reserve((size_t)n + 2);
  t.p.emplace_back(1);  // p_{-1}
  t.p.emplace_back(0);  // p_0
  t.q.emplace_back(0);  // q_{-1}
  t.q.emplace_back(1);  // q_0
  for (int i = 1; i <= n; ++i) {
    t.p.push_back(w.at(i) * t.p[(size_t)i] + t.p[(size_t)i - 1]);
    t.q.push_back(w.at(i) * t.q[(size_t)i] + t.q[(size_t)i - 1]);
  }
  return t;
}

RationalInterval cylinder(const Word& w) {
  ContinuantTable t = continuants(w);
  Rat conv(t.pn(), t.qn());
  Rat mediant(t.pn() + t.pn_prev(), t.qn() + t.qn_prev());
  conv.canonicalize();
  mediant.canonicalize();
  RationalInterval iv;
  iv.order = w.order();
  if (w.order() % 2 == 0) {
    iv.left = conv;
    iv.right = mediant;
    iv.closed_side = ClosedSide::left;
  } else {
    iv.left = mediant;
    iv.right = conv;
    iv.closed_side = ClosedSide::right;
  }
  return iv;
}

Rat cylinder_length(const Word& w) {
  ContinuantTable t = continuants(w);
  Rat len(1, t.qn() * (t.qn() + t.qn_prev()));
  len.canonicalize();
  return len;
}

Rat tail_measure(const ContinuantTable& t, const BigInt& m) {
  if (m < 1) throw std::domain_error("tail_measure: m must be >= 1");
  Rat r(1, t.qn() * (m * t.qn() + t.qn_prev()));
  r.canonicalize();
  return r;
}

Rat tail_measure(const Word& w, const BigInt& m) {
  return tail_measure(continuants(w), m);
}

Rat gauss_iterate(const Rat& x, unsigned long k) {
  if (x < 0 || x >= 1) throw std::domain_error("gauss_iterate: x must lie in [0,1)");
  Rat cur = x;
  for (unsigned long i = 0; i < k; ++i) {
    if (cur == 0) return cur;
    BigInt num(cur.get_num());
    BigInt den(cur.get_den());
    // T(p/q) = q/p - floor(q/p)
    BigInt a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
    cur = Rat(r, num);
    cur.canonicalize();
  }
  return cur;
}

Rat word_value(const Word& w) {
  if (w.empty()) throw std::domain_error("word_value: empty word has no value");
  ContinuantTable t = continuants(w);
  Rat v(t.pn(), t.qn());
  v.canonicalize();
  return v;
}

}  // namespace cfm
