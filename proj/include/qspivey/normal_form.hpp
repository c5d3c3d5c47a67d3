#pragma once

#include "qspivey/poly.hpp"

#include <compare>
#include <map>

namespace qspivey {

/// The word (a†)^creators a^annihilators. Ordered by (creators, annihilators).
struct Monomial {
  unsigned long creators = 0;
  unsigned long annihilators = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// A normally ordered q-boson operator: sum of c(q) (a†)^k a^l with every
/// a† to the left of every a, under the relation a a† - q a† a = 1.
/// Only nonzero coefficients are stored.
class NormalForm {
 public:
  using Terms = std::map<Monomial, QPoly>;

  NormalForm() = default;

  static NormalForm identity() { return scalar(QPoly::constant(1)); }
  static NormalForm scalar(QPoly c) { return term(0, 0, std::move(c)); }
  static NormalForm term(unsigned long k, unsigned long l, QPoly c);
  /// a
  static NormalForm annihilator(unsigned long power = 1) { return term(0, power, QPoly::constant(1)); }
  /// a†
  static NormalForm creator(unsigned long power = 1) { return term(power, 0, QPoly::constant(1)); }
  /// N = a† a
  static NormalForm number() { return term(1, 1, QPoly::constant(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of (a†)^k a^l, zero when absent.
  QPoly coefficient(unsigned long k, unsigned long l) const;

  /// Adds c (a†)^k a^l, dropping the entry if it cancels.
  void accumulate(const Monomial& m, const QPoly& c);

  NormalForm& operator+=(const NormalForm& o);
  NormalForm& operator-=(const NormalForm& o);
  NormalForm& operator*=(const QPoly& c);

  friend NormalForm operator+(NormalForm a, const NormalForm& b) { return a += b; }
  friend NormalForm operator-(NormalForm a, const NormalForm& b) { return a -= b; }
  friend NormalForm operator*(NormalForm a, const QPoly& c) { return a *= c; }
  friend NormalForm operator*(const QPoly& c, NormalForm a) { return a *= c; }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

 private:
  Terms terms_;
};

/// Operator product, re-normal-ordered with a (a†)^k = q^k (a†)^k a + [k]_q (a†)^{k-1}.
NormalForm operator*(const NormalForm& a, const NormalForm& b);

/// a^e; the zeroth power is the identity.
NormalForm pow(const NormalForm& a, unsigned long e);

/// a b - q^t b a.
NormalForm q_commutator(const NormalForm& a, const NormalForm& b, unsigned long t);

}  // namespace qspivey
