#pragma once

#include "qspivey/normal_form.hpp"
#include "qspivey/poly.hpp"

#include <map>
#include <stdexcept>

namespace qspivey {

/// Truncated Fock-space vector in the rescaled basis ||s>> = |s> / sqrt([s]_q!).
/// In that basis a ||s>> = ||s-1>> and a† ||s>> = [s+1]_q ||s+1>>, so every
/// amplitude stays polynomial. Amplitudes are polynomials in x over q; only
/// nonzero amplitudes are stored, all at occupancies <= cap.
class FockVector {
 public:
  using Amplitudes = std::map<unsigned long, XQPoly>;

  explicit FockVector(unsigned long cap = 0) : cap_(cap) {}

  /// Unit amplitude at occupancy s.
  static FockVector basis(unsigned long s, unsigned long cap);

  unsigned long cap() const { return cap_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  bool is_zero() const { return amplitudes_.empty(); }

  XQPoly amplitude(unsigned long s) const;

  /// Adds `value` at occupancy s. Throws std::out_of_range past the cap.
  void accumulate(unsigned long s, const XQPoly& value);

  /// Copy keeping occupancies <= new_cap, with cap lowered to new_cap.
  FockVector truncated(unsigned long new_cap) const;

  FockVector& operator*=(const XQPoly& c);
  friend FockVector operator*(FockVector v, const XQPoly& c) { return v *= c; }
  friend bool operator==(const FockVector&, const FockVector&) = default;

 private:
  unsigned long cap_;
  Amplitudes amplitudes_;
};

/// Raised when applying an operator would push amplitude above the cap.
class CapOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear action of a normally ordered operator. A term (a†)^k a^l acting on
/// ||s>> gives 0 for s < l and [s-l+k]_{q,k} ||s-l+k>> otherwise.
/// Throws CapOverflow if any non-vanishing term lands above v.cap().
FockVector apply(const NormalForm& op, const FockVector& v);

/// Truncation of e_q(x a†)|0>: amplitude x^s at every 0 <= s <= cap.
FockVector coherent_truncated(unsigned long cap);

}  // namespace qspivey
