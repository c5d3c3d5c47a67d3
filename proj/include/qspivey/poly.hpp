#pragma once

#include "qspivey/bigint.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

namespace qspivey {

template <class R>
class Poly;
template <class R>
bool is_zero(const Poly<R>& p);

template <class R>
struct RingTraits {
  static R one() { return R(1); }
};

// Dense univariate polynomial over a commutative ring R, stored by ascending
// power. The zero polynomial is the empty coefficient sequence; otherwise the
// leading coefficient is nonzero. R must provide +, -, *, unary -, == and a
// free is_zero(const R&); its value-initialized state must be zero.
template <class R>
class Poly {
 public:
  using coefficient_type = R;

  Poly() = default;
  Poly(std::initializer_list<R> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly constant(R c) { return Poly(std::vector<R>{std::move(c)}); }

  static Poly monomial(R c, std::size_t power) {
    std::vector<R> v(power + 1);
    v[power] = std::move(c);
    return Poly(std::move(v));
  }

  /// The indeterminate itself, raised to `power`.
  static Poly variable_power(std::size_t power) { return monomial(RingTraits<R>::one(), power); }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  std::size_t size() const { return coeffs_.size(); }
  std::span<const R> coefficients() const { return coeffs_; }

  /// Coefficient of the indeterminate to the power `i`; zero past the end.
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R{}; }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly& operator*=(const R& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator-(Poly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (qspivey::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  friend Poly operator*(Poly a, const std::type_identity_t<R>& c) { return a *= c; }
  friend Poly operator*(const std::type_identity_t<R>& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && qspivey::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
struct RingTraits<Poly<R>> {
  static Poly<R> one() { return Poly<R>::constant(RingTraits<R>::one()); }
};

/// Polynomial in q with integer coefficients.
using QPoly = Poly<BigInt>;
/// Polynomial in x whose coefficients are polynomials in q.
using XQPoly = Poly<QPoly>;

/// p^e by repeated squaring; p^0 = 1 for every p, including the zero polynomial.
template <class R>
Poly<R> pow(Poly<R> base, unsigned long e) {
  Poly<R> result = RingTraits<Poly<R>>::one();
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

/// Horner evaluation at `v`.
template <class R>
R evaluate(const Poly<R>& p, const R& v) {
  R acc{};
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * v;
    acc = acc + *it;
  }
  return acc;
}

/// Specialize x := s in a polynomial in x over q.
inline QPoly evaluate_x(const XQPoly& p, unsigned long s) { return evaluate(p, QPoly::constant(BigInt(s))); }

/// Divides every coefficient by `d`; nullopt if any division is inexact or d == 0.
std::optional<QPoly> divide_exact(const QPoly& p, const BigInt& d);

}  // namespace qspivey
