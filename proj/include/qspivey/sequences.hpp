#pragma once

#include "qspivey/bigint.hpp"
#include "qspivey/poly.hpp"
#include "qspivey/report.hpp"

#include <vector>

namespace qspivey {

/// Lower-triangular table; rows[n] holds entries k = 0..n.
template <class R>
using Triangle = std::vector<std::vector<R>>;

using TriangleBig = Triangle<BigInt>;
using TriangleQ = Triangle<QPoly>;

/// Stirling numbers of the second kind: S(n,k) = S(n-1,k-1) + k S(n-1,k).
TriangleBig stirling2(unsigned long n_max);

/// Bell numbers B_0..B_{n_max} as row sums of stirling2.
std::vector<BigInt> bell(unsigned long n_max);

/// Bell numbers from B_{n+1} = sum_k C(n,k) B_k, independent of the triangle.
std::vector<BigInt> bell_by_recurrence(unsigned long n_max);

/// q-Stirling numbers of the second kind, the (k,k) coefficients of (a†a)^n:
/// S_q(n,k) = q^{k-1} S_q(n-1,k-1) + [k]_q S_q(n-1,k), S_q(0,0) = 1, S_q(n,0) = 0 for n >= 1.
TriangleQ q_stirling2(unsigned long n_max);

/// B_{n,q}(x) = sum_k S_q(n,k) x^k.
XQPoly q_bell_poly(unsigned long n);

/// (q,r)-Whitney numbers of the second kind, defined through
///   (m a†a + r)^n = sum_k m^k W(n,k) (a†)^k a^k
/// and generated by W(n,k) = q^{k-1} W(n-1,k-1) + (m[k]_q + r) W(n-1,k), W(0,0) = 1.
/// Throws std::invalid_argument for m == 0.
TriangleQ qr_whitney(unsigned long n_max, unsigned long m, unsigned long r);

/// D_{m,r,q}(n,x) = sum_k W_{m,r,q}(n,k) x^k. Throws for m == 0.
XQPoly qr_dowling_poly(unsigned long n, unsigned long m, unsigned long r);

/// r-Whitney numbers: qr_whitney evaluated at q = 1.
TriangleBig r_whitney(unsigned long n_max, unsigned long m, unsigned long r);

/// r-Dowling numbers D_{m,r}(0..n_max): row sums of r_whitney.
std::vector<BigInt> r_dowling(unsigned long n_max, unsigned long m, unsigned long r);

/// Entrywise q := 1.
TriangleBig evaluate_at_one(const TriangleQ& t);

/// sum_k row[k] x^k.
XQPoly row_polynomial(const std::vector<QPoly>& row);

/// Checks W_{m,0,q}(k,i) = m^{k-i} S_q(k,i) for every 0 <= i <= k <= k_max.
VerificationReport whitney_special_check(unsigned long k_max, unsigned long m);

}  // namespace qspivey
