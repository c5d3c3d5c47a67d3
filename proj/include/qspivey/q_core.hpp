#pragma once

#include "qspivey/bigint.hpp"
#include "qspivey/poly.hpp"

namespace qspivey {

/// q^e.
QPoly q_power(unsigned long e);

/// [s]_q = 1 + q + ... + q^{s-1}; [0]_q is the zero polynomial.
QPoly q_int(unsigned long s);

/// [s]_{q,k} = [s]_q [s-1]_q ... [s-k+1]_q. Empty product for k = 0; zero when k > s.
QPoly q_falling(unsigned long s, unsigned long k);

/// [s]_q! = [s]_{q,s}. Ratios [l]_q!/[l-k]_q! should be formed with q_falling(l, k).
QPoly q_factorial(unsigned long s);

/// Classical falling factorial (t)_k = t(t-1)...(t-k+1), (t)_0 = 1.
BigInt falling_factorial(const BigInt& t, unsigned long k);

/// Binomial coefficient; 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace qspivey
