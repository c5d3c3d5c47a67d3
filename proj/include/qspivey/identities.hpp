#pragma once

#include "qspivey/report.hpp"

#include <optional>

namespace qspivey {

// Verifiers for the Spivey-type identities and the operator lemmas behind them.
// Each returns a report carrying both sides; none of them throws on a failed
// identity, only on invalid parameters (std::invalid_argument) or a Fock
// truncation that is too small (CapOverflow).

/// t^n = sum_k S(n,k) (t)_k at every integer 0 <= t <= n.
VerificationReport verify_stirling_def(unsigned long n);

/// B_0..B_n from the binomial recurrence against the Stirling row sums.
VerificationReport verify_bell_recurrence(unsigned long n);

/// B_{n+mshift} = sum_{k<=n} sum_{j<=mshift} j^{n-k} S(mshift,j) C(n,k) B_k, with 0^0 = 1.
VerificationReport verify_spivey(unsigned long n, unsigned long mshift);

/// q-Bell polynomial form:
///   B_{n+mshift,q}(x) = sum_j sum_k S_q(mshift,j) C(n,k) [j]_q^{n-k} q^{jk} B_{k,q}(x) F_j(x)
/// with F_j(x) = [x]_{q,j} (literal) or x^j (corrected). With an integer x both
/// sides are compared as polynomials in q; without x (corrected only) they are
/// compared as polynomials in x over q.
VerificationReport verify_result1(unsigned long n, unsigned long mshift, std::optional<unsigned long> x,
                                  Variant variant);

/// B_{n+l,q} = sum_j sum_k S_q(l,j) C(n,k) [j]_q^{n-k} q^{jk} B_{k,q}, with B_{k,q} = B_{k,q}(1).
VerificationReport verify_katriel(unsigned long n, unsigned long l);

/// (q,r)-Dowling form:
///   D_{m,r,q}(n+l,x) = sum_j sum_k c_j W_{m,r,q}(l,j) C(n,k) (m[j]_q + r)^{n-k} q^{jk} D_{m,0,q}(k,x) F_j(x)
/// literal: c_j = m^j, F_j = [x]_{q,j}. corrected: c_j = 1, F_j = x^j.
VerificationReport verify_result2(unsigned long n, unsigned long l, unsigned long m, unsigned long r,
                                  std::optional<unsigned long> x, Variant variant);

/// Classical r-Dowling form at q = 1, x = 1:
///   D_{m,r}(n+l) = sum_j sum_k c_j W_{m,r}(l,j) C(n,k) (mj + r)^{n-k} D_{m,0}(k)
/// literal: c_j = m^j. corrected: c_j = 1.
VerificationReport verify_result3(unsigned long n, unsigned long l, unsigned long m, unsigned long r,
                                  Variant variant);

enum class Lemma { lem1, lem2, lem3, lem4 };

/// lem1: [a, (a†)^k]_{q^k} = [k]_q (a†)^{k-1}
/// lem2: a^k e_q(x a†)|0> = x^k e_q(x a†)|0>, on occupancies 0..cap-k (needs cap >= k)
/// lem3: (a†a)(a†)^k = (a†)^k([k]_q + q^k a†a)
/// lem4: (m a†a + r)(a†)^k = (a†)^k(m[k]_q + r + m q^k a†a)
VerificationReport verify_lemma(Lemma which, unsigned long k, unsigned long m = 1, unsigned long r = 0,
                                unsigned long cap = 0);

enum class TriangleKind { q_stirling, qr_whitney };

/// Recurrence row n against the diagonal coefficients of the normal-ordered
/// (a†a)^n or (m a†a + r)^n, the latter unscaled by m^k.
VerificationReport verify_triangle_vs_oracle(TriangleKind kind, unsigned long n, unsigned long m = 1,
                                             unsigned long r = 0);

/// Same comparison with a caller-supplied candidate row in place of the recurrence.
VerificationReport check_row_against_oracle(TriangleKind kind, unsigned long n, unsigned long m, unsigned long r,
                                            const std::vector<QPoly>& row);

}  // namespace qspivey
