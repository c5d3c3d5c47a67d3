#include "qspivey/normal_form.hpp"
#include "qspivey/op_expr.hpp"
#include "qspivey/q_core.hpp"
#include "qspivey/sequences.hpp"
#include "qspivey/sweep.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qspivey;

namespace {

// S(n,t) from the expansion t^n = sum_k S(n,k)(t)_k, solved by forward
// substitution over t = 0..n. Uses no recurrence.
std::vector<BigInt> stirling_row_by_expansion(unsigned long n) {
  std::vector<BigInt> row(n + 1);
  for (unsigned long t = 0; t <= n; ++t) {
    BigInt rest = pow(BigInt(t), n);
    for (unsigned long k = 0; k < t; ++k) rest -= row[k] * falling_factorial(BigInt(t), k);
    const BigInt t_factorial = falling_factorial(BigInt(t), t);
    REQUIRE(mpz_divisible_p(rest.get_mpz_t(), t_factorial.get_mpz_t()));
    row[t] = rest / t_factorial;
  }
  return row;
}

// Diagonal coefficients of (m N + r)^n from the normal-ordering engine.
std::vector<QPoly> oracle_row(unsigned long n, unsigned long m, unsigned long r) {
  const NormalForm nf = normal_order("(m*N+r)^" + std::to_string(n), {m, r});
  std::vector<QPoly> row;
  for (unsigned long k = 0; k <= n; ++k) row.push_back(nf.coefficient(k, k));
  return row;
}

bool nonnegative(const QPoly& p) {
  for (const auto& c : p.coefficients()) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("sequences") {
  TEST_CASE("Stirling numbers of the second kind") {
    const auto s = stirling2(10);
    CHECK(s[0] == std::vector<BigInt>{1});
    CHECK(s[1] == std::vector<BigInt>{0, 1});
    CHECK(s[3] == std::vector<BigInt>{0, 1, 3, 1});
    for (unsigned long n = 0; n <= 10; ++n) {
      CHECK(s[n].size() == n + 1);
      CHECK(s[n] == stirling_row_by_expansion(n));
    }
  }

  TEST_CASE("Bell numbers") {
    const auto b = bell(10);
    CHECK(std::vector<BigInt>(b.begin(), b.begin() + 8) == std::vector<BigInt>{1, 1, 2, 5, 15, 52, 203, 877});
    CHECK(b[10] == 115975);
    CHECK(bell_by_recurrence(10) == b);
    CHECK(bell_by_recurrence(4)[4] == 15);
    for (unsigned n = 0; n <= 7; ++n) CHECK(count_set_partitions(n) == b[n]);
  }

  TEST_CASE("q-Stirling rows") {
    const auto t = q_stirling2(3);
    CHECK(t[0] == std::vector<QPoly>{QPoly{1}});
    CHECK(t[2] == std::vector<QPoly>{QPoly{}, QPoly{1}, QPoly{0, 1}});
    CHECK(t[3] == std::vector<QPoly>{QPoly{}, QPoly{1}, QPoly{0, 2, 1}, QPoly{0, 0, 0, 1}});
    CHECK(evaluate_at_one(q_stirling2(12)) == stirling2(12));
  }

  TEST_CASE("q-Stirling rows are certified by normal ordering") {
    const auto t = q_stirling2(9);
    for (unsigned long n = 0; n <= 9; ++n) CHECK(t[n] == oracle_row(n, 1, 0));
  }

  TEST_CASE("q-Stirling diagonal is q^{n(n-1)/2}") {
    const auto t = q_stirling2(12);
    for (unsigned long n = 0; n <= 12; ++n) CHECK(t[n][n] == q_power(n == 0 ? 0 : n * (n - 1) / 2));
  }

  TEST_CASE("q-Bell polynomials") {
    CHECK(q_bell_poly(0) == XQPoly{QPoly{1}});
    CHECK(q_bell_poly(2) == XQPoly{QPoly{}, QPoly{1}, QPoly{0, 1}});
    CHECK(evaluate_x(q_bell_poly(2), 1) == QPoly{1, 1});
  }

  TEST_CASE("(q,r)-Whitney rows") {
    for (unsigned long m = 1; m <= 4; ++m) {
      for (unsigned long r = 0; r <= 3; ++r) {
        const auto t = qr_whitney(2, m, r);
        CHECK(t[1] == std::vector<QPoly>{QPoly{BigInt(r)}, QPoly{1}});
        CHECK(t[2] == std::vector<QPoly>{QPoly{BigInt(r * r)}, QPoly{BigInt(m + 2 * r)}, QPoly{0, 1}});
      }
    }
    CHECK(qr_whitney(9, 1, 0) == q_stirling2(9));
    CHECK_THROWS_AS(qr_whitney(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(qr_dowling_poly(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(r_whitney(3, 0, 0), std::invalid_argument);
  }

  TEST_CASE("(q,r)-Whitney rows are certified by normal ordering") {
    for (unsigned long m = 1; m <= 3; ++m) {
      for (unsigned long r = 0; r <= 2; ++r) {
        const auto t = qr_whitney(7, m, r);
        for (unsigned long n = 0; n <= 7; ++n) {
          const auto oracle = oracle_row(n, m, r);
          for (unsigned long k = 0; k <= n; ++k) CHECK(t[n][k] * pow(BigInt(m), k) == oracle[k]);
        }
      }
    }
  }

  TEST_CASE("(q,r)-Dowling polynomials") {
    CHECK(qr_dowling_poly(2, 2, 1) == XQPoly{QPoly{1}, QPoly{4}, QPoly{0, 1}});
    CHECK(qr_dowling_poly(0, 3, 2) == XQPoly{QPoly{1}});
    for (unsigned long n = 0; n <= 8; ++n) CHECK(qr_dowling_poly(n, 1, 0) == q_bell_poly(n));
  }

  TEST_CASE("r-Whitney and r-Dowling numbers") {
    const auto w = r_whitney(2, 2, 1);
    CHECK(w[0] == std::vector<BigInt>{1});
    CHECK(w[1] == std::vector<BigInt>{1, 1});
    CHECK(w[2] == std::vector<BigInt>{1, 4, 1});
    CHECK(r_dowling(3, 2, 1)[2] == 6);
    CHECK(r_dowling(3, 2, 1)[3] == 24);
    CHECK(r_dowling(12, 1, 0) == bell(12));
  }

  TEST_CASE("W_{m,0,q}(k,i) = m^{k-i} S_q(k,i)") {
    for (unsigned long m = 1; m <= 3; ++m) CHECK(whitney_special_check(8, m).passed);
    CHECK(qr_whitney(2, 2, 0)[2][1] == QPoly{2});
    CHECK(qr_whitney(3, 3, 0)[3][3] == QPoly{0, 0, 0, 1});
  }

  TEST_CASE("q-expansion law [s]_q^n = sum_k S_q(n,k) [s]_{q,k}") {
    const auto t = q_stirling2(8);
    for (unsigned long s = 0; s <= 8; ++s) {
      for (unsigned long n = 0; n <= 8; ++n) {
        QPoly rhs;
        for (unsigned long k = 0; k <= n; ++k) rhs += t[n][k] * q_falling(s, k);
        CHECK(pow(q_int(s), n) == rhs);
      }
    }
  }

  TEST_CASE("q-triangle coefficients are nonnegative over the acceptance ranges") {
    for (const auto& row : q_stirling2(12)) {
      for (const auto& v : row) CHECK(nonnegative(v));
    }
    for (unsigned long m = 1; m <= 3; ++m) {
      for (unsigned long r = 0; r <= 2; ++r) {
        for (const auto& row : qr_whitney(10, m, r)) {
          for (const auto& v : row) CHECK(nonnegative(v));
        }
      }
    }
  }
}
