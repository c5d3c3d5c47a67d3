#include "qspivey/sequences.hpp"

#include "qspivey/q_core.hpp"

#include <stdexcept>

namespace qspivey {

namespace {

void require_positive_m(unsigned long m) {
  if (m == 0) throw std::invalid_argument("m must be >= 1 for Whitney/Dowling numbers");
}

template <class R>
std::vector<R> row_sums(const Triangle<R>& t) {
  std::vector<R> out;
  out.reserve(t.size());
  for (const auto& row : t) {
    R sum{};
    for (const auto& v : row) sum += v;
    out.push_back(std::move(sum));
  }
  return out;
}

}  // namespace

TriangleBig stirling2(unsigned long n_max) {
  TriangleBig t(n_max + 1);
  t[0] = {BigInt(1)};
  for (unsigned long n = 1; n <= n_max; ++n) {
    t[n].assign(n + 1, BigInt(0));
    for (unsigned long k = 1; k <= n; ++k) {
      const BigInt stay = k < n ? BigInt(t[n - 1][k] * k) : BigInt(0);
      t[n][k] = t[n - 1][k - 1] + stay;
    }
  }
  return t;
}

std::vector<BigInt> bell(unsigned long n_max) { return row_sums(stirling2(n_max)); }

std::vector<BigInt> bell_by_recurrence(unsigned long n_max) {
  std::vector<BigInt> b{BigInt(1)};
  for (unsigned long n = 0; n < n_max; ++n) {
    BigInt next = 0;
    for (unsigned long k = 0; k <= n; ++k) next += binomial(n, k) * b[k];
    b.push_back(std::move(next));
  }
  return b;
}

TriangleQ q_stirling2(unsigned long n_max) {
  TriangleQ t(n_max + 1);
  t[0] = {QPoly::constant(1)};
  for (unsigned long n = 1; n <= n_max; ++n) {
    t[n].assign(n + 1, QPoly{});
    for (unsigned long k = 1; k <= n; ++k) {
      QPoly v = q_power(k - 1) * t[n - 1][k - 1];
      if (k < n) v += q_int(k) * t[n - 1][k];
      t[n][k] = std::move(v);
    }
  }
  return t;
}

XQPoly q_bell_poly(unsigned long n) { return row_polynomial(q_stirling2(n)[n]); }

TriangleQ qr_whitney(unsigned long n_max, unsigned long m, unsigned long r) {
  require_positive_m(m);
  TriangleQ t(n_max + 1);
  t[0] = {QPoly::constant(1)};
  for (unsigned long n = 1; n <= n_max; ++n) {
    t[n].assign(n + 1, QPoly{});
    for (unsigned long k = 0; k <= n; ++k) {
      QPoly v;
      if (k >= 1) v += q_power(k - 1) * t[n - 1][k - 1];
      if (k < n) v += (q_int(k) * BigInt(m) + QPoly::constant(r)) * t[n - 1][k];
      t[n][k] = std::move(v);
    }
  }
  return t;
}

XQPoly qr_dowling_poly(unsigned long n, unsigned long m, unsigned long r) {
  return row_polynomial(qr_whitney(n, m, r)[n]);
}

TriangleBig evaluate_at_one(const TriangleQ& t) {
  TriangleBig out;
  out.reserve(t.size());
  for (const auto& row : t) {
    auto& dst = out.emplace_back();
    dst.reserve(row.size());
    for (const auto& v : row) dst.push_back(evaluate(v, BigInt(1)));
  }
  return out;
}

TriangleBig r_whitney(unsigned long n_max, unsigned long m, unsigned long r) {
  return evaluate_at_one(qr_whitney(n_max, m, r));
}

std::vector<BigInt> r_dowling(unsigned long n_max, unsigned long m, unsigned long r) {
  return row_sums(r_whitney(n_max, m, r));
}

XQPoly row_polynomial(const std::vector<QPoly>& row) { return XQPoly(row); }

VerificationReport whitney_special_check(unsigned long k_max, unsigned long m) {
  const TriangleQ whitney = qr_whitney(k_max, m, 0);
  const TriangleQ stirling = q_stirling2(k_max);
  TriangleQ scaled(k_max + 1);
  for (unsigned long k = 0; k <= k_max; ++k) {
    for (unsigned long i = 0; i <= k; ++i) scaled[k].push_back(stirling[k][i] * pow(BigInt(m), k - i));
  }
  return make_report(Identity::whitney_special, Variant::none, {{"k", k_max}, {"m", m}}, whitney, scaled);
}

}  // namespace qspivey
