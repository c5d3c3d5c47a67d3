#include "qspivey/identities.hpp"

#include "qspivey/fock.hpp"
#include "qspivey/op_expr.hpp"
#include "qspivey/q_core.hpp"
#include "qspivey/sequences.hpp"

#include <stdexcept>
#include <string>

namespace qspivey {

namespace {

void require_variant(Variant v) {
  if (v != Variant::literal && v != Variant::corrected) {
    throw std::invalid_argument("this identity needs variant literal or corrected");
  }
}

// sum_k C(n,k) base_j^{n-k} q^{jk} lower_k, the k-sum shared by the q-identities.
XQPoly inner_sum(unsigned long n, unsigned long j, const QPoly& base, const std::vector<XQPoly>& lower) {
  XQPoly out;
  for (unsigned long k = 0; k <= n; ++k) {
    out += lower[k] * (pow(base, n - k) * q_power(j * k) * binomial(n, k));
  }
  return out;
}

// Shared tail of result1/result2: combine per-j inner sums with their weights
// and compare to the left-hand side, either at integer x or as polynomials in x.
VerificationReport finish_x_identity(Identity id, Variant variant, Json params, const XQPoly& lhs,
                                     const std::vector<QPoly>& weights, const std::vector<XQPoly>& inner,
                                     std::optional<unsigned long> x) {
  if (x) {
    params["x"] = *x;
    QPoly rhs;
    for (unsigned long j = 0; j < inner.size(); ++j) {
      const QPoly factor = variant == Variant::literal ? q_falling(*x, j) : QPoly::constant(pow(BigInt(*x), j));
      rhs += weights[j] * evaluate_x(inner[j], *x) * factor;
    }
    return make_report(id, variant, std::move(params), evaluate_x(lhs, *x), rhs);
  }
  if (variant == Variant::literal) {
    throw std::invalid_argument("the literal variant is only defined at integer x");
  }
  XQPoly rhs;
  for (unsigned long j = 0; j < inner.size(); ++j) rhs += inner[j] * weights[j] * XQPoly::variable_power(j);
  return make_report(id, variant, std::move(params), lhs, rhs);
}

}  // namespace

VerificationReport verify_stirling_def(unsigned long n) {
  const auto row = stirling2(n)[n];
  std::vector<BigInt> lhs;
  std::vector<BigInt> rhs;
  for (unsigned long t = 0; t <= n; ++t) {
    lhs.push_back(pow(BigInt(t), n));
    BigInt sum = 0;
    for (unsigned long k = 0; k <= n; ++k) sum += row[k] * falling_factorial(BigInt(t), k);
    rhs.push_back(std::move(sum));
  }
  return make_report(Identity::stirling_def, Variant::none, {{"n", n}}, lhs, rhs);
}

VerificationReport verify_bell_recurrence(unsigned long n) {
  return make_report(Identity::bell_rec, Variant::none, {{"n", n}}, bell_by_recurrence(n), bell(n));
}

VerificationReport verify_spivey(unsigned long n, unsigned long mshift) {
  const auto b = bell(n + mshift);
  const auto s = stirling2(mshift)[mshift];
  BigInt rhs = 0;
  for (unsigned long k = 0; k <= n; ++k) {
    for (unsigned long j = 0; j <= mshift; ++j) rhs += pow(BigInt(j), n - k) * s[j] * binomial(n, k) * b[k];
  }
  return make_report(Identity::spivey, Variant::none, {{"n", n}, {"mshift", mshift}}, b[n + mshift], rhs);
}

VerificationReport verify_result1(unsigned long n, unsigned long mshift, std::optional<unsigned long> x,
                                  Variant variant) {
  require_variant(variant);
  const TriangleQ s = q_stirling2(n + mshift);
  std::vector<XQPoly> bell_polys;
  for (unsigned long k = 0; k <= n; ++k) bell_polys.push_back(row_polynomial(s[k]));
  std::vector<XQPoly> inner;
  for (unsigned long j = 0; j <= mshift; ++j) inner.push_back(inner_sum(n, j, q_int(j), bell_polys));
  return finish_x_identity(Identity::result1, variant, {{"n", n}, {"mshift", mshift}}, row_polynomial(s[n + mshift]),
                           s[mshift], inner, x);
}

VerificationReport verify_katriel(unsigned long n, unsigned long l) {
  const TriangleQ s = q_stirling2(n + l);
  std::vector<XQPoly> bell_numbers;
  for (unsigned long k = 0; k <= n; ++k) bell_numbers.push_back(XQPoly::constant(evaluate_x(row_polynomial(s[k]), 1)));
  QPoly rhs;
  for (unsigned long j = 0; j <= l; ++j) rhs += s[l][j] * evaluate_x(inner_sum(n, j, q_int(j), bell_numbers), 0);
  return make_report(Identity::katriel, Variant::none, {{"n", n}, {"l", l}}, evaluate_x(row_polynomial(s[n + l]), 1),
                     rhs);
}

VerificationReport verify_result2(unsigned long n, unsigned long l, unsigned long m, unsigned long r,
                                  std::optional<unsigned long> x, Variant variant) {
  require_variant(variant);
  const TriangleQ w = qr_whitney(n + l, m, r);
  const TriangleQ w0 = qr_whitney(n, m, 0);
  std::vector<XQPoly> dowling0;
  for (unsigned long k = 0; k <= n; ++k) dowling0.push_back(row_polynomial(w0[k]));
  std::vector<QPoly> weights;
  std::vector<XQPoly> inner;
  for (unsigned long j = 0; j <= l; ++j) {
    const BigInt scale = variant == Variant::literal ? pow(BigInt(m), j) : BigInt(1);
    weights.push_back(w[l][j] * scale);
    inner.push_back(inner_sum(n, j, q_int(j) * BigInt(m) + QPoly::constant(r), dowling0));
  }
  return finish_x_identity(Identity::result2, variant, {{"n", n}, {"l", l}, {"m", m}, {"r", r}},
                           row_polynomial(w[n + l]), weights, inner, x);
}

VerificationReport verify_result3(unsigned long n, unsigned long l, unsigned long m, unsigned long r,
                                  Variant variant) {
  require_variant(variant);
  const TriangleBig w = r_whitney(l, m, r);
  const auto d0 = r_dowling(n, m, 0);
  const auto d = r_dowling(n + l, m, r);
  BigInt rhs = 0;
  for (unsigned long j = 0; j <= l; ++j) {
    const BigInt scale = variant == Variant::literal ? pow(BigInt(m), j) : BigInt(1);
    for (unsigned long k = 0; k <= n; ++k) {
      rhs += scale * w[l][j] * binomial(n, k) * pow(BigInt(m * j + r), n - k) * d0[k];
    }
  }
  return make_report(Identity::result3, variant, {{"n", n}, {"l", l}, {"m", m}, {"r", r}}, d[n + l], rhs);
}

VerificationReport verify_lemma(Lemma which, unsigned long k, unsigned long m, unsigned long r, unsigned long cap) {
  const NormalForm creators = NormalForm::creator(k);
  const std::string ad_k = "ad^" + std::to_string(k);
  switch (which) {
    case Lemma::lem1: {
      const NormalForm rhs = k == 0 ? NormalForm{} : q_int(k) * NormalForm::creator(k - 1);
      return make_report(Identity::lem1, Variant::none, {{"k", k}},
                         q_commutator(NormalForm::annihilator(), creators, k), rhs);
    }
    case Lemma::lem2: {
      if (cap < k) throw std::invalid_argument("lem2 needs cap >= k");
      const FockVector lhs = apply(NormalForm::annihilator(k), coherent_truncated(cap)).truncated(cap - k);
      const FockVector rhs = coherent_truncated(cap - k) * XQPoly::variable_power(k);
      return make_report(Identity::lem2, Variant::none, {{"k", k}, {"cap", cap}}, lhs, rhs);
    }
    case Lemma::lem3: {
      const NormalForm rhs = creators * (NormalForm::scalar(q_int(k)) + q_power(k) * NormalForm::number());
      return make_report(Identity::lem3, Variant::none, {{"k", k}}, normal_order("N*" + ad_k), rhs);
    }
    case Lemma::lem4: {
      const NormalForm rhs =
          creators * (NormalForm::scalar(q_int(k) * BigInt(m) + QPoly::constant(r)) +
                      q_power(k) * BigInt(m) * NormalForm::number());
      return make_report(Identity::lem4, Variant::none, {{"k", k}, {"m", m}, {"r", r}},
                         normal_order("(m*N+r)*" + ad_k, {m, r}), rhs);
    }
  }
  throw std::invalid_argument("unknown lemma");
}

VerificationReport check_row_against_oracle(TriangleKind kind, unsigned long n, unsigned long m, unsigned long r,
                                            const std::vector<QPoly>& row) {
  Json params{{"kind", kind == TriangleKind::q_stirling ? "q-stirling" : "qr-whitney"}, {"n", n}};
  NormalForm base = NormalForm::number();
  if (kind == TriangleKind::qr_whitney) {
    if (m == 0) throw std::invalid_argument("m must be >= 1 for Whitney numbers");
    params["m"] = m;
    params["r"] = r;
    base = QPoly::constant(m) * base + NormalForm::scalar(QPoly::constant(r));
  }
  const NormalForm oracle = pow(base, n);

  std::vector<QPoly> unscaled(n + 1);
  bool representable = true;
  for (const auto& [mono, c] : oracle.terms()) {
    if (mono.creators != mono.annihilators || mono.creators > n) representable = false;
  }
  for (unsigned long k = 0; k <= n && representable; ++k) {
    auto v = divide_exact(oracle.coefficient(k, k), pow(BigInt(m), k));
    if (!v) {
      representable = false;
      break;
    }
    unscaled[k] = std::move(*v);
  }
  if (!representable) return {Identity::triangle_oracle, Variant::none, std::move(params), Json(row), Json(oracle), false};
  return make_report(Identity::triangle_oracle, Variant::none, std::move(params), row, unscaled);
}

VerificationReport verify_triangle_vs_oracle(TriangleKind kind, unsigned long n, unsigned long m, unsigned long r) {
  if (kind == TriangleKind::q_stirling) return check_row_against_oracle(kind, n, 1, 0, q_stirling2(n)[n]);
  return check_row_against_oracle(kind, n, m, r, qr_whitney(n, m, r)[n]);
}

}  // namespace qspivey
