#include "qspivey/bigint.hpp"
#include "qspivey/poly.hpp"

#include <stdexcept>
#include <string>

namespace qspivey {

BigInt parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  bool ok = !digits.empty() && digits.find_first_not_of("0123456789") == std::string_view::npos;
  if (ok && digits.size() > 1 && digits.front() == '0') ok = false;
  if (ok && digits == "0" && digits.size() != text.size()) ok = false;  // "-0"
  if (!ok) throw std::invalid_argument("not a canonical decimal integer: '" + std::string(text) + "'");
  return BigInt(std::string(text), 10);
}

BigInt pow(const BigInt& v, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), v.get_mpz_t(), e);
  return out;
}

std::optional<QPoly> divide_exact(const QPoly& p, const BigInt& d) {
  if (is_zero(d)) return std::nullopt;
  std::vector<BigInt> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    BigInt quotient;
    mpz_divexact(quotient.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    out.push_back(std::move(quotient));
  }
  return QPoly(std::move(out));
}

}  // namespace qspivey
