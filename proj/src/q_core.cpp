#include "qspivey/q_core.hpp"

#include <vector>

namespace qspivey {

QPoly q_power(unsigned long e) { return QPoly::variable_power(e); }

QPoly q_int(unsigned long s) { return QPoly(std::vector<BigInt>(s, BigInt(1))); }

QPoly q_falling(unsigned long s, unsigned long k) {
  if (k > s) return {};
  QPoly out = QPoly::constant(1);
  for (unsigned long i = 0; i < k; ++i) out *= q_int(s - i);
  return out;
}

QPoly q_factorial(unsigned long s) { return q_falling(s, s); }

BigInt falling_factorial(const BigInt& t, unsigned long k) {
  BigInt out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= t - i;
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace qspivey
