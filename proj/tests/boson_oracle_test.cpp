#include "qspivey/fock.hpp"
#include "qspivey/normal_form.hpp"
#include "qspivey/op_expr.hpp"
#include "qspivey/q_core.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace qspivey;

namespace {

const QPoly q = QPoly{0, 1};
const NormalForm a = NormalForm::annihilator();
const NormalForm ad = NormalForm::creator();
const NormalForm N = NormalForm::number();

NormalForm terms(std::initializer_list<std::tuple<unsigned long, unsigned long, QPoly>> list) {
  NormalForm out;
  for (const auto& [k, l, c] : list) out.accumulate({k, l}, c);
  return out;
}

}  // namespace

TEST_SUITE("boson_oracle") {
  TEST_CASE("normal ordering of small words") {
    CHECK(a * ad == terms({{1, 1, q}, {0, 0, QPoly{1}}}));
    CHECK(pow(N, 2) == terms({{1, 1, QPoly{1}}, {2, 2, q}}));
    CHECK(pow(N, 3) == terms({{1, 1, QPoly{1}}, {2, 2, QPoly{0, 2, 1}}, {3, 3, QPoly{0, 0, 0, 1}}}));
    CHECK(pow(N, 0) == NormalForm::identity());
  }

  TEST_CASE("products") {
    const NormalForm b = terms({{3, 1, QPoly{2, 1}}, {0, 2, QPoly{-1}}});
    CHECK(NormalForm::identity() * b == b);
    CHECK(b * NormalForm::identity() == b);
    CHECK(a * NormalForm::creator(2) == terms({{2, 1, QPoly{0, 0, 1}}, {1, 0, QPoly{1, 1}}}));
    CHECK((NormalForm{} * b).is_zero());
  }

  TEST_CASE("q-commutators") {
    CHECK(q_commutator(a, ad, 1) == NormalForm::identity());
    CHECK(q_commutator(a, NormalForm::creator(2), 2) == terms({{1, 0, QPoly{1, 1}}}));
    CHECK(q_commutator(a, NormalForm::creator(3), 3) == terms({{2, 0, QPoly{1, 1, 1}}}));
  }

  TEST_CASE("a a+ - q a+ a = 1") { CHECK(a * ad - q * (ad * a) == NormalForm::identity()); }

  TEST_CASE("lemma sweeps") {
    for (unsigned long k = 1; k <= 10; ++k) {
      const NormalForm adk = NormalForm::creator(k);
      CHECK(q_commutator(a, adk, k) == q_int(k) * NormalForm::creator(k - 1));
      CHECK(N * adk == adk * (NormalForm::scalar(q_int(k)) + q_power(k) * N));
    }
    for (unsigned long k = 1; k <= 8; ++k) {
      const NormalForm adk = NormalForm::creator(k);
      for (unsigned long m = 0; m <= 3; ++m) {
        for (unsigned long r = 0; r <= 3; ++r) {
          const NormalForm lhs = (QPoly{BigInt(m)} * N + NormalForm::scalar(QPoly{BigInt(r)})) * adk;
          const NormalForm rhs =
              adk * (NormalForm::scalar(q_int(k) * BigInt(m) + QPoly{BigInt(r)}) + q_power(k) * BigInt(m) * N);
          CHECK(lhs == rhs);
        }
      }
    }
  }

  TEST_CASE("coefficient lookup") {
    CHECK(pow(N, 2).coefficient(2, 2) == q);
    CHECK(NormalForm::identity().coefficient(5, 0).is_zero());
    CHECK(normal_order("(m*N+r)^1", {2, 1}).coefficient(1, 1) == QPoly{2});
  }

  TEST_CASE("cancelled terms are not stored") {
    const NormalForm z = a * ad - a * ad;
    CHECK(z.is_zero());
    CHECK(normal_order("ad*a - N").terms().empty());
  }

  TEST_CASE("Fock action in the rescaled basis") {
    const FockVector at2 = apply(N, FockVector::basis(2, 5));
    CHECK(at2.amplitudes().size() == 1);
    CHECK(at2.amplitude(2) == XQPoly::constant(QPoly{1, 1}));

    const FockVector at3 = apply(terms({{2, 2, QPoly{1}}}), FockVector::basis(3, 5));
    CHECK(at3.amplitudes().size() == 1);
    CHECK(at3.amplitude(3) == XQPoly::constant(QPoly{1, 2, 2, 1}));

    CHECK(apply(a, FockVector::basis(0, 3)).is_zero());
    CHECK(apply(a, FockVector::basis(3, 3)) == FockVector::basis(2, 3));
    CHECK(apply(ad, FockVector::basis(1, 3)).amplitude(2) == XQPoly::constant(q_int(2)));
  }

  TEST_CASE("cap overflow is an error, never a silent drop") {
    CHECK_THROWS_AS(apply(ad, FockVector::basis(3, 3)), CapOverflow);
    CHECK_THROWS_AS(apply(NormalForm::creator(2), coherent_truncated(4)), CapOverflow);
    // a term that annihilates the state cannot overflow
    CHECK(apply(terms({{5, 2, QPoly{1}}}), FockVector::basis(1, 2)).is_zero());
    CHECK_THROWS_AS(FockVector(2).accumulate(3, XQPoly{QPoly{1}}), std::out_of_range);
  }

  TEST_CASE("truncated coherent state") {
    const FockVector c3 = coherent_truncated(3);
    CHECK(c3.amplitudes().size() == 4);
    for (unsigned long s = 0; s <= 3; ++s) CHECK(c3.amplitude(s) == XQPoly::variable_power(s));
    const FockVector c0 = coherent_truncated(0);
    CHECK(c0 == FockVector::basis(0, 0));

    const unsigned long cap = 9;
    for (unsigned long k = 0; k <= cap; ++k) {
      const FockVector lowered = apply(NormalForm::annihilator(k), coherent_truncated(cap));
      CHECK(lowered.truncated(cap - k) == coherent_truncated(cap - k) * XQPoly::variable_power(k));
    }
  }

  TEST_CASE("(a+)^k a^k is diagonal with eigenvalue [s]_{q,k}") {
    for (unsigned long k = 0; k <= 8; ++k) {
      for (unsigned long s = 0; s <= 8; ++s) {
        const FockVector v = apply(NormalForm::term(k, k, QPoly{1}), FockVector::basis(s, 8));
        if (k > s) {
          CHECK(v.is_zero());
        } else {
          CHECK(v.amplitudes().size() == 1);
          CHECK(v.amplitude(s) == XQPoly::constant(q_falling(s, k)));
        }
      }
    }
  }

  TEST_CASE("symbolic product agrees with composed Fock action") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<unsigned long> occupancy(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
      const NormalForm A = testing::random_normal_form(rng);
      const NormalForm B = testing::random_normal_form(rng);
      const FockVector v = FockVector::basis(occupancy(rng), 12);
      CHECK(apply(A * B, v) == apply(A, apply(B, v)));
    }
  }

  TEST_CASE("normal ordering is associative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
      const NormalForm A = testing::random_normal_form(rng);
      const NormalForm B = testing::random_normal_form(rng);
      const NormalForm C = testing::random_normal_form(rng);
      CHECK((A * B) * C == A * (B * C));
      CHECK(A * (B + C) == A * B + A * C);
    }
  }

  TEST_CASE("[s+1]_q - q [s]_q = 1 matches the rescaled commutator") {
    for (unsigned long s = 0; s <= 50; ++s) {
      CHECK(q_int(s + 1) - q * q_int(s) == QPoly{1});
      // (a a+ - q a+ a) ||s>> = ([s+1]_q - q [s]_q) ||s>>
      if (s <= 10) CHECK(apply(a * ad - q * (ad * a), FockVector::basis(s, 12)) == FockVector::basis(s, 12));
    }
  }
}

TEST_SUITE("op_expr") {
  TEST_CASE("parses the grammar") {
    CHECK(normal_order("N^2") == pow(N, 2));
    CHECK(normal_order("(2*N+1)^3") == pow(QPoly{2} * N + NormalForm::identity(), 3));
    CHECK(normal_order("  a * ad ") == a * ad);
    CHECK(normal_order("ad*a") == N);
    CHECK(normal_order("3") == NormalForm::scalar(QPoly{3}));
    CHECK(normal_order("a - a").is_zero());
    CHECK(normal_order("1 - 2 - 3") == NormalForm::scalar(QPoly{-4}));
    CHECK(normal_order("ad^0") == NormalForm::identity());
    CHECK(normal_order("a*ad \xE2\x88\x92 ad*a") == normal_order("a*ad - ad*a"));
    CHECK(normal_order("(m*N+r)^2", {3, 2}) == pow(QPoly{3} * N + NormalForm::scalar(QPoly{2}), 2));
  }

  TEST_CASE("multiplication binds tighter than addition, power tighter than both") {
    CHECK(normal_order("1 + 2*N^2") == NormalForm::identity() + QPoly{2} * pow(N, 2));
  }

  TEST_CASE("witness (mN+r)^2 for several bindings") {
    for (unsigned long m = 1; m <= 3; ++m) {
      for (unsigned long r = 0; r <= 2; ++r) {
        const NormalForm expected = terms(
            {{0, 0, QPoly{BigInt(r * r)}}, {1, 1, QPoly{BigInt(m * m + 2 * m * r)}}, {2, 2, q * BigInt(m * m)}});
        CHECK(normal_order("(m*N+r)^2", {m, r}) == expected);
      }
    }
  }

  TEST_CASE("errors carry positions") {
    auto position_of = [](std::string_view text, OpBindings b = {}) -> long {
      try {
        parse_op_expr(text, b);
      } catch (const ParseError& e) {
        return static_cast<long>(e.position());
      }
      return -1;
    };
    CHECK(position_of("a*ad - q*ad*a") == 7);
    CHECK(position_of("a*ad \xE2\x88\x92 q*ad*a") == 9);
    CHECK(position_of("m*N") == 0);
    CHECK(position_of("N + r", {1, std::nullopt}) == 4);
    CHECK(position_of("(a + ad") == 7);
    CHECK(position_of("a + ") == 4);
    CHECK(position_of("N^m", {2, 0}) == 2);
    CHECK(position_of("N^") == 2);
    CHECK(position_of("a ad") == 2);
    CHECK(position_of("a % ad") == 2);
    CHECK(position_of("-a") == 0);
    CHECK(position_of("") == 0);
    CHECK(position_of("(m*N+r)^4", {2, 1}) == -1);
  }
}
