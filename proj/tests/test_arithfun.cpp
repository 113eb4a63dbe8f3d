#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arithplus/arithfun.hpp"
#include "arithplus/oracles.hpp"

using namespace arithplus;

TEST_CASE("profile of 20 matches hand values") {
  const ArithProfile p = profile(20);
  CHECK(p.sigma == 42);
  CHECK(p.phi == 8);
  CHECK(p.schemmel2 == 0);
  CHECK(p.sigma_plus == 56);
  CHECK(p.phi_plus == 15);
  CHECK(p.abundancy == Rational::make(21, 10));
  CHECK(p.omega == 2);
}

TEST_CASE("n = 1 is the empty product everywhere") {
  const ArithProfile p = profile(1);
  CHECK(p.sigma == 1);
  CHECK(p.phi == 1);
  CHECK(p.schemmel2 == 1);
  CHECK(p.sigma_plus == 1);
  CHECK(p.phi_plus == 1);
  CHECK(p.abundancy == Rational{1, 1});
  CHECK(p.omega == 0);
}

TEST_CASE("prime and prime-power values") {
  CHECK(sigma(factorize(97)) == 98);
  CHECK(phi(factorize(97)) == 96);
  CHECK(sigma_plus(factorize(97)) == 99);
  CHECK(phi_plus(factorize(97)) == 97);

  CHECK(sigma(factorize(8)) == 15);
  CHECK(phi(factorize(8)) == 4);
  CHECK(sigma_plus(factorize(8)) == 16);
  CHECK(phi_plus(factorize(8)) == 5);

  // Schemmel vanishes on even n and multiplies p^(k-1)(p-2) elsewhere.
  CHECK(schemmel2(factorize(16)) == 0);
  CHECK(schemmel2(factorize(15)) == 3);   // (3-2)(5-2)
  CHECK(schemmel2(factorize(27)) == 9);   // 3^2 * 1
  CHECK(schemmel2(factorize(35)) == 15);  // (5-2)(7-2)
}

TEST_CASE("phi-plus equals n exactly on squarefree n") {
  for (u64 n = 1; n <= 3000; ++n) {
    const Factorization f = factorize(n);
    const u64 pp = phi_plus(f);
    CHECK(pp <= n);
    CHECK((pp == n) == f.is_squarefree());
  }
}

TEST_CASE("abundancy index is exact") {
  CHECK(abundancy(factorize(6)) == Rational{2, 1});    // perfect
  CHECK(abundancy(factorize(28)) == Rational{2, 1});   // perfect
  CHECK(abundancy(factorize(12)) == Rational::make(7, 3));
  CHECK(abundancy(factorize(97)) == Rational::make(98, 97));
}

TEST_CASE("formula evaluators agree with the naive oracles") {
  for (u64 n = 1; n <= 2000; ++n) {
    const Factorization f = factorize(n);
    CHECK(sigma(f) == oracle_sigma(n));
    CHECK(phi(f) == oracle_phi(n));
    CHECK(schemmel2(f) == oracle_schemmel2(n));
    CHECK(sigma_plus(f) == oracle_sigma_plus(n));
    CHECK(phi_plus(f) == oracle_phi_plus(n));
  }
}

TEST_CASE("oracles enforce their cap") {
  CHECK_THROWS_AS(oracle_sigma(0), std::domain_error);
  CHECK_THROWS_AS(oracle_phi(kOracleCap + 1), std::out_of_range);
  CHECK(oracle_sigma(kOracleCap) > 0);
}

TEST_CASE("sigma-plus stays multiplicative across coprime parts") {
  // sigma_plus(p^k * q^j) = sigma_plus(p^k) * sigma_plus(q^j), checked on
  // a spread of coprime pairs.
  const u64 parts[] = {4, 9, 25, 27, 49, 8, 121};
  for (u64 a : parts) {
    for (u64 b : parts) {
      Factorization fa = factorize(a), fb = factorize(b);
      if (fa.factors[0].prime == fb.factors[0].prime) continue;
      CHECK(sigma_plus(factorize(a * b)) ==
            sigma_plus(fa) * sigma_plus(fb));
      CHECK(phi_plus(factorize(a * b)) == phi_plus(fa) * phi_plus(fb));
    }
  }
}

TEST_CASE("profile paths agree") {
  SieveTable sieve = build_spf_sieve(500);
  for (u64 n = 1; n <= 500; ++n) {
    CHECK(profile(n) == profile(n, sieve));
    CHECK(profile(n) == profile(factorize(n)));
  }
}
