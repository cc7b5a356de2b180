#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cyclolab/symbols.hpp"

using namespace cyclolab;

namespace {

// Independent oracle: the set of nonzero squares mod p by exhaustion.
std::set<long> squares_mod(long p) {
  std::set<long> s;
  for (long x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

std::set<long> fourth_powers_mod(long p) {
  std::set<long> s;
  for (long x = 1; x < p; ++x) s.insert(x * x % p * x % p * x % p);
  return s;
}

} // namespace

TEST_CASE("legendre agrees with exhaustive square search") {
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 97L, 101L, 229L}) {
    auto sq = squares_mod(p);
    for (long a = 0; a < 3 * p; ++a) {
      int expect = a % p == 0 ? 0 : (sq.count(a % p) ? 1 : -1);
      CHECK(legendre(a, p) == expect);
    }
  }
}

TEST_CASE("legendre pinned values") {
  CHECK(legendre(2, 7) == 1);
  CHECK(legendre(7, 7) == 0);
  CHECK(legendre(13, 17) == 1);
  CHECK(legendre(-1, 5) == 1);
  CHECK(legendre(-1, 7) == -1);
}

TEST_CASE("legendre rejects bad moduli") {
  CHECK_THROWS_AS(legendre(3, 2), argument_error);
  CHECK_THROWS_AS(legendre(3, 15), argument_error);
  CHECK_THROWS_AS(legendre(3, -7), argument_error);
}

TEST_CASE("jacobi matches gmp and multiplicativity") {
  for (long n = 1; n < 300; n += 2) {
    for (long a = -50; a < 150; ++a) {
      Int A(a), N(n);
      CHECK(jacobi(A, N) == mpz_jacobi(A.get_mpz_t(), N.get_mpz_t()));
    }
  }
  // multiplicative in both arguments
  for (long n = 3; n < 60; n += 2)
    for (long a = 1; a < 20; ++a)
      for (long b = 1; b < 20; ++b) {
        CHECK(jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n));
        for (long m = 3; m < 30; m += 2)
          CHECK(jacobi(a, n * m) == jacobi(a, n) * jacobi(a, m));
      }
}

TEST_CASE("jacobi pinned values") {
  CHECK(jacobi(2, 15) == 1); // both factors see a nonresidue
  CHECK(jacobi(1, 9) == 1);
  CHECK(jacobi(5, 21) == 1);
  CHECK_THROWS_AS(jacobi(3, 10), argument_error);
  CHECK_THROWS_AS(jacobi(3, -5), argument_error);
}

TEST_CASE("kronecker matches gmp") {
  for (long n = -60; n < 60; ++n)
    for (long a = -60; a < 60; ++a) {
      Int A(a), N(n);
      CHECK(kronecker(A, N) == mpz_kronecker(A.get_mpz_t(), N.get_mpz_t()));
    }
}

TEST_CASE("quartic symbol agrees with exhaustive fourth-power search") {
  for (long p : {5L, 13L, 17L, 29L, 37L, 41L, 53L, 61L, 73L, 89L, 97L}) {
    auto sq = squares_mod(p);
    auto q4 = fourth_powers_mod(p);
    for (long q = 1; q < p; ++q) {
      if (!sq.count(q)) {
        CHECK_THROWS_AS(quartic_symbol(q, p), argument_error);
        continue;
      }
      CHECK(quartic_symbol(q, p) == (q4.count(q) ? 1 : -1));
    }
  }
}

TEST_CASE("quartic symbol pinned values") {
  CHECK(quartic_symbol(13, 17) == 1);
  CHECK(quartic_symbol(17, 13) == -1);
  CHECK(quartic_symbol(1, 5) == 1);
  CHECK_THROWS_AS(quartic_symbol(2, 5), argument_error);  // nonresidue
  CHECK_THROWS_AS(quartic_symbol(3, 7), argument_error);  // 7 = 3 (mod 4)
  CHECK_THROWS_AS(quartic_symbol(5, 5), argument_error);
}

TEST_CASE("octic symbol at 8") {
  CHECK(octic_symbol_at_8(17) == 1);
  CHECK(octic_symbol_at_8(41) == -1);
  CHECK(octic_symbol_at_8(73) == -1);
  CHECK(octic_symbol_at_8(89) == -1);
  CHECK(octic_symbol_at_8(97) == 1);
  CHECK_THROWS_AS(octic_symbol_at_8(13), argument_error);
  CHECK_THROWS_AS(octic_symbol_at_8(33), argument_error);
}

TEST_CASE("deterministic Miller-Rabin agrees with gmp") {
  for (long n = 0; n < 100000; ++n) {
    Int N(n);
    bool gmp = mpz_probab_prime_p(N.get_mpz_t(), 30) > 0;
    CHECK(is_prime(N) == gmp);
  }
  // strong pseudoprimes to small base sets
  CHECK(!is_prime(Int("3215031751")));
  CHECK(!is_prime(Int("3825123056546413051")));
  CHECK(is_prime(Int("3825123056546413057")));
  CHECK(is_prime(Int("170141183460469231731687303715884105727"))); // 2^127 - 1
}

TEST_CASE("factor reassembles and reports primes") {
  for (long n = 1; n < 3000; ++n) {
    Int prod(1);
    for (auto& [p, e] : factor(n)) {
      CHECK(is_prime(p));
      for (int i = 0; i < e; ++i) prod *= p;
    }
    CHECK(prod == n);
  }
  auto f = factor(Int("600851475143"));
  CHECK(f.back().first == 6857);
}

TEST_CASE("fundamental discriminant predicate") {
  CHECK(is_fundamental_discriminant(5));
  CHECK(is_fundamental_discriminant(-3));
  CHECK(is_fundamental_discriminant(-4));
  CHECK(is_fundamental_discriminant(8));
  CHECK(is_fundamental_discriminant(-8));
  CHECK(is_fundamental_discriminant(12));
  CHECK(is_fundamental_discriminant(221));
  CHECK(is_fundamental_discriminant(-23));
  CHECK(!is_fundamental_discriminant(1));
  CHECK(!is_fundamental_discriminant(0));
  CHECK(!is_fundamental_discriminant(-1));
  CHECK(!is_fundamental_discriminant(25));
  CHECK(!is_fundamental_discriminant(45)); // 9 * 5
  CHECK(!is_fundamental_discriminant(-12));
  CHECK(!is_fundamental_discriminant(16));
  CHECK(!is_fundamental_discriminant(3));
}
