#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "cyclolab/characters.hpp"
#include "cyclolab/errors.hpp"

using namespace cyclolab;

namespace {

long order_mod(const Int& a, const Int& f) {
  Int v = mod_floor(a, f);
  long k = 1;
  while (v != 1) {
    v = v * mod_floor(a, f) % f;
    ++k;
    REQUIRE(k <= 10000);
  }
  return k;
}

}  // namespace

TEST_CASE("unit group generators by prime power") {
  auto g23 = unit_group_generators(Int(23));
  REQUIRE(g23.size() == 1);
  CHECK(g23[0].value == 5);
  CHECK(g23[0].order == 22);

  auto g8 = unit_group_generators(Int(8));
  REQUIRE(g8.size() == 2);
  CHECK(g8[0].value == 7);
  CHECK(g8[0].order == 2);
  CHECK(g8[1].value == 5);
  CHECK(g8[1].order == 2);

  CHECK(unit_group_generators(Int(1)).empty());
  CHECK(unit_group_generators(Int(2)).empty());
  auto g4 = unit_group_generators(Int(4));
  REQUIRE(g4.size() == 1);
  CHECK(g4[0].value == 3);

  auto g16 = unit_group_generators(Int(16));
  REQUIRE(g16.size() == 2);
  CHECK(g16[0].value == 15);
  CHECK(g16[1].value == 5);
  CHECK(g16[1].order == 4);

  auto g24 = unit_group_generators(Int(24));
  REQUIRE(g24.size() == 3);
  CHECK(g24[0].value == 7);
  CHECK(g24[1].value == 13);
  CHECK(g24[2].value == 17);

  CHECK_THROWS_AS(unit_group_generators(Int(0)), argument_error);

  for (long f = 3; f <= 200; ++f) {
    Int orders = 1;
    for (const auto& g : unit_group_generators(Int(f))) {
      CHECK(gcd(g.value, Int(f)) == 1);
      CHECK(order_mod(g.value, Int(f)) == g.order);
      orders *= g.order;
    }
    CHECK(orders == euler_phi(Int(f)));
  }
}

TEST_CASE("character values multiply and see parity") {
  // the quadratic character mod 23 sends the generator 5 to -1
  DirichletCharacter quad23 = make_character(Int(23), {11});
  CHECK(quad23.order == 2);
  CHECK(!quad23.even);
  CHECK(char_value(quad23, Int(2)).rational_value() == 1);  // 5^2 = 2 (mod 23)
  CHECK(char_value(quad23, Int(5)).rational_value() == -1);
  CHECK(char_value(quad23, Int(1)).rational_value() == 1);
  CHECK(char_value(quad23, Int(22)).rational_value() == -1);
  CHECK(char_value(quad23, Int(23)).rational_value() == 0);
  CHECK(char_value(quad23, Int(46)).rational_value() == 0);
  CHECK(char_value(quad23, Int(-1)).rational_value() == -1);

  DirichletCharacter triv = make_character(Int(23), {0});
  CHECK(triv.order == 1);
  CHECK(triv.conductor == 1);
  CHECK(triv.even);

  CHECK_THROWS_AS(make_character(Int(23), {0, 0}), argument_error);

  // multiplicativity chi(a) chi(b) = chi(ab), across several moduli
  for (long f : {5L, 8L, 12L, 23L, 36L}) {
    for (const auto& chi : all_characters(Int(f))) {
      for (long a = 1; a < f; ++a)
        for (long b = a; b < f; ++b) {
          if (std::gcd(a, f) != 1 || std::gcd(b, f) != 1) continue;
          CHECK(char_value(chi, Int(a)) * char_value(chi, Int(b)) ==
                char_value(chi, Int(a * b)));
        }
      CHECK(chi.even == (char_value(chi, Int(-1)) == CycloRational(1)));
    }
  }
}

TEST_CASE("nontrivial characters sum to zero over the residues") {
  for (long f = 1; f <= 100; ++f) {
    long odd = 0, even = 0;
    for (const auto& chi : all_characters(Int(f))) {
      (chi.even ? even : odd)++;
      CycloRational sum(0);
      for (long a = 0; a < f; ++a) sum = sum + char_value(chi, Int(a));
      if (chi.order == 1)
        CHECK(sum.rational_value() == euler_phi(Int(f)));
      else
        CHECK(sum == CycloRational(0));
    }
    if (f > 2) CHECK(odd == even);  // evaluation at -1 splits the dual group evenly
  }
}

TEST_CASE("conductor is the least modulus carrying the character") {
  // mod 12 the two quadratic directions have conductors 4 and 3
  DirichletCharacter a = make_character(Int(12), {1, 0});
  DirichletCharacter b = make_character(Int(12), {0, 1});
  DirichletCharacter c = make_character(Int(12), {1, 1});
  CHECK(a.conductor == 4);
  CHECK(b.conductor == 3);
  CHECK(c.conductor == 12);

  DirichletCharacter prim = primitive_character(a);
  CHECK(prim.modulus == 4);
  CHECK(prim == make_character(Int(4), {1}));
  CHECK(primitive_character(c) == c);

  for (long f = 1; f <= 60; ++f) {
    for (const auto& chi : all_characters(Int(f))) {
      DirichletCharacter p = primitive_character(chi);
      CHECK(p.modulus == chi.conductor);
      CHECK(p.conductor == chi.conductor);
      CHECK(p.order == chi.order);
      CHECK(p.even == chi.even);
      for (long x = 1; x < f; ++x)
        if (std::gcd(x, f) == 1) CHECK(char_value(p, Int(x)) == char_value(chi, Int(x)));
    }
  }
}

TEST_CASE("subfield character groups of prime cyclotomic fields") {
  SubfieldSpec sextic = characters_of_subfield(Int(31), 6);
  REQUIRE(sextic.characters.size() == 6);
  std::multiset<long> orders;
  long odd = 0;
  for (const auto& chi : sextic.characters) {
    orders.insert(chi.order);
    if (!chi.even) ++odd;
    CHECK(6 % chi.order == 0);
  }
  CHECK(orders == std::multiset<long>{1, 2, 3, 3, 6, 6});
  CHECK(odd == 3);

  SubfieldSpec quartic = characters_of_subfield(Int(229), 4);
  REQUIRE(quartic.characters.size() == 4);
  long odd229 = 0;
  for (const auto& chi : quartic.characters)
    if (!chi.even) ++odd229;
  CHECK(odd229 == 2);

  SubfieldSpec full = characters_of_subfield(Int(23), 22);
  CHECK(full.characters.size() == 22);

  CHECK_THROWS_AS(characters_of_subfield(Int(31), 4), argument_error);
  CHECK_THROWS_AS(characters_of_subfield(Int(24), 2), argument_error);
  CHECK_THROWS_AS(characters_of_subfield(Int(12), 2), argument_error);
  CHECK_THROWS_AS(characters_of_subfield(Int(31), 0), argument_error);

  // closure under multiplication, and triviality on the index-d subgroup
  for (long n : {7L, 13L, 31L}) {
    long g = to_long(unit_group_generators(Int(n))[0].value);
    for (long d = 1; d < n; ++d) {
      if ((n - 1) % d != 0) continue;
      SubfieldSpec spec = characters_of_subfield(Int(n), d);
      CHECK(spec.characters.size() == size_t(d));
      std::set<std::vector<long>> exps;
      for (const auto& chi : spec.characters) {
        exps.insert(chi.exponents);
        CHECK(char_value(chi, pow_mod(Int(g), Int(d), Int(n))) == CycloRational(1));
      }
      for (const auto& x : spec.characters)
        for (const auto& y : spec.characters) {
          std::vector<long> prod{(x.exponents[0] + y.exponents[0]) % (n - 1)};
          CHECK(exps.count(prod) == 1);
        }
      long odd_count = 0;
      for (const auto& chi : spec.characters)
        if (!chi.even) ++odd_count;
      bool real_subfield = ((n - 1) / 2) % d == 0;  // -1 lands in the index-d subgroup
      CHECK(odd_count == (real_subfield ? 0 : d / 2));
    }
  }
}
