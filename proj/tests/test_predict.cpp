#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cyclolab/bqf.hpp"
#include "cyclolab/errors.hpp"
#include "cyclolab/genus.hpp"
#include "cyclolab/predict.hpp"
#include "cyclolab/symbols.hpp"

using namespace cyclolab;

namespace {

bool has_premise(const ParityPrediction& p, const std::string& s) {
  for (const auto& t : p.premises)
    if (t == s) return true;
  return false;
}

std::vector<long> primes_1_mod_4_below(long bound) {
  std::vector<long> out;
  for (long p = 5; p < bound; ++p)
    if (is_prime(Int(p)) && p % 4 == 1) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("pair predictions follow the symbol ladder") {
  auto r1 = predict_pq(Int(13), Int(17));
  REQUIRE(r1.predictions.size() == 1);
  CHECK(!r1.negative_certificate.has_value());
  CHECK(r1.predictions[0].modulus_m == 221);
  CHECK(r1.predictions[0].target == PredictionTarget::K_PLUS_2PART);
  CHECK(r1.predictions[0].divisor == 2);
  CHECK(r1.predictions[0].proposition == PropositionTag::P1_i);
  CHECK(has_premise(r1.predictions[0], "(13/17) = +1"));

  // quartic symbols agree (both -1): the all-subfields conclusion joins in
  auto r2 = predict_pq(Int(5), Int(29));
  REQUIRE(r2.predictions.size() == 2);
  CHECK(r2.predictions[1].target == PredictionTarget::ALL_SUBFIELDS_CONTAINING_SQRT_PQ);
  CHECK(r2.predictions[1].divisor == 2);
  CHECK(r2.predictions[1].proposition == PropositionTag::P1_ii);
  CHECK(has_premise(r2.predictions[1], "(5/29)_4 = -1"));
  CHECK(has_premise(r2.predictions[1], "(29/5)_4 = -1"));

  // both quartic symbols +1: the divisor strengthens to 4
  auto r3 = predict_pq(Int(5), Int(101));
  REQUIRE(r3.predictions.size() == 3);
  CHECK(r3.predictions[2].target == PredictionTarget::K_PLUS_2PART);
  CHECK(r3.predictions[2].divisor == 4);
  CHECK(r3.predictions[2].proposition == PropositionTag::P1_iii);
  CHECK(narrow_class_number(Int(505)) % 8 == 0);

  auto r4 = predict_pq(Int(5), Int(13));
  CHECK(r4.predictions.empty());
  REQUIRE(r4.negative_certificate.has_value());
  CHECK(*r4.negative_certificate == "h(K+) is odd: (5/13) = -1");

  CHECK(predict_pq(Int(17), Int(13)).predictions.size() == 1);

  CHECK_THROWS_AS(predict_pq(Int(13), Int(13)), argument_error);
  CHECK_THROWS_AS(predict_pq(Int(7), Int(13)), argument_error);
  CHECK_THROWS_AS(predict_pq(Int(15), Int(17)), argument_error);
  CHECK_THROWS_AS(predict_pq(Int(8), Int(8)), argument_error);
}

TEST_CASE("pair predictions with the modulus-8 substitute") {
  auto r1 = predict_pq(Int(8), Int(17));
  REQUIRE(r1.predictions.size() == 1);  // (8/17)_4 = -1 while (17/8)_4 = +1
  CHECK(r1.predictions[0].proposition == PropositionTag::REMARK_8);
  CHECK(r1.predictions[0].modulus_m == 136);
  CHECK(has_premise(r1.predictions[0], "(8/17) = +1"));

  auto r2 = predict_pq(Int(8), Int(41));
  REQUIRE(r2.predictions.size() == 2);  // both quartic symbols -1
  CHECK(has_premise(r2.predictions[1], "(8/41)_4 = -1"));
  CHECK(has_premise(r2.predictions[1], "(41/8)_4 = -1"));

  auto r3 = predict_pq(Int(8), Int(113));
  REQUIRE(r3.predictions.size() == 3);  // both +1
  CHECK(r3.predictions[2].divisor == 4);

  auto r4 = predict_pq(Int(8), Int(5));
  CHECK(r4.predictions.empty());
  CHECK(r4.negative_certificate.has_value());

  CHECK(predict_pq(Int(17), Int(8)).predictions.size() == 1);

  for (long q : primes_1_mod_4_below(200)) {
    CAPTURE(q);
    bool emitted = !predict_pq(Int(8), Int(q)).predictions.empty();
    CHECK(emitted == (narrow_class_number(Int(8) * Int(q)) % 4 == 0));
  }
}

TEST_CASE("first prediction tracks 4-divisibility of the narrow class number") {
  for (long p : primes_1_mod_4_below(200))
    for (long q : primes_1_mod_4_below(200)) {
      if (p >= q) continue;
      CAPTURE(p);
      CAPTURE(q);
      auto r = predict_pq(Int(p), Int(q));
      bool emitted = !r.predictions.empty();
      CHECK(emitted == (narrow_class_number(Int(p) * Int(q)) % 4 == 0));
      CHECK(emitted != r.negative_certificate.has_value());
      if (emitted) {
        int v = legendre(Int(p), Int(q));
        CHECK(v == 1);
        CHECK(has_premise(r.predictions[0],
                          "(" + std::to_string(p) + "/" + std::to_string(q) + ") = +1"));
      }
    }
}

TEST_CASE("three qualifying primes force an even plus class number") {
  auto r1 = predict_three_primes(Int(1105));
  REQUIRE(r1.has_value());
  CHECK(r1->modulus_m == 1105);
  CHECK(r1->target == PredictionTarget::H_PLUS_M);
  CHECK(r1->divisor == 2);
  CHECK(r1->proposition == PropositionTag::P2);
  CHECK(has_premise(*r1, "qualifying primes: 5 13 17"));
  CHECK(has_premise(*r1, "case: residue pair"));
  CHECK(has_premise(*r1, "(13/17) = +1"));

  CHECK(!predict_three_primes(Int(12)).has_value());
  CHECK(!predict_three_primes(Int(4095)).has_value());  // 3^2 * 5 * 7 * 13: only two qualify
  CHECK_THROWS_AS(predict_three_primes(Int(2)), argument_error);

  auto r2 = predict_three_primes(Int(32045));  // 5 * 13 * 17 * 29
  REQUIRE(r2.has_value());
  CHECK(has_premise(*r2, "case: residue pair"));
  CHECK(has_premise(*r2, "(5/29) = +1"));  // first +1 pair in lexicographic order

  auto r3 = predict_three_primes(Int(2405));  // 5 * 13 * 37, pairwise nonresidues
  REQUIRE(r3.has_value());
  CHECK(has_premise(*r3, "case: quaternion"));
  CHECK(has_premise(*r3, "(5/13) = -1"));
  CHECK(has_premise(*r3, "(5/37) = -1"));
  CHECK(has_premise(*r3, "(13/37) = -1"));

  // enlarging the modulus keeps the prediction
  for (long k : {2L, 3L, 4L, 49L}) {
    auto big = predict_three_primes(Int(1105) * Int(k));
    REQUIRE(big.has_value());
    CHECK(has_premise(*big, "case: residue pair"));
  }
}

TEST_CASE("pqq predictions carry conic evidence") {
  auto r = predict_pqq(Int(13), Int(3), Int(23));
  REQUIRE(r.has_value());
  CHECK(r->modulus_m == 897);
  CHECK(r->target == PredictionTarget::H_PLUS_M);
  CHECK(r->divisor == 2);
  CHECK(r->proposition == PropositionTag::P3);
  CHECK(has_premise(*r, "(13/3) = +1"));
  CHECK(has_premise(*r, "(13/23) = +1"));
  CHECK(has_premise(*r, "x^2 - 13 y^2 = -3 z^2: (7, 2, 1), signature (+1, -1)"));
  CHECK(has_premise(*r, "x^2 - 13 y^2 = -23 z^2: (43, 12, 1), signature (+1, -1)"));
  CHECK(has_premise(*r, "conjugate product totally positive"));

  // premises re-verify against direct genus computation
  ConicSolution s3 = solve_conic(Int(13), Int(3));
  CHECK(s3.x * s3.x - Int(13) * s3.y * s3.y == -Int(3) * s3.z * s3.z);
  CHECK(signature_of_alpha(s3, Int(13)).first != signature_of_alpha(s3, Int(13)).second);

  CHECK(!predict_pqq(Int(5), Int(3), Int(7)).has_value());  // (5/3) = -1

  auto r2 = predict_pqq(Int(5), Int(11), Int(19));
  REQUIRE(r2.has_value());
  CHECK(r2->premises.size() == 5);

  CHECK_THROWS_AS(predict_pqq(Int(13), Int(3), Int(3)), argument_error);
  CHECK_THROWS_AS(predict_pqq(Int(13), Int(5), Int(7)), argument_error);
  CHECK_THROWS_AS(predict_pqq(Int(8), Int(3), Int(7)), argument_error);
  CHECK_THROWS_AS(predict_pqq(Int(7), Int(3), Int(11)), argument_error);
}
