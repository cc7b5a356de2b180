#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclolab/errors.hpp"
#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Parity predictions for plus class numbers of cyclotomic-type fields.
 * A prediction is a divisibility claim whose premises (residue symbols,
 * conic solutions) are recomputed and attached; the conclusion itself
 * concerns fields this toolkit does not construct. */

enum class PredictionTarget {
  K_PLUS_2PART,                     // maximal real 2-extension inside Q(zeta_m)
  ALL_SUBFIELDS_CONTAINING_SQRT_PQ, // every subfield of Q(zeta_pq) over Q(sqrt(pq))
  H_PLUS_M,                         // plus class number of Q(zeta_m)
};

enum class PropositionTag { P1_i, P1_ii, P1_iii, P2, P3, REMARK_8 };

std::string target_name(PredictionTarget t);
std::string proposition_name(PropositionTag t);

struct ParityPrediction {
  Int modulus_m;
  PredictionTarget target;
  Int divisor; // 2 or 4
  std::vector<std::string> premises;
  PropositionTag proposition;
};

struct PredictionSet {
  std::vector<ParityPrediction> predictions;
  std::optional<std::string> negative_certificate; // present when oddness is proved
};

/* Two-prime predictions for the pair modulus pq. Each argument is a prime
 * 1 (mod 4) or the literal 8; quartic symbols at 8 are read off the 2-adic
 * expansion. Emits, as the symbols allow: 2 | h(K+); 2 | h(F) for every
 * subfield F containing sqrt(pq); 4 | h(K+). A certificate of odd h(K+) is
 * attached when (p/q) = -1. */
PredictionSet predict_pq(const Int& p, const Int& q);

/* 2 | h+(m) whenever m has three distinct prime factors 1 (mod 4); the
 * attached case is either a residue pair among the qualifying primes or the
 * all-nonresidue pattern handled by a quaternion extension. */
std::optional<ParityPrediction> predict_three_primes(const Int& m);

/* 2 | h+(pqq2) for p = 1, q = q2 = 3 (mod 4) with (p/q) = (p/q2) = +1;
 * premises carry the two conic solutions and the sign check on the product
 * of x + y sqrt(p) conjugate pairs. */
std::optional<ParityPrediction> predict_pqq(const Int& p, const Int& q, const Int& q2);

} // namespace cyclolab
