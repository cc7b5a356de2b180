#ifndef CYCLOLAB_GALMOD_FAST_HPP
#define CYCLOLAB_GALMOD_FAST_HPP

#include <string>
#include <vector>

#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Check selection for module_survey.  The involution battery covers both the
 * cohomology-commutes-with-splitting law and minus-part exactness. */
inline constexpr unsigned survey_inaba = 1u;
inline constexpr unsigned survey_p1am = 2u;  // ambiguous-class count + rank bound
inline constexpr unsigned survey_p3 = 4u;    // structure theorems and proof ingredients
inline constexpr unsigned survey_sf = 8u;    // idempotent split + minus exactness
inline constexpr unsigned survey_all = 15u;

struct SurveyShape {
  std::vector<long> e;
  long sigma_count = 0;
  long chain_steps = 0;    // summed kernel-chain lengths of 1 - sigma
  long fixed_sum = 0;      // summed fixed-point counts
  long configurations = 0; // runs of the coset-count and structure batteries
  long sf_pairs = 0;       // (module, involution) pairs through the split battery
  long minus_pairs = 0;    // norm-kernel-stable (configuration, involution) pairs
};

struct SurveyReport {
  long p = 3;
  long max_order = 0;
  unsigned checks = survey_all;
  std::vector<SurveyShape> shapes;
  long modules = 0;
  long configurations = 0;
  long sf_pairs = 0;
  long minus_pairs = 0;
  long failures = 0;
  std::vector<std::string> counterexamples;  // capped at 64 entries; failures has the full count
  bool pass = false;
};

/* Element-table survey over every module of order <= max_order (<= 128): all
 * elementary-divisor shapes, every action of order dividing p, no conjugacy
 * shortcut.  The filtration and configuration laws run on every module; the
 * involution battery runs on every module up to order 27 and on a fixed
 * deterministic sample above that.  Results are identical for any jobs value;
 * jobs > 1 partitions the candidate space across OpenMP lanes.  p must be an
 * odd prime.  The slower lattice engine in galmod.hpp covers the same ground
 * on small cases and is cross-checked against this one in the tests. */
SurveyReport module_survey(long p, long max_order, unsigned checks = survey_all,
                           long jobs = 1);

} // namespace cyclolab

#endif
