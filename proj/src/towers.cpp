#include "cyclolab/towers.hpp"

#include <cmath>

#include "cyclolab/bqf.hpp"
#include "cyclolab/errors.hpp"

namespace cyclolab {

RankBound jehne_bound(const Int& p, const Int& ramified_count, const Int& unit_rank_bound) {
  if (!is_prime(p)) throw argument_error("jehne_bound: p must be prime");
  if (ramified_count < 0 || unit_rank_bound < 0)
    throw argument_error("jehne_bound: counts must be non-negative");
  Int raw = ramified_count - unit_rank_bound - 1;
  if (raw < 0) raw = 0;
  return {p, ramified_count, unit_rank_bound, raw};
}

TowerVerdict golod_shafarevich(const Int& rank_r, const Int& unit_rank) {
  if (rank_r < 0 || unit_rank < 0)
    throw argument_error("golod_shafarevich: ranks must be non-negative");
  // rank_r >= 2 + 2 sqrt(unit_rank + 1), squared once the left side is >= 2
  bool infinite = rank_r >= 2 && (rank_r - 2) * (rank_r - 2) >= 4 * (unit_rank + 1);
  double threshold = 2.0 + 2.0 * std::sqrt(mpz_get_d(Int(unit_rank + 1).get_mpz_t()));
  return {rank_r, unit_rank, threshold, infinite};
}

C2Verdict corollary_c2_check(const Int& p) {
  if (!is_prime(p) || mod_floor(p, 8) != 5)
    throw argument_error("corollary_c2_check: p must be a prime = 5 (mod 8)");
  Int h = class_number(p);
  // prime discriminant: the narrow group has odd order, hence so does h
  if (h % 2 == 0) throw std::logic_error("corollary_c2_check: even class number for prime discriminant");
  TowerVerdict gs = golod_shafarevich(h - 1, 2 * h);
  bool infinite = h >= 15;
  if (gs.infinite != infinite)
    throw std::logic_error("corollary_c2_check: criterion evaluations disagree");
  return {p, h, gs, infinite};
}

PQVerdict corollary_pq_check(const Int& p, const Int& q) {
  if (p == q) throw argument_error("corollary_pq_check: p and q must be distinct");
  if (!is_prime(p) || !is_prime(q))
    throw argument_error("corollary_pq_check: p and q must be prime");
  if (mod_floor(p, 4) != 1 || mod_floor(q, 4) != 1)
    throw argument_error("corollary_pq_check: p and q must be = 1 (mod 4)");
  Int m = p * q;
  bool congruence_ok = mod_floor(m, 8) == 5;
  Int h = class_number(m);
  FundamentalUnit u = fundamental_unit(m);
  bool h_even = h % 2 == 0;
  if (u.norm == 1 && !h_even)
    throw std::logic_error("corollary_pq_check: positive unit norm with odd class number");
  bool infinite = u.norm == 1 && h >= 6;
  return {p, q, m, congruence_ok, h, u.norm, h_even, infinite};
}

namespace {

// order of a modulo the odd prime r, shrinking r - 1 one prime at a time
Int order_mod(const Int& a, const Int& r, const std::vector<std::pair<Int, int>>& r1_factors) {
  Int e = r - 1;
  for (const auto& [l, k] : r1_factors)
    for (int i = 0; i < k && e % l == 0 && pow_mod(a, e / l, r) == 1; ++i) e /= l;
  return e;
}

} // namespace

OzakiParameters ozaki_search(const Int& ell, const Int& n_target, const OzakiLimits& limits) {
  if (ell == 2 || !is_prime(ell)) throw argument_error("ozaki_search: ell must be an odd prime");
  if (n_target < 1) throw argument_error("ozaki_search: n_target must be positive");

  std::vector<long> pq_pool;
  for (long v : primes_below(to_long(limits.pq_max)))
    if (Int(v) % ell == 1) pq_pool.push_back(v);

  for (long rl : primes_below(to_long(limits.r_max))) {
    if (rl == 2) continue;
    Int r(rl);
    if (odd_part(r - 1) < n_target) continue;
    auto r1_factors = factor(r - 1);
    for (size_t i = 0; i < pq_pool.size(); ++i) {
      Int p(pq_pool[i]);
      if (p == r) continue;
      Int op = order_mod(p, r, r1_factors);
      // n divides odd_part((r-1)/lcm) <= odd_part((r-1)/op)
      if (odd_part((r - 1) / op) < n_target) continue;
      for (size_t j = i + 1; j < pq_pool.size(); ++j) {
        Int q(pq_pool[j]);
        if (q == r) continue;
        Int oq = order_mod(q, r, r1_factors);
        Int e = op * oq / gcd(op, oq);
        Int n = odd_part((r - 1) / e);
        if (n < n_target) continue;
        if (pow_mod(p, (r - 1) / n, r) != 1 || pow_mod(q, (r - 1) / n, r) != 1)
          throw std::logic_error("ozaki_search: divisor candidate fails its own congruence");
        return {ell, p, q, r, n, n - 1, jehne_bound(ell, 2 * n, n - 1)};
      }
    }
  }
  throw resource_error("ozaki_search: no triple within the search limits");
}

Int morishima_bound(const Int& n) {
  if (n < 1) throw argument_error("morishima_bound: n must be positive");
  return jehne_bound(Int(2), n, Int(0)).lower_bound;
}

} // namespace cyclolab
