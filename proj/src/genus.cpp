#include "cyclolab/genus.hpp"

#include "cyclolab/symbols.hpp"

namespace cyclolab {

std::vector<Int> prime_discriminant_factors(const Int& D) {
  if (!is_fundamental_discriminant(D))
    throw argument_error("prime discriminant splitting requires a fundamental discriminant");
  std::vector<Int> odd;
  Int S(1);
  for (auto& [p, e] : factor(abs(D))) {
    if (p == 2) continue;
    Int star = mod_floor(p, 4) == 1 ? p : -p;
    odd.push_back(star);
    S *= star;
  }
  std::vector<Int> out;
  if (S != D) {
    Int even = D / S;
    if (even != -4 && even != 8 && even != -8)
      throw std::logic_error("prime discriminant splitting: bad even factor");
    out.push_back(even);
  }
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

RedeiMatrix redei_matrix(const Int& D) {
  RedeiMatrix M;
  M.prime_discriminants = prime_discriminant_factors(D);
  size_t t = M.prime_discriminants.size();
  auto prime_below = [](const Int& d) { return mod_floor(d, 2) == 0 ? Int(2) : abs(d); };
  M.entries.assign(t, std::vector<int>(t, 0));
  for (size_t i = 0; i < t; ++i)
    for (size_t j = 0; j < t; ++j) {
      Int pj = prime_below(M.prime_discriminants[j]);
      Int top = i == j ? Int(D / M.prime_discriminants[j]) : M.prime_discriminants[i];
      M.entries[i][j] = kronecker(top, pj) == -1 ? 1 : 0;
    }
  return M;
}

int f2_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] % 2 == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] % 2 == 0) continue;
      for (size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + m[r][j]) % 2;
    }
    ++r;
    ++rank;
  }
  return rank;
}

int redei_four_rank(const Int& D) {
  RedeiMatrix M = redei_matrix(D);
  int t = static_cast<int>(M.prime_discriminants.size());
  int r = t - 1 - f2_rank(M.entries);
  if (r < 0) throw std::logic_error("four rank: matrix rank exceeded t - 1");
  return r;
}

bool c4_condition(const Int& p, const Int& q) {
  if (p == q) throw argument_error("distinct primes required");
  if (!is_prime(p) || !is_prime(q) || mod_floor(p, 4) != 1 || mod_floor(q, 4) != 1)
    throw argument_error("both arguments must be primes 1 (mod 4)");
  bool div4 = legendre(p, q) == 1;
  if (div4 && redei_four_rank(p * q) != 1)
    throw std::logic_error("4-rank disagrees with the residue criterion");
  return div4;
}

bool scholz_real(const Int& p, const Int& q) {
  if (!c4_condition(p, q)) throw argument_error("(p/q) = +1 required");
  return quartic_symbol(p, q) == quartic_symbol(q, p);
}

namespace {

// valuation and unit part at an odd prime
int split_at(const Int& p, Int n, Int& unit) {
  int v = 0;
  while (n % p == 0) { n /= p; ++v; }
  unit = n;
  return v;
}

int sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

} // namespace

int hilbert_symbol(const Int& a, const Int& b, const Int& v) {
  if (a == 0 || b == 0) throw argument_error("hilbert symbol needs nonzero entries");
  if (v == 0) return (a < 0 && b < 0) ? -1 : 1;
  if (v == 2) {
    Int u, w;
    int al = split_at(Int(2), a, u);
    int be = split_at(Int(2), b, w);
    // (u-1)/2 and (u^2-1)/8 taken mod 2
    auto eps = [](const Int& n) { return mod_floor((n - 1) / 2, 2) == 1; };
    auto omg = [](const Int& n) { return mod_floor((n * n - 1) / 8, 2) == 1; };
    long e = (eps(u) && eps(w) ? 1 : 0) + (al % 2 && omg(w) ? 1 : 0) + (be % 2 && omg(u) ? 1 : 0);
    return sign_pow(e);
  }
  if (v < 3 || !is_prime(v)) throw argument_error("hilbert symbol place must be 0, 2, or an odd prime");
  Int u, w;
  int al = split_at(v, a, u);
  int be = split_at(v, b, w);
  int s = 1;
  if (al % 2 && be % 2 && mod_floor(v, 4) == 3) s = -s;
  if (be % 2) s *= legendre(mod_floor(u, v), v);
  if (al % 2) s *= legendre(mod_floor(w, v), v);
  return s;
}

bool conic_is_solvable(const Int& p, const Int& q) {
  // x^2 - p y^2 + q z^2 = 0 is isotropic over Q_v iff (p, -q)_v = 1;
  // only 2, p, q and the real place can obstruct
  for (const Int& v : {Int(0), Int(2), p, q})
    if (hilbert_symbol(p, -q, v) != 1) return false;
  return true;
}

ConicSolution solve_conic(const Int& p, const Int& q, const Int& bound) {
  if (!is_prime(p) || mod_floor(p, 4) != 1)
    throw argument_error("conic: p must be a prime 1 (mod 4)");
  if (!is_prime(q) || q == 2 || p == q)
    throw argument_error("conic: q must be an odd prime distinct from p");
  if (bound < 1) throw argument_error("conic: bound must be positive");
  if (!conic_is_solvable(p, q))
    throw argument_error("conic: no rational solution (local obstruction)");
  for (Int z = 1; z <= bound; ++z) {
    Int qz = q * z * z;
    Int y = isqrt(qz / p);
    if (y < 1) y = 1;
    while (p * y * y < qz) ++y;
    for (; y <= bound; ++y) {
      Int t = p * y * y - qz;
      Int x;
      if (!is_square(t, x)) continue;
      ConicSolution sol{x, y, z};
      if (gcd(gcd(sol.x, sol.y), sol.z) != 1)
        throw std::logic_error("conic: first solution not primitive");
      return sol;
    }
  }
  throw resource_error("conic: no solution within the search bound");
}

std::pair<int, int> signature_of_alpha(const ConicSolution& sol, const Int& p) {
  if (p <= 0 || mpz_perfect_square_p(p.get_mpz_t()))
    throw argument_error("signature: p must be positive and not a square");
  Int norm = sol.x * sol.x - p * sol.y * sol.y;
  if (norm >= 0) throw argument_error("signature: solution norm must be negative");
  // x + s y sqrt(p) for s = +1, -1; norm < 0 means |y sqrt(p)| > |x|
  auto sgn = [&](int s) {
    Int ys = s * sol.y;
    if (sol.x >= 0 && ys >= 0) return +1;
    if (sol.x <= 0 && ys <= 0) return -1;
    return ys > 0 ? +1 : -1; // the sqrt(p) term dominates
  };
  auto out = std::make_pair(sgn(+1), sgn(-1));
  if (out.first == out.second) throw std::logic_error("signature: negative norm forces mixed signs");
  return out;
}

} // namespace cyclolab
