#include "cyclolab/galmod.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

namespace cyclolab {

namespace {

std::vector<Int> power_moduli(long p, const std::vector<long>& e) {
  std::vector<Int> m;
  m.reserve(e.size());
  for (long x : e) {
    Int v = 1;
    for (long k = 0; k < x; ++k) v *= p;
    m.push_back(v);
  }
  return m;
}

void reduce_rows(IMat& A, const std::vector<Int>& mods) {
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) A(i, j) = mod_floor(A(i, j), mods[i]);
}

IMat reduced_mul(const IMat& A, const IMat& B, const std::vector<Int>& mods) {
  IMat C = mat_mul(A, B);
  reduce_rows(C, mods);
  return C;
}

IMat reduced_pow(IMat A, long k, const std::vector<Int>& mods) {
  IMat R = IMat::identity(A.rows);
  while (k > 0) {
    if (k & 1) R = reduced_mul(R, A, mods);
    k >>= 1;
    if (k > 0) A = reduced_mul(A, A, mods);
  }
  return R;
}

IMat diagonal(const std::vector<Int>& d) {
  IMat D(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) D(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return D;
}

bool is_zero(const IMat& A) {
  for (const Int& x : A.a)
    if (x != 0) return false;
  return true;
}

/* Canonical lower-triangular basis (positive diagonal, columns reduced) of the
 * full-rank lattice spanned by the columns of G. */
IMat hnf_basis(IMat G) {
  int r = G.rows, k = G.cols;
  if (r == 0) return IMat(0, 0);
  auto col_axpy = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < r; ++i) G(i, dst) -= q * G(i, src);
  };
  for (int i = 0; i < r; ++i) {
    for (;;) {
      int best = -1;
      for (int j = i; j < k; ++j)
        if (G(i, j) != 0 && (best < 0 || abs(G(i, j)) < abs(G(i, best)))) best = j;
      if (best < 0) throw std::logic_error("hnf_basis: lattice is not full rank");
      if (best != i)
        for (int t = 0; t < r; ++t) std::swap(G(t, i), G(t, best));
      bool clean = true;
      for (int j = i + 1; j < k; ++j) {
        if (G(i, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), G(i, j).get_mpz_t(), G(i, i).get_mpz_t());
        col_axpy(j, i, q);
        if (G(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (G(i, i) < 0)
      for (int t = 0; t < r; ++t) G(t, i) = -G(t, i);
  }
  for (int i = 1; i < r; ++i)
    for (int j = 0; j < i; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), G(i, j).get_mpz_t(), G(i, i).get_mpz_t());
      col_axpy(j, i, q);
    }
  IMat B(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) B(i, j) = G(i, j);
  return B;
}

std::optional<std::vector<Int>> solve_lower(const IMat& L, const std::vector<Int>& b) {
  int r = L.rows;
  std::vector<Int> x(r);
  for (int i = 0; i < r; ++i) {
    Int t = b[i];
    for (int j = 0; j < i; ++j) t -= L(i, j) * x[j];
    if (t % L(i, i) != 0) return std::nullopt;
    x[i] = t / L(i, i);
  }
  return x;
}

std::vector<Int> column_of(const IMat& A, int j) {
  std::vector<Int> v(A.rows);
  for (int i = 0; i < A.rows; ++i) v[i] = A(i, j);
  return v;
}

bool lattice_contains(const IMat& L, const IMat& gens) {
  for (int j = 0; j < gens.cols; ++j)
    if (!solve_lower(L, column_of(gens, j))) return false;
  return true;
}

/* Basis of {x in Z^n : T x = 0 (mod targets)} with T of shape c x n. */
IMat kernel_lattice(const IMat& T, const std::vector<Int>& targets) {
  int c = T.rows, n = T.cols;
  if (n == 0) return IMat(0, 0);
  if (c == 0) return IMat::identity(n);
  IMat D(c, c);
  for (int i = 0; i < c; ++i) D(i, i) = -targets[i];
  IMat K = integer_kernel(mat_hjoin(T, D));
  IMat P(n, K.cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < K.cols; ++j) P(i, j) = K(i, j);
  return hnf_basis(P);
}

AbelianStructure structure_from_divisors(std::vector<Int> divs) {
  AbelianStructure s;
  for (const Int& d : divs) {
    if (d == 0) throw std::logic_error("structure_from_divisors: infinite factor");
    s.order *= d;
  }
  std::sort(divs.begin(), divs.end(), [](const Int& a, const Int& b) { return a > b; });
  for (const Int& d : divs)
    if (d > 1) s.divisors.push_back(d);
  return s;
}

/* Structure of B_num / <den_gens>; B_num lower triangular, denominator of
 * finite index inside it. */
AbelianStructure quotient_structure(const IMat& Bnum, const IMat& den_gens) {
  int r = Bnum.rows;
  if (r == 0) return {};
  if (den_gens.cols < r) throw std::logic_error("quotient_structure: denominator rank too small");
  IMat X(r, den_gens.cols);
  for (int j = 0; j < den_gens.cols; ++j) {
    auto x = solve_lower(Bnum, column_of(den_gens, j));
    if (!x) throw std::logic_error("quotient_structure: denominator escapes the numerator lattice");
    for (int i = 0; i < r; ++i) X(i, j) = (*x)[i];
  }
  return structure_from_divisors(smith_divisors(X));
}

/* Adapted generators for B_num / <den_gens> plus induced matrices for ambient
 * actions stabilizing both lattices.  coord_rows recovers coordinates of an
 * ambient vector when B_num is the identity. */
struct Presentation {
  std::vector<Int> divisors;
  IMat gens;
  IMat coord_rows;
  std::vector<IMat> actions;
};

Presentation present_subquotient(const IMat& Bnum, const IMat& den_gens,
                                 const std::vector<IMat>& actions) {
  int r = Bnum.rows;
  Presentation out;
  out.gens = IMat(r, 0);
  out.coord_rows = IMat(0, r);
  if (r == 0) {
    out.actions.assign(actions.size(), IMat(0, 0));
    return out;
  }
  if (den_gens.cols < r) throw std::logic_error("present_subquotient: denominator rank too small");
  IMat X(r, den_gens.cols);
  for (int j = 0; j < den_gens.cols; ++j) {
    auto x = solve_lower(Bnum, column_of(den_gens, j));
    if (!x) throw std::logic_error("present_subquotient: denominator escapes the numerator lattice");
    for (int i = 0; i < r; ++i) X(i, j) = (*x)[i];
  }
  Smith sm = smith(X);
  IMat Uinv(r, r);
  for (int j = 0; j < r; ++j) {
    std::vector<Int> e(r, Int(0));
    e[j] = 1;
    auto x = solve_integer(sm.U, e);
    if (!x) throw std::logic_error("present_subquotient: transform is not unimodular");
    for (int i = 0; i < r; ++i) Uinv(i, j) = (*x)[i];
  }
  IMat Bp = mat_mul(Bnum, Uinv);
  std::vector<int> kept;
  for (int i = r - 1; i >= 0; --i) {
    if (sm.D(i, i) == 0) throw std::logic_error("present_subquotient: infinite quotient");
    if (sm.D(i, i) > 1) kept.push_back(i);
  }
  int m = static_cast<int>(kept.size());
  out.divisors.resize(m);
  out.gens = IMat(r, m);
  out.coord_rows = IMat(m, r);
  for (int t = 0; t < m; ++t) {
    out.divisors[t] = sm.D(kept[t], kept[t]);
    for (int i = 0; i < r; ++i) {
      out.gens(i, t) = Bp(i, kept[t]);
      out.coord_rows(t, i) = sm.U(kept[t], i);
    }
  }
  for (const IMat& A : actions) {
    IMat ind(m, m);
    for (int t = 0; t < m; ++t) {
      auto x = solve_integer(Bp, mat_apply(A, column_of(out.gens, t)));
      if (!x) throw std::logic_error("present_subquotient: action escapes the lattice");
      for (int u = 0; u < m; ++u) ind(u, t) = mod_floor((*x)[kept[u]], out.divisors[u]);
    }
    out.actions.push_back(std::move(ind));
  }
  return out;
}

long p_exponent(Int d, long p) {
  long v = 0;
  while (d % p == 0) {
    d /= p;
    ++v;
  }
  if (d != 1) throw std::logic_error("p_exponent: divisor is not a p-power");
  return v;
}

GModule module_from(long p, const Presentation& pres, size_t action_index) {
  std::vector<long> exps;
  for (const Int& d : pres.divisors) exps.push_back(p_exponent(d, p));
  return make_gmodule(p, std::move(exps), pres.actions[action_index]);
}

/* Reduces a commuting matrix against M's grading and enforces J^order = id. */
IMat validated_commuting_action(const GModule& M, IMat A, long order, const char* who) {
  int r = M.rank();
  if (A.rows != r || A.cols != r) throw argument_error(std::string(who) + ": shape mismatch");
  if (r == 0) return A;
  auto mods = M.moduli();
  reduce_rows(A, mods);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (M.e[i] > M.e[j]) {
        Int gap = 1;
        for (long k = M.e[j]; k < M.e[i]; ++k) gap *= M.p;
        if (A(i, j) % gap != 0)
          throw argument_error(std::string(who) + ": map not well defined on the graded sum");
      }
  if (reduced_pow(A, order, mods) != IMat::identity(r))
    throw argument_error(std::string(who) + ": order does not divide the declared one");
  if (reduced_mul(A, M.sigma, mods) != reduced_mul(M.sigma, A, mods))
    throw argument_error(std::string(who) + ": does not commute with sigma");
  return A;
}

Int int_pow(long b, long k) {
  Int v = 1;
  for (long i = 0; i < k; ++i) v *= b;
  return v;
}

} // namespace

Int GModule::modulus(long i) const {
  return int_pow(p, e[static_cast<size_t>(i)]);
}

std::vector<Int> GModule::moduli() const { return power_moduli(p, e); }

Int GModule::order() const {
  long t = 0;
  for (long x : e) t += x;
  return int_pow(p, t);
}

GModule make_gmodule(long p, std::vector<long> e, IMat sigma) {
  if (p < 2 || !is_prime(Int(p))) throw argument_error("make_gmodule: group order must be prime");
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1) throw argument_error("make_gmodule: exponents must be positive");
    if (i > 0 && e[i] > e[i - 1]) throw argument_error("make_gmodule: exponents must descend");
  }
  int r = static_cast<int>(e.size());
  if (sigma.rows != r || sigma.cols != r) throw argument_error("make_gmodule: action shape mismatch");
  GModule M;
  M.p = p;
  M.e = std::move(e);
  M.sigma = std::move(sigma);
  if (r == 0) return M;
  auto mods = M.moduli();
  reduce_rows(M.sigma, mods);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (M.e[i] > M.e[j]) {
        Int gap = 1;
        for (long k = M.e[j]; k < M.e[i]; ++k) gap *= p;
        if (M.sigma(i, j) % gap != 0)
          throw argument_error("make_gmodule: action not well defined on the graded sum");
      }
  // invertible mod p suffices: surjective on M/pM lifts to all of M
  if (mat_det(M.sigma) % p == 0) throw argument_error("make_gmodule: action is not invertible");
  if (reduced_pow(M.sigma, p, mods) != IMat::identity(r))
    throw argument_error("make_gmodule: action order does not divide p");
  return M;
}

IMat nu_matrix(const GModule& M) {
  int r = static_cast<int>(M.rank());
  auto mods = M.moduli();
  IMat R(r, r), P = IMat::identity(r);
  for (long k = 0; k < M.p; ++k) {
    R = mat_add(R, P);
    P = reduced_mul(P, M.sigma, mods);
  }
  reduce_rows(R, mods);
  return R;
}

IMat one_minus_sigma(const GModule& M) {
  IMat R = mat_sub(IMat::identity(static_cast<int>(M.rank())), M.sigma);
  auto mods = M.moduli();
  reduce_rows(R, mods);
  return R;
}

AbelianStructure image_structure(const GModule& M, const IMat& T) {
  if (M.rank() == 0) return {};
  IMat D = diagonal(M.moduli());
  return quotient_structure(hnf_basis(mat_hjoin(T, D)), D);
}

AbelianStructure kernel_structure(const GModule& M, const IMat& T) {
  if (M.rank() == 0) return {};
  auto mods = M.moduli();
  return quotient_structure(kernel_lattice(T, mods), diagonal(mods));
}

AbelianStructure cokernel_structure(const GModule& M, const IMat& T) {
  if (M.rank() == 0) return {};
  return structure_from_divisors(smith_divisors(mat_hjoin(T, diagonal(M.moduli()))));
}

Filtration filtration(const GModule& M) {
  Filtration F;
  F.sigma_kernel_orders.push_back(1);
  F.torsion_orders.push_back(1);
  if (M.rank() == 0) return F;
  Int total = M.order();
  auto mods = M.moduli();
  IMat L = one_minus_sigma(M), P = L;
  long cap = 2;
  for (long x : M.e) cap += x * M.p;
  while (F.sigma_kernel_orders.back() != total) {
    F.sigma_kernel_orders.push_back(kernel_structure(M, P).order);
    P = reduced_mul(P, L, mods);
    if (static_cast<long>(F.sigma_kernel_orders.size()) > cap)
      throw std::logic_error("filtration: kernel chain fails to saturate");
  }
  for (long k = 1; F.torsion_orders.back() != total; ++k) {
    IMat pk = mat_scale(int_pow(M.p, k), IMat::identity(static_cast<int>(M.rank())));
    F.torsion_orders.push_back(kernel_structure(M, pk).order);
  }
  return F;
}

InabaReport check_inaba(const GModule& M) {
  InabaReport rep;
  rep.orders.push_back(1);
  Int total = M.order();
  if (M.rank() == 0) {
    rep.norm_kills = true;
    rep.pass = true;
    return rep;
  }
  auto mods = M.moduli();
  IMat L = one_minus_sigma(M), P = L;
  long cap = 2;
  for (long x : M.e) cap += x * M.p;
  for (long k = 1;; ++k) {
    Int ord = kernel_structure(M, P).order;
    if (ord < rep.orders.back()) throw std::logic_error("check_inaba: kernels are not nested");
    if (ord == rep.orders.back()) {
      if (ord != total)
        rep.failure = "kernel chain stalls at " + ord.get_str() + " of " + total.get_str();
      break;
    }
    rep.orders.push_back(ord);
    if (ord == total) break;
    if (k > cap) throw std::logic_error("check_inaba: chain fails to saturate");
    P = reduced_mul(P, L, mods);
  }
  if (rep.failure.empty()) {
    for (size_t k = 1; k < rep.orders.size(); ++k) {
      if (rep.orders[k] % rep.orders[k - 1] != 0)
        throw std::logic_error("check_inaba: index is not integral");
      rep.indices.push_back(rep.orders[k] / rep.orders[k - 1]);
    }
    for (size_t k = 1; k < rep.indices.size() && rep.failure.empty(); ++k)
      if (rep.indices[k] > rep.indices[k - 1])
        rep.failure = "index grows at step " + std::to_string(k + 1);
  }
  if (rep.failure.empty()) {
    rep.norm_kills = image_structure(M, nu_matrix(M)).order == 1;
    if (rep.norm_kills) {
      // torsion ladder: the p^n-torsion is exactly the n(p-1)-th kernel
      for (long n = 1; n <= M.e[0] && rep.failure.empty(); ++n) {
        IMat pn = mat_scale(int_pow(M.p, n), IMat::identity(static_cast<int>(M.rank())));
        Int t_ord = kernel_structure(M, pn).order;
        size_t idx = static_cast<size_t>(n) * (M.p - 1);
        Int chain_ord = idx < rep.orders.size() ? rep.orders[idx] : total;
        if (t_ord != chain_ord) {
          rep.failure = "torsion ladder mismatch at level " + std::to_string(n);
          break;
        }
        IMat Lk = reduced_pow(L, n * (M.p - 1), mods);
        for (int i = 0; i < M.rank() && rep.failure.empty(); ++i) {
          Int g = int_pow(M.p, std::max(M.e[i] - n, 0L));
          for (int t = 0; t < M.rank(); ++t)
            if (Lk(t, i) * g % mods[t] != 0) {
              rep.failure = "torsion escapes the kernel chain at level " + std::to_string(n);
              break;
            }
        }
      }
      if (rep.failure.empty()) {
        IMat pI = mat_scale(Int(M.p), IMat::identity(static_cast<int>(M.rank())));
        Int sub = image_structure(M, pI).order;
        Int index = total / sub;
        Int m1 = rep.orders[1];
        Int upper = 1;
        for (long t = 0; t < M.p - 1; ++t) upper *= m1;
        if (!(m1 <= index && index <= upper))
          rep.failure = "power index escapes the sandwich";
        else if (sub > 1 && index < int_pow(M.p, M.p - 2) * m1)
          rep.failure = "power index below the p^{p-2} floor";
      }
    }
  }
  rep.pass = rep.failure.empty();
  return rep;
}

GroupRingElement group_ring(long p, std::vector<Int> coefficients) {
  if (p < 3 || !is_prime(Int(p))) throw argument_error("group_ring: order must be an odd prime");
  if (static_cast<long>(coefficients.size()) != p)
    throw argument_error("group_ring: need exactly p coefficients");
  return {p, std::move(coefficients)};
}

static void require_same_ring(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.p != b.p) throw argument_error("group ring arithmetic: mixed orders");
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_ring(a, b);
  GroupRingElement c = a;
  for (long i = 0; i < a.p; ++i) c.coefficients[i] += b.coefficients[i];
  return c;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_ring(a, b);
  GroupRingElement c = a;
  for (long i = 0; i < a.p; ++i) c.coefficients[i] -= b.coefficients[i];
  return c;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_ring(a, b);
  GroupRingElement c{a.p, std::vector<Int>(a.p, Int(0))};
  for (long i = 0; i < a.p; ++i) {
    if (a.coefficients[i] == 0) continue;
    for (long j = 0; j < a.p; ++j)
      c.coefficients[(i + j) % a.p] += a.coefficients[i] * b.coefficients[j];
  }
  return c;
}

NormIdentity solve_e1_e2(long p, long bound) {
  if (p < 3 || !is_prime(Int(p))) throw argument_error("solve_e1_e2: p must be an odd prime");
  if (p > bound) throw resource_error("solve_e1_e2: p exceeds the configured bound");
  GroupRingElement nu{p, std::vector<Int>(p, Int(1))};
  GroupRingElement om{p, std::vector<Int>(p, Int(0))};
  om.coefficients[0] = 1;
  om.coefficients[1] = -1;
  GroupRingElement a{p, std::vector<Int>(p, Int(0))};
  a.coefficients[0] = 1;
  for (long k = 0; k < p - 1; ++k) a = a * om;
  NormIdentity out;
  out.h = GroupRingElement{p, std::vector<Int>(p, Int(0))};
  for (long i = 0; i < p; ++i) {
    Int t = nu.coefficients[i] - a.coefficients[i];
    if (t % p != 0) throw std::logic_error("solve_e1_e2: norm defect is not divisible by p");
    out.h.coefficients[i] = t / p;
  }
  // convolution system: column j of the left block is sigma^j * (1-sigma)^{p-1}
  IMat A(static_cast<int>(p), static_cast<int>(2 * p));
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < p; ++i) {
      A(i, j) = a.coefficients[((i - j) % p + p) % p];
      A(i, static_cast<int>(p) + j) = 1;
    }
  std::vector<Int> b(p, Int(0));
  b[0] = p;
  auto z = solve_integer(A, b);
  if (!z) throw std::logic_error("solve_e1_e2: no integral solution");
  out.f = GroupRingElement{p, std::vector<Int>(z->begin(), z->begin() + p)};
  out.g = GroupRingElement{p, std::vector<Int>(z->begin() + p, z->end())};
  GroupRingElement pc{p, std::vector<Int>(p, Int(0))};
  pc.coefficients[0] = p;
  if (!(a * out.f + nu * out.g == pc)) throw std::logic_error("solve_e1_e2: expansion check failed");
  GroupRingElement ph = out.h;
  for (long i = 0; i < p; ++i) ph.coefficients[i] *= p;
  if (!(a + ph == nu)) throw std::logic_error("solve_e1_e2: norm identity check failed");
  return out;
}

AbelianStructure tate_cohomology(const GModule& M, int q) {
  if (q != 0 && q != -1) throw argument_error("tate_cohomology: only degrees 0 and -1");
  if (M.rank() == 0) return {};
  auto mods = M.moduli();
  IMat D = diagonal(mods);
  IMat num = q == 0 ? one_minus_sigma(M) : nu_matrix(M);
  IMat den = q == 0 ? nu_matrix(M) : one_minus_sigma(M);
  return quotient_structure(kernel_lattice(num, mods), mat_hjoin(den, D));
}

namespace {

// dense polynomials over F_p, ascending coefficients, no leading zeros
using FpPoly = std::vector<long>;

FpPoly fp_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

FpPoly fp_mul(const FpPoly& f, const FpPoly& g, long p) {
  if (f.empty() || g.empty()) return {};
  FpPoly h(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) h[i + j] = (h[i + j] + f[i] * g[j]) % p;
  return fp_trim(h);
}

// divisor must be monic
std::pair<FpPoly, FpPoly> fp_divmod(FpPoly f, const FpPoly& g, long p) {
  FpPoly q(f.size() > g.size() ? f.size() - g.size() + 1 : 1, 0);
  while (f.size() >= g.size() && !f.empty()) {
    long c = f.back() % p;
    size_t shift = f.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] = ((f[shift + i] - c * g[i]) % p + p) % p;
    f = fp_trim(f);
  }
  return {fp_trim(q), f};
}

// for coprime f, g returns (u, v) with u f + v g = 1
std::pair<FpPoly, FpPoly> fp_bezout(FpPoly f, FpPoly g, long p) {
  FpPoly r0 = fp_trim(f), r1 = fp_trim(g);
  FpPoly u0{1}, u1{}, v0{}, v1{1};
  while (!r1.empty()) {
    long lead = r1.back();
    long inv = to_long(inv_mod(Int(lead), Int(p)));
    FpPoly r1m = r1;
    for (long& c : r1m) c = c * inv % p;
    auto [q, rem] = fp_divmod(r0, r1m, p);
    for (long& c : q) c = c * inv % p;
    auto comb = [&](const FpPoly& a, const FpPoly& b) {
      FpPoly out = a;
      FpPoly qb = fp_mul(q, b, p);
      if (out.size() < qb.size()) out.resize(qb.size(), 0);
      for (size_t i = 0; i < qb.size(); ++i) out[i] = ((out[i] - qb[i]) % p + p) % p;
      return fp_trim(out);
    };
    FpPoly r2 = comb(r0, r1), u2 = comb(u0, u1), v2 = comb(v0, v1);
    r0 = r1;
    u0 = u1;
    v0 = v1;
    r1 = r2;
    u1 = u2;
    v1 = v2;
  }
  if (r0.size() != 1) throw std::logic_error("fp_bezout: inputs are not coprime");
  long inv = to_long(inv_mod(Int(r0[0]), Int(p)));
  for (long& c : u0) c = c * inv % p;
  for (long& c : v0) c = c * inv % p;
  return {u0, v0};
}

/* Distinct irreducible factors of x^q - 1 over F_p (squarefree when p does not
 * divide q), by ascending-degree trial division. */
std::vector<FpPoly> factor_unity(long q, long p) {
  FpPoly rem(q + 1, 0);
  rem[0] = p - 1;
  rem[q] = 1;
  std::vector<FpPoly> factors;
  long scanned = 0;
  for (long d = 1; 2 * d <= static_cast<long>(rem.size()) - 1; ++d) {
    long count = 1;
    for (long i = 0; i < d; ++i) {
      count *= p;
      if (count > 2000000) throw resource_error("idempotent_split: factor scan too large");
    }
    scanned += count;
    if (scanned > 2000000) throw resource_error("idempotent_split: factor scan too large");
    for (long code = 0; code < count; ++code) {
      FpPoly cand(d + 1, 0);
      long c = code;
      for (long i = 0; i < d; ++i) {
        cand[i] = c % p;
        c /= p;
      }
      cand[d] = 1;
      auto [quot, r] = fp_divmod(rem, cand, p);
      if (r.empty()) {
        factors.push_back(cand);
        rem = quot;
      }
      if (2 * d > static_cast<long>(rem.size()) - 1) break;
    }
  }
  if (rem.size() > 1) factors.push_back(rem);
  long total = 0;
  for (const auto& f : factors) total += static_cast<long>(f.size()) - 1;
  if (total != q) throw std::logic_error("factor_unity: degrees do not add up");
  return factors;
}

std::vector<Int> ring_mul_cyclic(const std::vector<Int>& f, const std::vector<Int>& g,
                                 const Int& mod) {
  size_t q = f.size();
  std::vector<Int> h(q, Int(0));
  for (size_t i = 0; i < q; ++i) {
    if (f[i] == 0) continue;
    for (size_t j = 0; j < q; ++j) h[(i + j) % q] += f[i] * g[j];
  }
  for (Int& x : h) x = mod_floor(x, mod);
  return h;
}

/* Orthogonal idempotents of (Z/mod)[x]/(x^q - 1), one per irreducible factor
 * of x^q - 1 mod p, Hensel-lifted from the mod-p splitting. */
std::vector<std::vector<Int>> unity_idempotents(long q, long p, const Int& mod) {
  auto factors = factor_unity(q, p);
  std::vector<std::vector<Int>> eps;
  FpPoly whole(q + 1, 0);
  whole[0] = p - 1;
  whole[q] = 1;
  for (const auto& f : factors) {
    auto [g, r] = fp_divmod(whole, f, p);
    if (!r.empty()) throw std::logic_error("unity_idempotents: factor does not divide");
    auto [u, v] = fp_bezout(f, g, p);
    FpPoly e0 = fp_mul(v, g, p);
    std::vector<Int> e(q, Int(0));
    for (size_t i = 0; i < e0.size(); ++i) e[i % q] += e0[i];
    for (Int& x : e) x = mod_floor(x, mod);
    for (int step = 0;; ++step) {
      auto e2 = ring_mul_cyclic(e, e, mod);
      if (e2 == e) break;
      if (step > 64) throw std::logic_error("unity_idempotents: lift does not converge");
      auto e3 = ring_mul_cyclic(e2, e, mod);
      for (size_t i = 0; i < e.size(); ++i) e[i] = mod_floor(3 * e2[i] - 2 * e3[i], mod);
    }
    eps.push_back(std::move(e));
  }
  std::vector<Int> sum(q, Int(0));
  for (const auto& e : eps)
    for (size_t i = 0; i < e.size(); ++i) sum[i] = mod_floor(sum[i] + e[i], mod);
  std::vector<Int> one(q, Int(0));
  one[0] = 1;
  if (sum != one) throw std::logic_error("unity_idempotents: family does not sum to 1");
  for (size_t i = 0; i < eps.size(); ++i)
    for (size_t j = i + 1; j < eps.size(); ++j) {
      auto prod = ring_mul_cyclic(eps[i], eps[j], mod);
      if (prod != std::vector<Int>(q, Int(0)))
        throw std::logic_error("unity_idempotents: family is not orthogonal");
    }
  return eps;
}

IMat eval_poly(const std::vector<Int>& coeffs, const IMat& T, const std::vector<Int>& mods) {
  int r = T.rows;
  IMat R(r, r), P = IMat::identity(r);
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) R = mat_add(R, mat_scale(coeffs[k], P));
    if (k + 1 < coeffs.size()) P = reduced_mul(P, T, mods);
  }
  reduce_rows(R, mods);
  return R;
}

} // namespace

IdempotentSplit idempotent_split(const GModule& M, const IMat& delta, long delta_order) {
  if (delta_order < 1) throw argument_error("idempotent_split: auxiliary order must be positive");
  if (std::gcd(delta_order, M.p) != 1)
    throw argument_error("idempotent_split: auxiliary order must be coprime to p");
  IdempotentSplit out;
  if (M.rank() == 0) {
    out.sf_verified = true;
    return out;
  }
  IMat dl = validated_commuting_action(M, delta, delta_order, "idempotent_split");
  auto mods = M.moduli();
  IMat D = diagonal(mods);
  auto eps = unity_idempotents(delta_order, M.p, mods[0]);
  Int prod = 1;
  std::vector<std::vector<Int>> comp_exps;
  for (const auto& e : eps) {
    IMat E = eval_poly(e, dl, mods);
    Presentation pres = present_subquotient(hnf_basis(mat_hjoin(E, D)), D, {M.sigma});
    out.components.push_back(module_from(M.p, pres, 0));
    prod *= out.components.back().order();
  }
  if (prod != M.order()) throw std::logic_error("idempotent_split: components do not exhaust M");
  // cohomology commutes with the split: the idempotent part of H^q(M) must
  // match H^q of the component, in both degrees
  out.sf_verified = true;
  for (int q : {0, -1}) {
    IMat num = q == 0 ? one_minus_sigma(M) : nu_matrix(M);
    IMat den = q == 0 ? nu_matrix(M) : one_minus_sigma(M);
    Presentation hp = present_subquotient(kernel_lattice(num, mods), mat_hjoin(den, D), {dl});
    std::vector<long> hexps;
    for (const Int& d : hp.divisors) hexps.push_back(p_exponent(d, M.p));
    GModule H = make_gmodule(M.p, hexps, IMat::identity(static_cast<int>(hexps.size())));
    auto hmods = H.moduli();
    for (size_t i = 0; i < eps.size(); ++i) {
      AbelianStructure lhs =
          H.rank() == 0 ? AbelianStructure{} : image_structure(H, eval_poly(eps[i], hp.actions[0], hmods));
      AbelianStructure rhs = tate_cohomology(out.components[i], q);
      if (!(lhs == rhs)) out.sf_verified = false;
    }
  }
  return out;
}

NormConfiguration make_norm_configuration(GModule M, std::vector<Int> base_divisors, IMat norm,
                                          IMat transfer) {
  int r = static_cast<int>(M.rank());
  int c = static_cast<int>(base_divisors.size());
  for (int t = 0; t < c; ++t) {
    Int d = base_divisors[t];
    long v = 0;
    while (d % M.p == 0) {
      d /= M.p;
      ++v;
    }
    if (d != 1 || v == 0)
      throw argument_error("make_norm_configuration: base divisors must be p-powers above 1");
    if (t > 0 && base_divisors[t] > base_divisors[t - 1])
      throw argument_error("make_norm_configuration: base divisors must descend");
  }
  if (norm.rows != c || norm.cols != r || transfer.rows != r || transfer.cols != c)
    throw argument_error("make_norm_configuration: map shapes do not match");
  auto mods = M.moduli();
  for (int t = 0; t < c; ++t)
    for (int j = 0; j < norm.cols; ++j) norm(t, j) = mod_floor(norm(t, j), base_divisors[t]);
  reduce_rows(transfer, mods);
  for (int t = 0; t < c; ++t)
    for (int i = 0; i < r; ++i)
      if (norm(t, i) * mods[i] % base_divisors[t] != 0)
        throw argument_error("make_norm_configuration: norm is not well defined");
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < c; ++t)
      if (transfer(i, t) * base_divisors[t] % mods[i] != 0)
        throw argument_error("make_norm_configuration: transfer is not well defined");
  if (r > 0 && c > 0) {
    IMat drift = mat_mul(norm, mat_sub(M.sigma, IMat::identity(r)));
    for (int t = 0; t < c; ++t)
      for (int j = 0; j < r; ++j)
        if (drift(t, j) % base_divisors[t] != 0)
          throw argument_error("make_norm_configuration: norm is not equivariant");
    IMat fix = mat_mul(mat_sub(M.sigma, IMat::identity(r)), transfer);
    for (int i = 0; i < r; ++i)
      for (int t = 0; t < c; ++t)
        if (fix(i, t) % mods[i] != 0)
          throw argument_error("make_norm_configuration: transfer image is not fixed");
  }
  if (c > 0) {
    IMat nj = mat_mul(norm, transfer);
    for (int s = 0; s < c; ++s)
      for (int t = 0; t < c; ++t) {
        Int want = s == t ? Int(M.p) : Int(0);
        if ((nj(s, t) - want) % base_divisors[s] != 0)
          throw argument_error("make_norm_configuration: norm after transfer is not the p-th power");
      }
    std::vector<Int> divs = smith_divisors(mat_hjoin(norm, diagonal(base_divisors)));
    for (const Int& d : divs)
      if (d != 1) throw argument_error("make_norm_configuration: norm is not surjective");
  }
  return {std::move(M), std::move(base_divisors), std::move(norm), std::move(transfer)};
}

std::vector<NormConfiguration> norm_configurations(const GModule& M, long limit) {
  std::vector<NormConfiguration> out;
  int r = static_cast<int>(M.rank());
  if (r == 0) {
    out.push_back(make_norm_configuration(M, {}, IMat(0, 0), IMat(0, 0)));
    return out;
  }
  auto mods = M.moduli();
  IMat D = diagonal(mods);
  IMat nu = nu_matrix(M);
  IMat den = mat_hjoin(one_minus_sigma(M), D);
  Presentation Q = present_subquotient(kernel_lattice(nu, mods), den, {});
  long qn = 1;
  std::vector<long> qd;
  for (const Int& d : Q.divisors) {
    qd.push_back(to_long(d));
    qn *= qd.back();
    if (qn > 2048) throw resource_error("norm_configurations: norm kernel quotient too large");
  }
  auto decode = [&](long idx) {
    std::vector<long> digits(qd.size());
    for (size_t i = 0; i < qd.size(); ++i) {
      digits[i] = idx % qd[i];
      idx /= qd[i];
    }
    return digits;
  };
  auto add = [&](long a, long b) {
    auto da = decode(a), db = decode(b);
    long idx = 0, stride = 1;
    for (size_t i = 0; i < qd.size(); ++i) {
      idx += ((da[i] + db[i]) % qd[i]) * stride;
      stride *= qd[i];
    }
    return idx;
  };
  // subgroups of the quotient by closure, smallest first
  std::set<std::vector<char>> seen;
  std::queue<std::vector<char>> work;
  auto closure = [&](std::vector<char> memb) {
    std::vector<long> list;
    for (long x = 0; x < qn; ++x)
      if (memb[x]) list.push_back(x);
    for (size_t a = 0; a < list.size(); ++a)
      for (size_t b = 0; b <= a; ++b) {
        long s = add(list[a], list[b]);
        if (!memb[s]) {
          memb[s] = 1;
          list.push_back(s);
        }
      }
    return memb;
  };
  std::vector<char> triv(qn, 0);
  triv[0] = 1;
  seen.insert(triv);
  work.push(triv);
  while (!work.empty()) {
    auto H = work.front();
    work.pop();
    for (long x = 0; x < qn; ++x) {
      if (H[x]) continue;
      auto H2 = H;
      H2[x] = 1;
      H2 = closure(std::move(H2));
      if (seen.insert(H2).second) {
        if (static_cast<long>(seen.size()) > limit)
          throw resource_error("norm_configurations: subgroup count exceeds the limit");
        work.push(H2);
      }
    }
  }
  std::vector<std::vector<char>> subs(seen.begin(), seen.end());
  std::sort(subs.begin(), subs.end(), [](const std::vector<char>& a, const std::vector<char>& b) {
    long ca = std::count(a.begin(), a.end(), 1);
    long cb = std::count(b.begin(), b.end(), 1);
    if (ca != cb) return ca < cb;
    return a > b;
  });
  for (const auto& memb : subs) {
    std::vector<long> members;
    for (long x = 0; x < qn; ++x)
      if (memb[x]) members.push_back(x);
    IMat lifted(r, static_cast<int>(members.size()));
    for (size_t t = 0; t < members.size(); ++t) {
      auto digits = decode(members[t]);
      for (int i = 0; i < r; ++i) {
        Int v = 0;
        for (size_t u = 0; u < digits.size(); ++u) v += digits[u] * Q.gens(i, static_cast<int>(u));
        lifted(i, static_cast<int>(t)) = v;
      }
    }
    IMat W = hnf_basis(mat_hjoin(den, lifted));
    Presentation C = present_subquotient(IMat::identity(r), W, {});
    int c = static_cast<int>(C.divisors.size());
    IMat N = C.coord_rows;
    for (int t = 0; t < c; ++t)
      for (int i = 0; i < r; ++i) N(t, i) = mod_floor(N(t, i), C.divisors[t]);
    IMat J = mat_mul(nu, C.gens);
    reduce_rows(J, mods);
    try {
      out.push_back(make_norm_configuration(M, C.divisors, std::move(N), std::move(J)));
    } catch (const argument_error& err) {
      throw std::logic_error(std::string("norm_configurations: synthetic witness rejected: ") +
                             err.what());
    }
  }
  return out;
}

AmbiguousReport check_p1am(const NormConfiguration& cfg) {
  const GModule& M = cfg.M;
  AmbiguousReport rep;
  rep.fixed_order = 1;
  rep.kernel_index = 1;
  rep.base_order = 1;
  for (const Int& d : cfg.base_divisors) rep.base_order *= d;
  int r = static_cast<int>(M.rank());
  if (r == 0) {
    rep.pass = rep.base_order == 1;
    return rep;
  }
  auto mods = M.moduli();
  IMat om = one_minus_sigma(M);
  rep.fixed_order = kernel_structure(M, om).order;
  // finite module: an endomorphism's kernel and cokernel agree in order
  if (cokernel_structure(M, om).order != rep.fixed_order)
    throw std::logic_error("check_p1am: kernel and cokernel orders disagree");
  IMat KN = cfg.base_divisors.empty() ? IMat::identity(r)
                                      : kernel_lattice(cfg.norm, cfg.base_divisors);
  IMat B1 = hnf_basis(mat_hjoin(om, diagonal(mods)));
  rep.kernel_index = quotient_structure(KN, B1).order;
  rep.pass = rep.fixed_order == rep.kernel_index * rep.base_order;
  return rep;
}

RankBoundReport check_p21(const NormConfiguration& cfg) {
  const GModule& M = cfg.M;
  RankBoundReport rep;
  rep.module_order = M.order();
  rep.base_order = 1;
  for (const Int& d : cfg.base_divisors) rep.base_order *= d;
  rep.base_rank = static_cast<long>(cfg.base_divisors.size());
  if (rep.base_rank > 0) {
    IMat Kj = kernel_lattice(cfg.transfer, M.moduli());
    rep.transfer_kernel_rank = quotient_structure(Kj, diagonal(cfg.base_divisors)).rank();
  }
  Int bound = int_pow(M.p, rep.base_rank - rep.transfer_kernel_rank);
  rep.pass = rep.module_order >= bound * rep.base_order;
  return rep;
}

StructureReport check_p3_tbu_guerry(const GModule& M, const NormConfiguration& cfg) {
  if (M.p != cfg.M.p || M.e != cfg.M.e || !(M.sigma == cfg.M.sigma))
    throw argument_error("check_p3_tbu_guerry: module and configuration disagree");
  if (M.p == 2) throw argument_error("check_p3_tbu_guerry: p must be odd");
  StructureReport rep;
  int r = static_cast<int>(M.rank());
  if (r == 0) {
    rep.power_kills = true;
    rep.ingredient_holds = true;
    rep.guerry_holds = true;
    rep.pass = true;
    return rep;
  }
  auto mods = M.moduli();
  IMat D = diagonal(mods);
  IMat nu = nu_matrix(M);
  IMat jn = mat_mul(cfg.transfer, cfg.norm);
  reduce_rows(jn, mods);
  if (!(jn == nu))
    throw argument_error("check_p3_tbu_guerry: transfer after norm is not the algebraic norm");
  IMat Bj = hnf_basis(mat_hjoin(cfg.transfer, D));
  AbelianStructure imj = quotient_structure(Bj, D);
  IMat Bp = hnf_basis(mat_hjoin(mat_scale(Int(M.p), IMat::identity(r)), D));
  rep.index_exponent = p_exponent(M.order() / imj.order, M.p);
  if (!cfg.base_divisors.empty()) {
    IMat Kj = kernel_lattice(cfg.transfer, mods);
    rep.gamma = quotient_structure(Kj, diagonal(cfg.base_divisors)).rank();
  }
  rep.p3_applies = rep.index_exponent <= M.p - 2 + rep.gamma;
  if (rep.p3_applies) rep.p3_holds = Bj == Bp;
  long rank_m = static_cast<long>(M.e.size());
  rep.pn_applies = imj.rank() >= rank_m - (M.p - 3);
  if (rep.pn_applies) {
    rep.pn_holds = true;
    for (const Int& d : kernel_structure(M, nu).divisors)
      if (d != M.p) rep.pn_holds = false;
  }
  rep.tbu_applies = imj.rank() == rank_m;
  if (rep.tbu_applies) rep.tbu_holds = Bj == Bp;
  bool cyclic_nontrivial = rank_m == 1;
  AbelianStructure quot = structure_from_divisors(smith_divisors(mat_hjoin(cfg.transfer, D)));
  bool quot_zp = quot.divisors.size() == 1 && quot.divisors[0] == M.p;
  rep.guerry_holds = cyclic_nontrivial == quot_zp;
  IMat Lk = reduced_pow(one_minus_sigma(M), M.p - 1, mods);
  rep.power_kills = is_zero(Lk);
  if (rep.power_kills) {
    rep.ingredient_holds = hnf_basis(mat_hjoin(nu, D)) == Bp;
  } else {
    Int m1 = kernel_structure(M, one_minus_sigma(M)).order;
    rep.ingredient_holds = M.order() >= int_pow(M.p, M.p - 1) * m1;
  }
  rep.pass = (!rep.p3_applies || rep.p3_holds) && (!rep.pn_applies || rep.pn_holds) &&
             (!rep.tbu_applies || rep.tbu_holds) && rep.guerry_holds && rep.ingredient_holds;
  return rep;
}

MinusSplit minus_split(const GModule& M, const IMat& J) {
  if (M.p == 2) throw argument_error("minus_split: halving needs p odd");
  if (M.rank() == 0) return {M, M};
  IMat Jr = validated_commuting_action(M, J, 2, "minus_split");
  int r = static_cast<int>(M.rank());
  auto mods = M.moduli();
  IMat D = diagonal(mods);
  Int half = inv_mod(2, mods[0]);
  IMat Ep = mat_scale(half, mat_add(IMat::identity(r), Jr));
  IMat Em = mat_scale(half, mat_sub(IMat::identity(r), Jr));
  reduce_rows(Ep, mods);
  reduce_rows(Em, mods);
  if (!(reduced_mul(Ep, Ep, mods) == Ep) || !(reduced_mul(Em, Em, mods) == Em) ||
      !is_zero(reduced_mul(Ep, Em, mods)))
    throw std::logic_error("minus_split: halving did not produce idempotents");
  MinusSplit out{
      module_from(M.p, present_subquotient(hnf_basis(mat_hjoin(Ep, D)), D, {M.sigma}), 0),
      module_from(M.p, present_subquotient(hnf_basis(mat_hjoin(Em, D)), D, {M.sigma}), 0)};
  if (out.plus.order() * out.minus.order() != M.order())
    throw std::logic_error("minus_split: eigenspaces do not exhaust M");
  return out;
}

MinusExactness check_minus_exactness(const NormConfiguration& cfg, const IMat& J) {
  const GModule& M = cfg.M;
  MinusExactness rep;
  rep.minus_order = 1;
  rep.kernel_minus_order = 1;
  rep.base_minus_order = 1;
  if (M.p == 2) throw argument_error("check_minus_exactness: halving needs p odd");
  int r = static_cast<int>(M.rank());
  if (r == 0) {
    rep.pass = true;
    return rep;
  }
  IMat Jr = validated_commuting_action(M, J, 2, "check_minus_exactness");
  auto mods = M.moduli();
  IMat D = diagonal(mods);
  int c = static_cast<int>(cfg.base_divisors.size());
  IMat KN = c == 0 ? IMat::identity(r) : kernel_lattice(cfg.norm, cfg.base_divisors);
  if (!lattice_contains(KN, mat_mul(Jr, KN)))
    throw argument_error("check_minus_exactness: J does not stabilize the norm kernel");
  Int half = inv_mod(2, mods[0]);
  IMat Em = mat_scale(half, mat_sub(IMat::identity(r), Jr));
  reduce_rows(Em, mods);
  IMat Bminus = hnf_basis(mat_hjoin(Em, D));
  rep.minus_order = quotient_structure(Bminus, D).order;
  IMat Bker = hnf_basis(mat_hjoin(mat_mul(Em, KN), D));
  rep.kernel_minus_order = quotient_structure(Bker, D).order;
  // the lattice identity ker(norm) ∩ M^- = E_-(ker norm)
  IMat pairs = integer_kernel(mat_hjoin(KN, mat_scale(Int(-1), Bminus)));
  IMat top(r, pairs.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < pairs.cols; ++j) top(i, j) = pairs(i, j);
  bool lattice_match = hnf_basis(mat_mul(KN, top)) == Bker;
  if (c > 0) {
    IMat lifts(r, c);
    for (int t = 0; t < c; ++t) {
      std::vector<Int> e(c, Int(0));
      e[t] = 1;
      auto x = solve_integer(mat_hjoin(cfg.norm, diagonal(cfg.base_divisors)), e);
      if (!x) throw std::logic_error("check_minus_exactness: norm is not surjective");
      for (int i = 0; i < r; ++i) lifts(i, t) = (*x)[i];
    }
    IMat JC = mat_mul(cfg.norm, mat_mul(Jr, lifts));
    for (int s = 0; s < c; ++s)
      for (int t = 0; t < c; ++t) JC(s, t) = mod_floor(JC(s, t), cfg.base_divisors[s]);
    std::vector<long> cexps;
    for (const Int& d : cfg.base_divisors) cexps.push_back(p_exponent(d, M.p));
    GModule C = make_gmodule(M.p, cexps, IMat::identity(c));
    IMat JCv = validated_commuting_action(C, JC, 2, "check_minus_exactness: induced involution");
    Int halfc = inv_mod(2, cfg.base_divisors[0]);
    IMat EmC = mat_scale(halfc, mat_sub(IMat::identity(c), JCv));
    auto cmods = C.moduli();
    reduce_rows(EmC, cmods);
    rep.base_minus_order = image_structure(C, EmC).order;
  }
  rep.pass = lattice_match && rep.minus_order == rep.kernel_minus_order * rep.base_minus_order;
  return rep;
}

std::vector<std::vector<long>> divisor_shapes(long p, long max_order) {
  if (p < 2 || !is_prime(Int(p))) throw argument_error("divisor_shapes: p must be prime");
  if (max_order < 1) throw argument_error("divisor_shapes: bound must be positive");
  long tmax = 0;
  Int pw = 1;
  while (pw * p <= max_order) {
    pw *= p;
    ++tmax;
  }
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long remaining, long maxpart) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (long q = std::min(maxpart, remaining); q >= 1; --q) {
      cur.push_back(q);
      self(self, remaining - q, q);
      cur.pop_back();
    }
  };
  for (long t = 1; t <= tmax; ++t) rec(rec, t, t);
  return out;
}

std::vector<IMat> sigma_candidates(long p, const std::vector<long>& e, long limit) {
  if (p < 2 || !is_prime(Int(p))) throw argument_error("sigma_candidates: p must be prime");
  int r = static_cast<int>(e.size());
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 1) throw argument_error("sigma_candidates: exponents must be positive");
    if (i > 0 && e[i] > e[i - 1]) throw argument_error("sigma_candidates: exponents must descend");
  }
  std::vector<IMat> out;
  if (r == 0) {
    out.push_back(IMat(0, 0));
    return out;
  }
  std::vector<long> count(r * r), step(r * r);
  Int total = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long lo = std::min(e[i], e[j]), hi = std::max(e[i] - e[j], 0L);
      count[i * r + j] = to_long(int_pow(p, lo));
      step[i * r + j] = to_long(int_pow(p, hi));
      total *= count[i * r + j];
    }
  if (total > limit) throw resource_error("sigma_candidates: candidate space exceeds the limit");
  std::vector<long> digit(r * r, 0);
  for (;;) {
    IMat S(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) S(i, j) = digit[i * r + j] * step[i * r + j];
    try {
      out.push_back(make_gmodule(p, e, S).sigma);
    } catch (const argument_error&) {
    }
    int pos = r * r - 1;
    while (pos >= 0 && digit[pos] + 1 == count[pos]) digit[pos--] = 0;
    if (pos < 0) break;
    ++digit[pos];
  }
  return out;
}

} // namespace cyclolab
