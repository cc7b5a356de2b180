// Element-table engine behind module_survey.  A module of order <= 128 is
// tabulated element by element, so kernels, images, subgroups and eigenparts
// become bitset scans; that is what keeps full enumeration at order p^4 cheap.
// The lattice engine in galmod.cpp answers the same questions one module at a
// time, and the tests pin the two against each other and against closed forms.

#include "cyclolab/galmod_fast.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cyclolab/errors.hpp"
#include "cyclolab/galmod.hpp"

namespace cyclolab {
namespace {

constexpr long kMaxTableOrder = 128;
constexpr long kSfExhaustiveOrder = 27; // involution battery covers every module up to here
constexpr long kSfTargetSample = 96;    // sampled modules per shape above that order
constexpr long kScanCap = 100000;       // per-module involution scans stay under this
constexpr long kCfgCap = 4096;
constexpr std::size_t kKeepNotes = 64;

struct Bits {
  std::array<std::uint64_t, 2> w{0, 0};
  void set(long i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t(1) << (i & 63); }
  bool test(long i) const {
    return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
  }
  long count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  bool operator==(const Bits& o) const { return w == o.w; }
  bool operator<(const Bits& o) const { return w < o.w; }
  Bits operator&(const Bits& o) const {
    Bits r;
    r.w[0] = w[0] & o.w[0];
    r.w[1] = w[1] & o.w[1];
    return r;
  }
};

long ppow(long p, long k) {
  long v = 1;
  while (k-- > 0) v *= p;
  return v;
}

// exact base-p logarithm, -1 when v is not a power of p
long plog(long v, long p) {
  long k = 0;
  while (v > 1) {
    if (v % p != 0) return -1;
    v /= p;
    ++k;
  }
  return k;
}

long inv_mod_small(long a, long p) {
  a %= p;
  for (long t = 1; t < p; ++t)
    if (a * t % p == 1) return t;
  return 0;
}

// All tables that depend only on the elementary-divisor shape.
struct Shape {
  long p = 0;
  std::vector<long> e;
  int r = 0;
  long n = 1;
  bool elementary = false;
  std::vector<long> mods, stride;
  std::vector<long> coords;              // n * r
  std::vector<long> add;                 // n * n
  std::vector<long> neg;                 // n
  std::vector<std::vector<long>> pk;     // pk[k]: multiply by p^k, k = 0..e[0]
  std::vector<long> half;                // multiply by the inverse of 2
  std::vector<long> steps, counts;       // candidate geometry, row-major entries
  long space = 1;
  std::vector<long> ident;               // identity matrix, r*r

  long encode(const long* c) const {
    long x = 0;
    for (int i = 0; i < r; ++i) x += c[i] % mods[i] * stride[i];
    return x;
  }

  void build(long p_, const std::vector<long>& e_) {
    p = p_;
    e = e_;
    r = static_cast<int>(e.size());
    mods.resize(r);
    stride.resize(r);
    n = 1;
    elementary = true;
    for (int i = 0; i < r; ++i) {
      mods[i] = ppow(p, e[i]);
      n *= mods[i];
      if (e[i] != 1) elementary = false;
    }
    stride[r - 1] = 1;
    for (int i = r - 2; i >= 0; --i) stride[i] = stride[i + 1] * mods[i + 1];
    coords.resize(static_cast<std::size_t>(n) * r);
    for (long x = 0; x < n; ++x)
      for (int i = 0; i < r; ++i) coords[x * r + i] = x / stride[i] % mods[i];
    add.resize(static_cast<std::size_t>(n) * n);
    neg.resize(n);
    long c[8];
    for (long x = 0; x < n; ++x) {
      for (int i = 0; i < r; ++i) c[i] = (mods[i] - coords[x * r + i]) % mods[i];
      neg[x] = encode(c);
      for (long y = 0; y < n; ++y) {
        for (int i = 0; i < r; ++i) c[i] = coords[x * r + i] + coords[y * r + i];
        add[x * n + y] = encode(c);
      }
    }
    pk.assign(static_cast<std::size_t>(e[0]) + 1, std::vector<long>(n));
    for (long x = 0; x < n; ++x) {
      pk[0][x] = x;
      for (int i = 0; i < r; ++i) c[i] = p * coords[x * r + i];
      pk[1][x] = encode(c);
    }
    for (long k = 2; k <= e[0]; ++k)
      for (long x = 0; x < n; ++x) pk[k][x] = pk[1][pk[k - 1][x]];
    long h = (mods[0] + 1) / 2; // inverse of 2 modulo every p^{e_i}
    half.resize(n);
    for (long x = 0; x < n; ++x) {
      for (int i = 0; i < r; ++i) c[i] = h % mods[i] * coords[x * r + i];
      half[x] = encode(c);
    }
    steps.resize(static_cast<std::size_t>(r) * r);
    counts.resize(static_cast<std::size_t>(r) * r);
    space = 1;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        steps[i * r + j] = ppow(p, std::max(e[i] - e[j], 0L));
        counts[i * r + j] = ppow(p, std::min(e[i], e[j]));
        space *= counts[i * r + j];
      }
    ident.assign(static_cast<std::size_t>(r) * r, 0);
    for (int i = 0; i < r; ++i) ident[i * r + i] = 1;
  }
};

struct Odometer {
  const Shape* S;
  std::vector<long> d;
  explicit Odometer(const Shape& s) : S(&s), d(s.counts.size(), 0) {}
  void seek(long idx) {
    for (int k = static_cast<int>(d.size()) - 1; k >= 0; --k) {
      d[k] = idx % S->counts[k];
      idx /= S->counts[k];
    }
  }
  void step() {
    for (int k = static_cast<int>(d.size()) - 1; k >= 0; --k) {
      if (++d[k] < S->counts[k]) return;
      d[k] = 0;
    }
  }
};

bool invertible_mod_p(const Shape& S, const long* mat) {
  long a[64];
  const int r = S.r;
  const long p = S.p;
  for (int k = 0; k < r * r; ++k) a[k] = mat[k] % p;
  for (int col = 0; col < r; ++col) {
    int sel = -1;
    for (int row = col; row < r; ++row)
      if (a[row * r + col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) return false;
    if (sel != col)
      for (int k = col; k < r; ++k) std::swap(a[sel * r + k], a[col * r + k]);
    long inv = inv_mod_small(a[col * r + col], p);
    for (int row = col + 1; row < r; ++row) {
      long f = a[row * r + col] * inv % p;
      if (f == 0) continue;
      for (int k = col; k < r; ++k)
        a[row * r + k] = (a[row * r + k] - f * a[col * r + k] % p + p) % p;
    }
  }
  return true;
}

void mul_rows(const Shape& S, const long* A, const long* B, long* C) {
  const int r = S.r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long acc = 0;
      for (int k = 0; k < r; ++k) acc += A[i * r + k] * B[k * r + j];
      C[i * r + j] = acc % S.mods[i];
    }
}

// graded candidate -> valid action matrix; mixed shapes filter by
// invertibility mod p and sigma^p = 1
bool sigma_from_digits_mixed(const Shape& S, const std::vector<long>& d, std::vector<long>& mat) {
  const int m = S.r * S.r;
  for (int k = 0; k < m; ++k) mat[k] = d[k] * S.steps[k];
  if (!invertible_mod_p(S, mat.data())) return false;
  long A[64], T[64];
  std::copy(mat.begin(), mat.end(), A);
  for (long t = 1; t < S.p; ++t) {
    mul_rows(S, A, mat.data(), T);
    std::copy(T, T + m, A);
  }
  for (int k = 0; k < m; ++k)
    if (A[k] != S.ident[k]) return false;
  return true;
}

// elementary shape: sigma = 1 + N with N^min(p,r) = 0; vanishing power-sum
// traces are necessary for nilpotence and prune the scan cheaply
bool sigma_from_digits_elementary(const Shape& S, const std::vector<long>& d, std::vector<long>& mat) {
  const int r = S.r;
  const long p = S.p;
  long tr = 0;
  for (int i = 0; i < r; ++i) tr += d[i * r + i];
  if (tr % p != 0) return false;
  if (r == 1) {
    if (d[0] != 0) return false;
    mat[0] = 1;
    return true;
  }
  long N2[64];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long acc = 0;
      for (int k = 0; k < r; ++k) acc += d[i * r + k] * d[k * r + j];
      N2[i * r + j] = acc % p;
    }
  long tr2 = 0;
  for (int i = 0; i < r; ++i) tr2 += N2[i * r + i];
  if (tr2 % p != 0) return false;
  const long q = std::min<long>(p, r);
  long Nq[64];
  std::copy(N2, N2 + r * r, Nq);
  for (long t = 3; t <= q; ++t) {
    long T[64];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        long acc = 0;
        for (int k = 0; k < r; ++k) acc += Nq[i * r + k] * d[k * r + j];
        T[i * r + j] = acc % p;
      }
    std::copy(T, T + r * r, Nq);
  }
  for (int k = 0; k < r * r; ++k)
    if (Nq[k] != 0) return false;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) mat[i * r + j] = (d[i * r + j] + (i == j ? 1 : 0)) % p;
  return true;
}

bool sigma_from_digits(const Shape& S, const std::vector<long>& d, std::vector<long>& mat) {
  return S.elementary ? sigma_from_digits_elementary(S, d, mat)
                      : sigma_from_digits_mixed(S, d, mat);
}

struct Cfg {
  Bits b;
  std::vector<long> list;
  long size = 0;
};

struct Scratch {
  const Shape* S;
  std::vector<long> mat, sig, om, nu, tt, cur;
  std::vector<long> orders;
  std::vector<Bits> chainK;
  bool stalled = false;
  Bits fixb, Bb, Kb, imNu, Mpb;
  std::vector<long> fixlist, Blist, Klist;
  long fixn = 0, Bn = 0, Kn = 0, imNuN = 0, MpN = 0;
  std::vector<Cfg> cfgs;
  std::vector<std::vector<long>> invs;
  Bits Apb, Amb;
  std::vector<long> Aplist, Amlist;

  explicit Scratch(const Shape& s) : S(&s) {
    const std::size_t m = static_cast<std::size_t>(s.r) * s.r;
    mat.resize(m);
    tt.resize(s.n);
    sig.resize(s.n);
    om.resize(s.n);
    nu.resize(s.n);
    cur.resize(s.n);
  }
};

long apply_mat(const Shape& S, const long* mat, long x) {
  long c[8];
  const long* xc = &S.coords[static_cast<std::size_t>(x) * S.r];
  for (int i = 0; i < S.r; ++i) {
    long acc = 0;
    for (int j = 0; j < S.r; ++j) acc += mat[i * S.r + j] * xc[j];
    c[i] = acc % S.mods[i];
  }
  return S.encode(c);
}

void build_tables(Scratch& M) {
  const Shape& S = *M.S;
  const long n = S.n;
  for (long x = 0; x < n; ++x) M.sig[x] = apply_mat(S, M.mat.data(), x);
  for (long x = 0; x < n; ++x) M.om[x] = S.add[x * n + S.neg[M.sig[x]]];
  for (long x = 0; x < n; ++x) {
    long acc = x, y = x;
    for (long t = 1; t < S.p; ++t) {
      y = M.sig[y];
      acc = S.add[acc * n + y];
    }
    M.nu[x] = acc;
  }
  M.fixb = {};
  M.Bb = {};
  M.Kb = {};
  M.imNu = {};
  M.Mpb = {};
  M.fixlist.clear();
  M.Blist.clear();
  M.Klist.clear();
  for (long x = 0; x < n; ++x) {
    if (M.sig[x] == x) M.fixb.set(x);
    M.Bb.set(M.om[x]);
    if (M.nu[x] == 0) M.Kb.set(x);
    M.imNu.set(M.nu[x]);
    M.Mpb.set(S.pk[1][x]);
  }
  for (long x = 0; x < n; ++x) {
    if (M.fixb.test(x)) M.fixlist.push_back(x);
    if (M.Bb.test(x)) M.Blist.push_back(x);
    if (M.Kb.test(x)) M.Klist.push_back(x);
  }
  M.fixn = static_cast<long>(M.fixlist.size());
  M.Bn = static_cast<long>(M.Blist.size());
  M.Kn = static_cast<long>(M.Klist.size());
  M.imNuN = M.imNu.count();
  M.MpN = M.Mpb.count();
  // kernel chain of the powers of 1 - sigma
  M.orders.assign(1, 1);
  M.chainK.clear();
  Bits zero;
  zero.set(0);
  M.chainK.push_back(zero);
  M.stalled = false;
  std::copy(M.om.begin(), M.om.end(), M.cur.begin());
  long cap = 2;
  for (long x : S.e) cap += x * S.p;
  for (long k = 1;; ++k) {
    Bits kb;
    long cnt = 0;
    for (long x = 0; x < n; ++x)
      if (M.cur[x] == 0) {
        kb.set(x);
        ++cnt;
      }
    if (cnt == M.orders.back()) {
      M.stalled = cnt != n;
      break;
    }
    M.orders.push_back(cnt);
    M.chainK.push_back(kb);
    if (cnt == n) break;
    if (k > cap) {
      M.stalled = true;
      break;
    }
    for (long x = 0; x < n; ++x) M.cur[x] = M.om[M.cur[x]];
  }
}

// filtration laws: nested kernels with nonincreasing integral indices, the
// torsion ladder and the power-index sandwich when the norm acts as zero
std::string inaba_check(const Scratch& M) {
  const Shape& S = *M.S;
  const long n = S.n;
  if (M.stalled) return "kernel chain stalls before saturating";
  std::vector<long> idx;
  for (std::size_t k = 1; k < M.orders.size(); ++k) {
    if (M.orders[k] % M.orders[k - 1] != 0) return "kernel index is not integral";
    idx.push_back(M.orders[k] / M.orders[k - 1]);
  }
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (idx[k] > idx[k - 1]) return "kernel index grows at step " + std::to_string(k + 1);
  if (M.imNuN != 1) return {};
  for (long lev = 1; lev <= S.e[0]; ++lev) {
    long tn = 0;
    for (long x = 0; x < n; ++x)
      if (S.pk[lev][x] == 0) ++tn;
    std::size_t at = static_cast<std::size_t>(lev) * (S.p - 1);
    long chain_ord = at < M.orders.size() ? M.orders[at] : n;
    if (tn != chain_ord) return "torsion ladder mismatch at level " + std::to_string(lev);
    if (at < M.chainK.size())
      for (long x = 0; x < n; ++x)
        if (S.pk[lev][x] == 0 && !M.chainK[at].test(x))
          return "torsion escapes the kernel chain at level " + std::to_string(lev);
  }
  long index = n / M.MpN;
  long m1 = M.orders.size() > 1 ? M.orders[1] : 1;
  long upper = 1;
  for (long t = 0; t < S.p - 1; ++t) upper *= m1;
  if (!(m1 <= index && index <= upper)) return "power index escapes the sandwich";
  if (M.MpN > 1 && index < ppow(S.p, S.p - 2) * m1)
    return "power index below the p^{p-2} floor";
  return {};
}

// every subgroup W with (1-sigma)M <= W <= ker(nu), by closure over cosets
std::string enumerate_cfgs(Scratch& M) {
  const Shape& S = *M.S;
  const long n = S.n;
  M.cfgs.clear();
  for (long x : M.Blist)
    if (!M.Kb.test(x)) return "augmentation image escapes the norm kernel";
  std::set<Bits> seen;
  M.cfgs.push_back({M.Bb, M.Blist, M.Bn});
  seen.insert(M.Bb);
  for (std::size_t qi = 0; qi < M.cfgs.size(); ++qi) {
    const Cfg cur = M.cfgs[qi];
    for (long x : M.Klist) {
      if (cur.b.test(x)) continue;
      Bits nb = cur.b;
      std::vector<long> nl = cur.list;
      long m = x;
      while (!cur.b.test(m)) {
        for (long w : cur.list) {
          long y = S.add[w * n + m];
          nb.set(y);
          nl.push_back(y);
        }
        m = S.add[m * n + x];
      }
      if (seen.insert(nb).second) {
        if (static_cast<long>(M.cfgs.size()) >= kCfgCap)
          return "configuration count exceeds the survey cap";
        long sz = static_cast<long>(nl.size());
        M.cfgs.push_back({nb, std::move(nl), sz});
      }
    }
  }
  return {};
}

struct P3Module {
  long a = 0;
  bool im_eq_pm = false;
  long rank_im = 0;
  bool K_elem = false;
  bool ingredient = false;
  bool guerry = false;
  bool pn_applies = false, tbu_applies = false;
  bool bad = false;
};

P3Module p3_module(const Scratch& M) {
  const Shape& S = *M.S;
  P3Module out;
  out.a = plog(S.n / M.imNuN, S.p);
  out.im_eq_pm = M.imNu == M.Mpb;
  long tor = 0;
  for (long x = 0; x < S.n; ++x)
    if (M.imNu.test(x) && S.pk[1][x] == 0) ++tor;
  out.rank_im = plog(tor, S.p);
  out.K_elem = true;
  for (long x : M.Klist)
    if (S.pk[1][x] != 0) out.K_elem = false;
  bool power_kills = !M.stalled && static_cast<long>(M.orders.size()) <= S.p;
  out.ingredient = power_kills ? out.im_eq_pm
                               : S.n >= ppow(S.p, S.p - 1) * M.fixn;
  out.guerry = (S.r == 1) == (S.n / M.imNuN == S.p);
  out.pn_applies = out.rank_im >= S.r - (S.p - 3);
  out.tbu_applies = out.rank_im == S.r;
  out.bad = out.a < 0 || out.rank_im < 0;
  return out;
}

// gamma = p-rank of (ker nu)/W, the transfer kernel of the configuration
long cfg_gamma(const Scratch& M, const Cfg& W) {
  const Shape& S = *M.S;
  long cnt = 0;
  for (long x : M.Klist)
    if (W.b.test(S.pk[1][x])) ++cnt;
  if (cnt % W.size != 0) return -1;
  return plog(cnt / W.size, S.p);
}

std::string cfg_check(const Scratch& M, const Cfg& W, const P3Module& p3, unsigned checks) {
  const Shape& S = *M.S;
  const long n = S.n;
  if (checks & survey_p1am) {
    if (W.size % M.Bn != 0 || n % W.size != 0) return "subgroup orders fail to divide";
    if (M.fixn != W.size / M.Bn * (n / W.size)) return "ambiguous count does not factor";
    long tor = 0;
    for (long x = 0; x < n; ++x)
      if (W.b.test(S.pk[1][x])) ++tor;
    if (tor % W.size != 0) return "coset torsion count is not coset-invariant";
    long rank_c = plog(tor / W.size, S.p);
    long gamma = cfg_gamma(M, W);
    if (rank_c < 0 || gamma < 0) return "coset rank is not a p-power";
    if (W.size < ppow(S.p, rank_c - gamma)) return "rank bound fails";
  }
  if (checks & survey_p3) {
    long gamma = cfg_gamma(M, W);
    if (gamma < 0 || p3.bad) return "transfer kernel rank is not a p-power";
    bool p3_applies = p3.a <= S.p - 2 + gamma;
    bool ok = (!p3_applies || p3.im_eq_pm) && (!p3.pn_applies || p3.K_elem) &&
              (!p3.tbu_applies || p3.im_eq_pm) && p3.guerry && p3.ingredient;
    if (!ok) return "structure battery fails";
  }
  return {};
}

// solution basis of T*sigma = sigma*T over F_p, elementary shapes only
std::vector<std::vector<long>> commutant_basis(const Shape& S, const std::vector<long>& mat) {
  const int r = S.r, m = r * r;
  const long p = S.p;
  std::vector<long> A(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long* row = &A[static_cast<std::size_t>(i * r + j) * m];
      for (int k = 0; k < r; ++k) {
        row[i * r + k] = (row[i * r + k] + mat[k * r + j]) % p;
        row[k * r + j] = (row[k * r + j] - mat[i * r + k] % p + p) % p;
      }
    }
  std::vector<int> pivot(m, -1);
  int rank = 0;
  for (int col = 0; col < m && rank < m; ++col) {
    int sel = -1;
    for (int row = rank; row < m; ++row)
      if (A[static_cast<std::size_t>(row) * m + col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    for (int k = 0; k < m; ++k)
      std::swap(A[static_cast<std::size_t>(sel) * m + k],
                A[static_cast<std::size_t>(rank) * m + k]);
    long inv = inv_mod_small(A[static_cast<std::size_t>(rank) * m + col], p);
    for (int k = 0; k < m; ++k)
      A[static_cast<std::size_t>(rank) * m + k] =
          A[static_cast<std::size_t>(rank) * m + k] * inv % p;
    for (int row = 0; row < m; ++row) {
      if (row == rank) continue;
      long f = A[static_cast<std::size_t>(row) * m + col];
      if (f == 0) continue;
      for (int k = 0; k < m; ++k)
        A[static_cast<std::size_t>(row) * m + k] =
            (A[static_cast<std::size_t>(row) * m + k] -
             f * A[static_cast<std::size_t>(rank) * m + k] % p + p) %
            p;
    }
    pivot[rank] = col;
    ++rank;
  }
  std::vector<bool> is_pivot(m, false);
  for (int t = 0; t < rank; ++t) is_pivot[pivot[t]] = true;
  std::vector<std::vector<long>> basis;
  for (int f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    std::vector<long> v(m, 0);
    v[f] = 1;
    for (int t = 0; t < rank; ++t)
      v[pivot[t]] = (p - A[static_cast<std::size_t>(t) * m + f] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

bool involution_rows(const Shape& S, const long* T) {
  const int r = S.r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long acc = 0;
      for (int k = 0; k < r; ++k) acc += T[i * r + k] * T[k * r + j];
      if ((acc - (i == j ? 1 : 0)) % S.mods[i] != 0) return false;
    }
  return true;
}

bool commutes_rows(const Shape& S, const long* T, const long* sig) {
  const int r = S.r;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      long a = 0, b = 0;
      for (int k = 0; k < r; ++k) {
        a += T[i * r + k] * sig[k * r + j];
        b += sig[i * r + k] * T[k * r + j];
      }
      if ((a - b) % S.mods[i] != 0) return false;
    }
  return true;
}

// every self-inverse action of the shape; used for the identity module where
// the commutant is the whole matrix space
std::vector<std::vector<long>> involution_cache(const Shape& S) {
  std::vector<std::vector<long>> out;
  const int m = S.r * S.r;
  Odometer od(S);
  std::vector<long> T(m);
  for (long idx = 0; idx < S.space; ++idx, od.step()) {
    for (int k = 0; k < m; ++k) T[k] = od.d[k] * S.steps[k];
    if (involution_rows(S, T.data())) out.push_back(T);
  }
  return out;
}

// commuting involutions of one module
bool collect_involutions(const Shape& S, Scratch& M,
                         const std::vector<std::vector<long>>* global) {
  M.invs.clear();
  if (S.elementary) {
    if (global != nullptr && M.mat == S.ident) {
      M.invs = *global;
      return true;
    }
    auto basis = commutant_basis(S, M.mat);
    const int m = S.r * S.r;
    long total = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      total *= S.p;
      if (total > kScanCap) return false;
    }
    std::vector<long> digit(basis.size(), 0), T(m, 0);
    for (long c = 1; c < total; ++c) {
      // odometer carry: each digit move adds its basis vector once mod p
      for (int k = static_cast<int>(basis.size()) - 1; k >= 0; --k) {
        for (int t = 0; t < m; ++t) T[t] = (T[t] + basis[k][t]) % S.p;
        if (++digit[k] < S.p) break;
        digit[k] = 0;
      }
      if (involution_rows(S, T.data())) M.invs.push_back(T);
    }
    return true;
  }
  if (S.space > kScanCap) return false;
  const int m = S.r * S.r;
  Odometer od(S);
  std::vector<long> T(m);
  for (long idx = 0; idx < S.space; ++idx, od.step()) {
    for (int k = 0; k < m; ++k) T[k] = od.d[k] * S.steps[k];
    if (!commutes_rows(S, T.data(), M.mat.data())) continue;
    if (!involution_rows(S, T.data())) continue;
    M.invs.push_back(T);
  }
  return true;
}

// torsion profile of the +/- eigenpart of S_list/R: cumulative counts of
// p^k-torsion cosets, left unscaled so callers compare by cross-multiplying
void part_profile(const Shape& S, const std::vector<long>& slist, const Bits& R,
                  const std::vector<long>& tt, int sign, std::vector<long>& out) {
  out.assign(S.e[0] + 1, 0);
  const long n = S.n;
  for (long x : slist) {
    long y = sign < 0 ? S.add[tt[x] * n + x] : S.add[tt[x] * n + S.neg[x]];
    if (!R.test(y)) continue;
    long lv = 0;
    while (!R.test(S.pk[lv][x])) ++lv;
    ++out[lv];
  }
  for (std::size_t k = 1; k < out.size(); ++k) out[k] += out[k - 1];
}

void component_profile(const Shape& S, const std::vector<long>& slist, const Bits& R,
                       std::vector<long>& out) {
  out.assign(S.e[0] + 1, 0);
  for (long x : slist) {
    long lv = 0;
    while (!R.test(S.pk[lv][x])) ++lv;
    ++out[lv];
  }
  for (std::size_t k = 1; k < out.size(); ++k) out[k] += out[k - 1];
}

// cohomology of the module splits along a commuting involution: the minus and
// plus parts of ker/im quotients match the cohomology of the eigenspace
// components, compared here by torsion profile
std::string sf_check(Scratch& M, const std::vector<long>& T) {
  const Shape& S = *M.S;
  const long n = S.n;
  for (long x = 0; x < n; ++x) M.tt[x] = apply_mat(S, T.data(), x);
  M.Apb = {};
  M.Amb = {};
  M.Aplist.clear();
  M.Amlist.clear();
  for (long x = 0; x < n; ++x) {
    if (M.tt[x] == x) {
      M.Apb.set(x);
      M.Aplist.push_back(x);
    }
    if (M.tt[x] == S.neg[x]) {
      M.Amb.set(x);
      M.Amlist.push_back(x);
    }
  }
  if ((M.Apb & M.Amb).count() != 1 ||
      static_cast<long>(M.Aplist.size() * M.Amlist.size()) != n)
    return "involution eigenspaces do not split the module";
  std::vector<long> lhs, rhs, comp_s;
  for (int q = 0; q < 2; ++q) {
    const std::vector<long>& slist = q == 0 ? M.fixlist : M.Klist;
    const Bits& R = q == 0 ? M.imNu : M.Bb;
    long rn = q == 0 ? M.imNuN : M.Bn;
    for (int sign = -1; sign <= 1; sign += 2) {
      const std::vector<long>& plist = sign < 0 ? M.Amlist : M.Aplist;
      Bits rc;
      comp_s.clear();
      if (q == 0) {
        for (long x : plist) {
          rc.set(M.nu[x]);
          if (M.sig[x] == x) comp_s.push_back(x);
        }
      } else {
        for (long x : plist) {
          rc.set(M.om[x]);
          if (M.nu[x] == 0) comp_s.push_back(x);
        }
      }
      long rcn = rc.count();
      part_profile(S, slist, R, M.tt, sign, lhs);
      component_profile(S, comp_s, rc, rhs);
      for (std::size_t k = 0; k < lhs.size(); ++k)
        if (lhs[k] * rcn != rhs[k] * rn)
          return std::string("cohomology of the ") + (sign < 0 ? "minus" : "plus") +
                 " part disagrees with the component at q = " + (q == 0 ? "0" : "-1");
    }
  }
  return {};
}

// exactness of the minus parts: E_-(W) is exactly W cap M^-, and the minus
// orders factor through the coset module
std::string minus_check(Scratch& M, const Cfg& W, long& ran) {
  const Shape& S = *M.S;
  const long n = S.n;
  for (long w : W.list)
    if (!W.b.test(M.tt[w])) return {}; // involution moves W: precondition fails, skip
  ++ran;
  Bits em;
  for (long w : W.list) em.set(S.half[S.add[w * n + S.neg[M.tt[w]]]]);
  Bits wm = W.b & M.Amb;
  if (!(em == wm)) return "minus kernel misses the lattice identity";
  long cnt = 0;
  for (long x = 0; x < n; ++x)
    if (W.b.test(S.add[M.tt[x] * n + x])) ++cnt;
  if (cnt % W.size != 0) return "minus coset count is not coset-invariant";
  if (static_cast<long>(M.Amlist.size()) != wm.count() * (cnt / W.size))
    return "minus orders do not factor through the cosets";
  return {};
}

struct Part {
  long sigma_count = 0, chain_steps = 0, fixed_sum = 0;
  long configurations = 0, sf_pairs = 0, minus_pairs = 0;
  long failures = 0;
  std::vector<std::pair<long, std::string>> notes;
};

std::string module_tag(const Shape& S, const std::vector<long>& mat) {
  std::string s = std::to_string(S.p) + ":";
  for (int i = 0; i < S.r; ++i) s += (i ? "," : "") + std::to_string(S.e[i]);
  s += ":";
  for (std::size_t k = 0; k < mat.size(); ++k) s += (k ? "," : "") + std::to_string(mat[k]);
  return s;
}

void note_failure(Part& out, long idx, const Shape& S, const Scratch& M, const std::string& what) {
  ++out.failures;
  if (out.notes.size() < kKeepNotes)
    out.notes.emplace_back(idx, module_tag(S, M.mat) + " " + what);
}

void run_range(const Shape& S, unsigned checks, long lo, long hi,
               const std::vector<long>& sampled,
               const std::vector<std::vector<long>>* global, Part& out) {
  Odometer od(S);
  od.seek(lo);
  Scratch scr(S);
  const bool want_cfg = (checks & (survey_p1am | survey_p3)) != 0;
  const bool want_sf = (checks & survey_sf) != 0;
  for (long idx = lo; idx < hi; ++idx, od.step()) {
    if (!sigma_from_digits(S, od.d, scr.mat)) continue;
    ++out.sigma_count;
    build_tables(scr);
    out.chain_steps += static_cast<long>(scr.orders.size()) - 1;
    out.fixed_sum += scr.fixn;
    if (checks & survey_inaba) {
      std::string f = inaba_check(scr);
      if (!f.empty()) note_failure(out, idx, S, scr, "filtration: " + f);
    }
    bool sampled_here =
        want_sf && (sampled.empty() ||
                    std::binary_search(sampled.begin(), sampled.end(), idx));
    if (want_cfg || (want_sf && sampled_here)) {
      std::string f = enumerate_cfgs(scr);
      if (!f.empty()) {
        note_failure(out, idx, S, scr, "configurations: " + f);
        continue;
      }
      if (want_cfg) {
        if (scr.fixn * scr.Bn != S.n)
          note_failure(out, idx, S, scr, "fixed points do not match the augmentation cokernel");
        P3Module p3 = p3_module(scr);
        out.configurations += static_cast<long>(scr.cfgs.size());
        for (std::size_t ci = 0; ci < scr.cfgs.size(); ++ci) {
          std::string g = cfg_check(scr, scr.cfgs[ci], p3, checks);
          if (!g.empty())
            note_failure(out, idx, S, scr, "cfg " + std::to_string(ci) + ": " + g);
        }
      }
      if (sampled_here) {
        if (!collect_involutions(S, scr, global)) {
          note_failure(out, idx, S, scr, "involution scan exceeds the survey cap");
          continue;
        }
        for (const auto& T : scr.invs) {
          ++out.sf_pairs;
          std::string g = sf_check(scr, T);
          if (!g.empty()) {
            note_failure(out, idx, S, scr, "split: " + g);
            continue;
          }
          for (std::size_t ci = 0; ci < scr.cfgs.size(); ++ci) {
            std::string h = minus_check(scr, scr.cfgs[ci], out.minus_pairs);
            if (!h.empty())
              note_failure(out, idx, S, scr, "minus cfg " + std::to_string(ci) + ": " + h);
          }
        }
      }
    }
  }
}

void collect_valid(const Shape& S, long lo, long hi, std::vector<long>& out) {
  Odometer od(S);
  od.seek(lo);
  std::vector<long> mat(static_cast<std::size_t>(S.r) * S.r);
  for (long idx = lo; idx < hi; ++idx, od.step())
    if (sigma_from_digits(S, od.d, mat)) out.push_back(idx);
}

} // namespace

SurveyReport module_survey(long p, long max_order, unsigned checks, long jobs) {
  if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
    throw argument_error("module_survey: p must be an odd prime");
  if (max_order < 1) throw argument_error("module_survey: max_order must be positive");
  if (max_order > kMaxTableOrder)
    throw unsupported_error("module_survey: table engine caps module order at 128");
  if (checks == 0 || (checks & ~survey_all) != 0)
    throw argument_error("module_survey: unknown check selection");
  if (jobs < 1 || jobs > 256) throw argument_error("module_survey: jobs out of range");

  SurveyReport rep;
  rep.p = p;
  rep.max_order = max_order;
  rep.checks = checks;
  std::vector<std::pair<long, std::string>> notes;
  for (const auto& e : divisor_shapes(p, max_order)) {
    Shape S;
    S.build(p, e);
    long chunks = 1;
    if (jobs > 1 && S.space >= 8192)
      chunks = std::min(jobs * 4, std::max<long>(1, S.space / 4096));
    long len = (S.space + chunks - 1) / chunks;

    std::vector<long> sampled; // empty means every module
    if ((checks & survey_sf) != 0 && S.n > kSfExhaustiveOrder) {
      std::vector<std::vector<long>> valid(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(jobs))
#endif
      for (long c = 0; c < chunks; ++c)
        collect_valid(S, c * len, std::min(S.space, (c + 1) * len),
                      valid[static_cast<std::size_t>(c)]);
      long total = 0;
      for (const auto& v : valid) total += static_cast<long>(v.size());
      long stride = std::max<long>(1, total / kSfTargetSample);
      long ordinal = 0;
      for (const auto& v : valid)
        for (long idx : v) {
          if (ordinal % stride == 0) sampled.push_back(idx);
          ++ordinal;
        }
      if (sampled.empty()) sampled.push_back(-1); // nothing qualifies, keep the gate shut
    }

    std::vector<std::vector<long>> global;
    const std::vector<std::vector<long>>* global_ptr = nullptr;
    if ((checks & survey_sf) != 0 && S.elementary && S.space > kScanCap) {
      global = involution_cache(S);
      global_ptr = &global;
    }

    std::vector<Part> parts(static_cast<std::size_t>(chunks));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(static_cast<int>(jobs))
#endif
    for (long c = 0; c < chunks; ++c)
      run_range(S, checks, c * len, std::min(S.space, (c + 1) * len), sampled,
                global_ptr, parts[static_cast<std::size_t>(c)]);

    SurveyShape row;
    row.e = e;
    for (const auto& part : parts) {
      row.sigma_count += part.sigma_count;
      row.chain_steps += part.chain_steps;
      row.fixed_sum += part.fixed_sum;
      row.configurations += part.configurations;
      row.sf_pairs += part.sf_pairs;
      row.minus_pairs += part.minus_pairs;
      rep.failures += part.failures;
      for (const auto& nt : part.notes) notes.push_back(nt);
    }
    rep.modules += row.sigma_count;
    rep.configurations += row.configurations;
    rep.sf_pairs += row.sf_pairs;
    rep.minus_pairs += row.minus_pairs;
    rep.shapes.push_back(std::move(row));
  }
  for (const auto& nt : notes) {
    if (rep.counterexamples.size() >= kKeepNotes) break;
    rep.counterexamples.push_back(nt.second);
  }
  rep.pass = rep.failures == 0;
  return rep;
}

} // namespace cyclolab
