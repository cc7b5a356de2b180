#include "cyclolab/snf.hpp"

namespace cyclolab {

IMat IMat::identity(int n) {
  IMat I(n, n);
  for (int i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IMat mat_mul(const IMat& A, const IMat& B) {
  if (A.cols != B.rows) throw argument_error("mat_mul: shape mismatch");
  IMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
    }
  return C;
}

IMat mat_add(const IMat& A, const IMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw argument_error("mat_add: shape mismatch");
  IMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
  return C;
}

IMat mat_sub(const IMat& A, const IMat& B) {
  if (A.rows != B.rows || A.cols != B.cols) throw argument_error("mat_sub: shape mismatch");
  IMat C = A;
  for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
  return C;
}

IMat mat_scale(const Int& c, const IMat& A) {
  IMat C = A;
  for (auto& x : C.a) x *= c;
  return C;
}

IMat mat_pow(const IMat& A, int k) {
  if (A.rows != A.cols) throw argument_error("mat_pow: matrix not square");
  if (k < 0) throw argument_error("mat_pow: negative exponent");
  IMat R = IMat::identity(A.rows);
  IMat P = A;
  while (k > 0) {
    if (k & 1) R = mat_mul(R, P);
    k >>= 1;
    if (k > 0) P = mat_mul(P, P);
  }
  return R;
}

IMat mat_hjoin(const IMat& A, const IMat& B) {
  if (A.rows != B.rows) throw argument_error("mat_hjoin: row mismatch");
  IMat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C(i, j) = A(i, j);
    for (int j = 0; j < B.cols; ++j) C(i, A.cols + j) = B(i, j);
  }
  return C;
}

std::vector<Int> mat_apply(const IMat& A, const std::vector<Int>& x) {
  if (static_cast<int>(x.size()) != A.cols) throw argument_error("mat_apply: size mismatch");
  std::vector<Int> y(A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
  return y;
}

Int mat_det(const IMat& A) {
  if (A.rows != A.cols) throw argument_error("mat_det: matrix not square");
  int n = A.rows;
  if (n == 0) return 1;
  IMat M = A;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (M(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (M(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(M(k, j), M(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : -M(n - 1, n - 1);
}

namespace {

void row_swap(IMat& M, int i, int j) {
  for (int c = 0; c < M.cols; ++c) std::swap(M(i, c), M(j, c));
}
void col_swap(IMat& M, int i, int j) {
  for (int r = 0; r < M.rows; ++r) std::swap(M(r, i), M(r, j));
}
// row_i -= q * row_j
void row_sub(IMat& M, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int c = 0; c < M.cols; ++c) M(i, c) -= q * M(j, c);
}
void col_sub(IMat& M, int i, int j, const Int& q) {
  if (q == 0) return;
  for (int r = 0; r < M.rows; ++r) M(r, i) -= q * M(r, j);
}

Int round_div(const Int& a, const Int& b) {
  // quotient minimizing |a - q*b|
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r > abs(b)) q += 1;
  return q;
}

} // namespace

Smith smith(const IMat& A) {
  Smith s{IMat::identity(A.rows), A, IMat::identity(A.cols)};
  IMat& D = s.D;
  int n = A.rows, m = A.cols;
  int t = 0;
  while (t < n && t < m) {
    // pivot: entry of least nonzero magnitude in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) { pi = i; pj = j; }
    if (pi < 0) break;
    row_swap(D, t, pi); row_swap(s.U, t, pi);
    col_swap(D, t, pj); col_swap(s.V, t, pj);
    bool clean = true;
    for (int i = t + 1; i < n; ++i) {
      Int q = round_div(D(i, t), D(t, t));
      row_sub(D, i, t, q); row_sub(s.U, i, t, q);
      if (D(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < m; ++j) {
      Int q = round_div(D(t, j), D(t, t));
      col_sub(D, j, t, q); col_sub(s.V, j, t, q);
      if (D(t, j) != 0) clean = false;
    }
    if (!clean) continue; // smaller pivot now exists in the block
    // pivot must divide the rest of the block for the divisor chain
    bool divides = true;
    for (int i = t + 1; i < n && divides; ++i)
      for (int j = t + 1; j < m && divides; ++j)
        if (D(i, j) % D(t, t) != 0) {
          row_sub(D, t, i, Int(-1)); row_sub(s.U, t, i, Int(-1));
          divides = false;
        }
    if (!divides) continue;
    if (D(t, t) < 0) {
      for (int j = 0; j < m; ++j) D(t, j) = -D(t, j);
      for (int j = 0; j < s.U.cols; ++j) s.U(t, j) = -s.U(t, j);
    }
    ++t;
  }
  return s;
}

std::vector<Int> smith_divisors(const IMat& A) {
  Smith s = smith(A);
  int k = std::min(A.rows, A.cols);
  std::vector<Int> d(k);
  for (int i = 0; i < k; ++i) d[i] = s.D(i, i);
  return d;
}

std::optional<std::vector<Int>> solve_integer(const IMat& A, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != A.rows) throw argument_error("solve_integer: size mismatch");
  Smith s = smith(A);
  std::vector<Int> c = mat_apply(s.U, b);
  std::vector<Int> y(A.cols);
  int k = std::min(A.rows, A.cols);
  for (int i = 0; i < k; ++i) {
    if (s.D(i, i) == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    }
  }
  for (int i = k; i < A.rows; ++i)
    if (c[i] != 0) return std::nullopt;
  return mat_apply(s.V, y);
}

IMat integer_kernel(const IMat& A) {
  Smith s = smith(A);
  int k = std::min(A.rows, A.cols);
  std::vector<int> free_cols;
  for (int j = 0; j < A.cols; ++j)
    if (j >= k || s.D(j, j) == 0) free_cols.push_back(j);
  IMat K(A.cols, static_cast<int>(free_cols.size()));
  for (size_t t = 0; t < free_cols.size(); ++t)
    for (int i = 0; i < A.cols; ++i) K(i, static_cast<int>(t)) = s.V(i, free_cols[t]);
  return K;
}

} // namespace cyclolab
