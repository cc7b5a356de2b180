#ifndef CYCLOLAB_SNF_HPP
#define CYCLOLAB_SNF_HPP

#include <optional>
#include <vector>

#include "cyclolab/integers.hpp"

namespace cyclolab {

/* Dense integer matrix, row-major.  Sized for desk-scale lattice work
 * (module ranks and group-ring dimensions well under 100). */
struct IMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IMat identity(int n);
  bool operator==(const IMat& o) const = default;
};

IMat mat_mul(const IMat& A, const IMat& B);
IMat mat_add(const IMat& A, const IMat& B);
IMat mat_sub(const IMat& A, const IMat& B);
IMat mat_scale(const Int& c, const IMat& A);
/* A^k, k >= 0, square A. */
IMat mat_pow(const IMat& A, int k);
/* Columns of A followed by columns of B. */
IMat mat_hjoin(const IMat& A, const IMat& B);
std::vector<Int> mat_apply(const IMat& A, const std::vector<Int>& x);

/* Determinant by fraction-free (Bareiss) elimination. */
Int mat_det(const IMat& A);

/* U*A*V = D with U, V unimodular and D diagonal, D(i,i) = d_i >= 0,
 * d_i | d_{i+1}.  Trailing divisors may be zero when A has a kernel. */
struct Smith {
  IMat U, D, V;
};
Smith smith(const IMat& A);

/* Divisors d_1 | d_2 | ... of A's Smith form (including zeros), length min(r,c). */
std::vector<Int> smith_divisors(const IMat& A);

/* One integer solution of A x = b, if any. */
std::optional<std::vector<Int>> solve_integer(const IMat& A, const std::vector<Int>& b);

/* Basis of the integer kernel {x : A x = 0}; columns of the result. */
IMat integer_kernel(const IMat& A);

} // namespace cyclolab

#endif
