#ifndef CYCLOLAB_GALMOD_HPP
#define CYCLOLAB_GALMOD_HPP

#include <string>
#include <vector>

#include "cyclolab/integers.hpp"
#include "cyclolab/snf.hpp"

namespace cyclolab {

/* Finite module over Z[C_p]: underlying group ⊕ Z/p^{e_i} with e_1 >= e_2 >= ...,
 * generator sigma acting on column vectors, row i read modulo p^{e_i}.
 * Rank zero (trivial module) is allowed; it shows up as a split component. */
struct GModule {
  long p = 3;
  std::vector<long> e;
  IMat sigma;

  long rank() const { return static_cast<long>(e.size()); }
  Int modulus(long i) const;
  std::vector<Int> moduli() const;
  Int order() const;
};

/* Validates and reduces: p prime, exponents descending, sigma well defined on
 * the graded sum, invertible, sigma^p = id. */
GModule make_gmodule(long p, std::vector<long> e, IMat sigma);

/* Cyclic decomposition of a finite abelian group: nontrivial divisors, largest
 * first.  Rank is the number of cyclic factors. */
struct AbelianStructure {
  Int order = 1;
  std::vector<Int> divisors;

  long rank() const { return static_cast<long>(divisors.size()); }
  bool operator==(const AbelianStructure&) const = default;
};

/* The algebraic norm 1 + sigma + ... + sigma^{p-1} as an action matrix. */
IMat nu_matrix(const GModule& M);
IMat one_minus_sigma(const GModule& M);

/* Structure of the subgroup generated by the columns of T, of {m : Tm = 0},
 * and of M/TM.  T is any well-defined endomorphism matrix. */
AbelianStructure image_structure(const GModule& M, const IMat& T);
AbelianStructure kernel_structure(const GModule& M, const IMat& T);
AbelianStructure cokernel_structure(const GModule& M, const IMat& T);

/* Kernel chains: orders of ker (1-sigma)^k ascending until all of M, and of
 * the p^k-torsion subgroups. */
struct Filtration {
  std::vector<Int> sigma_kernel_orders;
  std::vector<Int> torsion_orders;
};
Filtration filtration(const GModule& M);

/* Inaba's filtration laws: strict growth of the kernel chain until it
 * saturates, nonincreasing consecutive indices, and, when the algebraic norm
 * kills M, the torsion ladder M^{(n)} = M_{n(p-1)} with the index sandwich
 * #M_1 <= (M : M^p) <= #M_1^{p-1} and the p^{p-2} lower bound for M^p != 1.
 * A failure would falsify this implementation, not the statements; the report
 * carries the witness. */
struct InabaReport {
  bool pass = false;
  bool norm_kills = false;
  std::vector<Int> orders;
  std::vector<Int> indices;
  std::string failure;
};
InabaReport check_inaba(const GModule& M);

/* Z[sigma]/(sigma^p - 1): coefficient i multiplies sigma^i. */
struct GroupRingElement {
  long p = 3;
  std::vector<Int> coefficients;

  bool operator==(const GroupRingElement&) const = default;
};
GroupRingElement group_ring(long p, std::vector<Int> coefficients);
GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

/* Solutions of p = (1-sigma)^{p-1} f + nu g and nu = (1-sigma)^{p-1} + p h,
 * each certified by exact expansion before being returned. */
struct NormIdentity {
  GroupRingElement f, g, h;
};
NormIdentity solve_e1_e2(long p, long bound = 13);

/* q = 0: fixed points modulo the image of nu; q = -1: kernel of nu modulo the
 * image of (1 - sigma). */
AbelianStructure tate_cohomology(const GModule& M, int q);

/* Decomposition of M under an auxiliary cyclic action of order coprime to p,
 * via the idempotents of (Z/p^{e_1})[x]/(x^q - 1) lifted from mod p.  Each
 * component carries the induced sigma; sf_verified records that taking
 * cohomology commutes with the decomposition in degrees 0 and -1. */
struct IdempotentSplit {
  std::vector<GModule> components;
  bool sf_verified = false;
};
IdempotentSplit idempotent_split(const GModule& M, const IMat& delta, long delta_order);

/* Norm/transfer pair modelling a degree-p extension: C is the base class
 * group (trivial action, divisors largest first), norm: M -> C surjective and
 * equivariant, transfer: C -> M lands in the fixed points, and
 * norm(transfer(c)) = c^p. */
struct NormConfiguration {
  GModule M;
  std::vector<Int> base_divisors;
  IMat norm;
  IMat transfer;
};
NormConfiguration make_norm_configuration(GModule M, std::vector<Int> base_divisors,
                                          IMat norm, IMat transfer);

/* The synthetic family on M: one configuration per subgroup W with
 * (1-sigma)M <= W <= ker nu, taking C = M/W and transfer induced by nu.
 * Deterministic order (subgroup size, then membership).  The subgroup count
 * is capped by limit. */
std::vector<NormConfiguration> norm_configurations(const GModule& M, long limit = 4096);

/* Ambiguous-class count: #(fixed points) = (ker norm : (1-sigma)M) * #C. */
struct AmbiguousReport {
  bool pass = false;
  Int fixed_order;
  Int kernel_index;
  Int base_order;
};
AmbiguousReport check_p1am(const NormConfiguration& cfg);

/* Rank bound #M >= p^{r - gamma} #C with r = rank C, gamma = rank ker transfer. */
struct RankBoundReport {
  bool pass = false;
  long base_rank = 0;
  long transfer_kernel_rank = 0;
  Int module_order;
  Int base_order;
};
RankBoundReport check_p21(const NormConfiguration& cfg);

/* The structure theorems for a configuration with transfer-after-norm = nu:
 * small transfer index forces im(transfer) = M^p; a rank gap bounds the
 * norm kernel to an elementary group; equal ranks force im(transfer) = M^p;
 * and M is cyclic nontrivial exactly when M/im(transfer) = Z/p.  The two
 * proof ingredients are checked on their own: either (1-sigma)^{p-1} fails
 * to kill M and then #M >= p^{p-1} #M_1, or it kills M and then M^p = M^nu. */
struct StructureReport {
  long index_exponent = 0;
  long gamma = 0;
  bool p3_applies = false, p3_holds = true;
  bool pn_applies = false, pn_holds = true;
  bool tbu_applies = false, tbu_holds = true;
  bool guerry_holds = false;
  bool power_kills = false;
  bool ingredient_holds = false;
  bool pass = false;
};
StructureReport check_p3_tbu_guerry(const GModule& M, const NormConfiguration& cfg);

/* Eigenspace split under a commuting involution J; needs p odd so that 2 is
 * invertible.  plus carries the fixed part, minus the negated part. */
struct MinusSplit {
  GModule plus;
  GModule minus;
};
MinusSplit minus_split(const GModule& M, const IMat& J);

/* Exactness of 1 -> (ker norm)^- -> M^- -> C^- -> 1 for a configuration whose
 * kernel is stabilized by J.  Verifies the lattice identity
 * ker(norm) ∩ M^- = (ker norm)^- as well as the order product. */
struct MinusExactness {
  bool pass = false;
  Int minus_order;
  Int kernel_minus_order;
  Int base_minus_order;
};
MinusExactness check_minus_exactness(const NormConfiguration& cfg, const IMat& J);

/* Elementary-divisor shapes with order at most max_order: exponent vectors,
 * ordered by total exponent then refinement. */
std::vector<std::vector<long>> divisor_shapes(long p, long max_order);

/* Every valid action matrix on ⊕ Z/p^{e_i} (well defined, invertible,
 * sigma^p = id), by direct enumeration; throws resource_error when the
 * candidate count exceeds limit. */
std::vector<IMat> sigma_candidates(long p, const std::vector<long>& e, long limit = 200000);

} // namespace cyclolab

#endif
