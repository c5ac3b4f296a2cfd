#pragma once

#include <cstdint>
#include <vector>

#include "cyclodet/cyc_matrix.hpp"
#include "cyclodet/cyclo_ring.hpp"

namespace cyclodet {

/*
 * Exact determinants over Z[zeta_m].
 *
 * Two independent engines:
 *   - bareiss_det: fraction-free elimination; every interior division goes
 *     through exact_div and is verified exact, so a logic error cannot pass
 *     silently.
 *   - crt_int_det: for determinants known (by theory) to be rational
 *     integers. Maps zeta_m to an element of order m in F_ell for auxiliary
 *     primes ell == 1 (mod m), eliminates mod ell, and reconstructs by CRT
 *     under a caller-supplied magnitude bound.
 */

// Exact determinant of a square CycMatrix. First nonzero pivot in column
// order; an all-zero column yields determinant 0.
CycInt bareiss_det(const CycMatrix& M);

// Modular image of Z[zeta_m]: an auxiliary prime ell == 1 (mod m) and an
// element w of multiplicative order exactly m (the image of zeta_m).
struct HomContext {
  unsigned m = 1;
  std::uint64_t ell = 0;
  std::uint64_t w = 1;
};

// Rule for picking w among the phi(m) elements of order m; any choice gives
// the same residue for an integer determinant.
enum class WRule { kLeast, kAlternate };

HomContext make_hom_context(unsigned m, std::uint64_t ell, WRule rule = WRule::kLeast);

// Increasing primes ell == 1 (mod m) starting above 2^20.
std::uint64_t next_aux_prime(unsigned m, std::uint64_t after);

// det(M) mod ell via Gaussian elimination over F_ell. A singular image is a
// valid result (0), not an error.
std::uint64_t modular_det(const CycMatrix& M, const HomContext& hom);

// Multi-modular determinant: requires |det(M)| <= bound; reconstructs in the
// symmetric range once the CRT modulus exceeds 2*bound. jobs > 1 runs the
// per-prime eliminations in parallel.
BigInt crt_int_det(const CycMatrix& M, const BigInt& bound, WRule rule = WRule::kLeast,
                   unsigned jobs = 1);

// Hadamard-style bound with each entry's magnitude replaced by the sum of
// absolute coefficient values (an upper bound on every complex embedding).
BigInt cyc_matrix_hadamard_bound(const CycMatrix& M);

// Tight bound for the Jacobi-sum matrices: off the eps row/column every
// embedding has |J| <= sqrt(p) (exactly 1 on the degenerate diagonal), and
// the eps row contributes the exact magnitudes p-2 and 1.
BigInt jacobi_det_bound(std::uint64_t p, std::uint64_t n, bool include_zero);

// C(v): entry (i,j) = v[(i-j) mod n].
CycMatrix circulant_matrix(const std::vector<CycInt>& v);
// W(v): C(v) with row 0 and column 0 deleted; requires n >= 2.
CycMatrix almost_circulant_matrix(const std::vector<CycInt>& v);

// Eigenvalues lambda_l = sum_j v[j] zeta_n^{lj} of C(v), exact, in conductor
// lcm(n, conductor of entries).
std::vector<CycInt> circulant_eigs(const std::vector<CycInt>& v);

// det W(v) = (1/n) sum_l prod_{r != l} lambda_r; the division by n is
// checked exact. Result lives in conductor lcm(n, entry conductor).
CycInt almost_circulant_det(const std::vector<CycInt>& v);

}  // namespace cyclodet
