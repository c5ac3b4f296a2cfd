#pragma once

#include <cstdint>

#include "cyclodet/cyc_matrix.hpp"
#include "cyclodet/cyclo_ring.hpp"
#include "cyclodet/fp_base.hpp"

namespace cyclodet {

/*
 * Gauss and Jacobi sums for the characters of F_p^x.
 *
 * chi is the generator of the character group with chi(g) = zeta_{p-1}
 * exactly, so chi^j(x) = zeta_{p-1}^{j * ind(x)}. The zero convention
 * A(0) = 0 is applied literally to every character including the trivial
 * one; hence G_p(eps) = -1 and J_p(eps, eps) = p - 2.
 *
 * Jacobi sums live in Z[zeta_{p-1}]; Gauss sums in Z[zeta_{p(p-1)}] with
 * zeta_p = zeta_{p(p-1)}^{p-1} and zeta_{p-1} = zeta_{p(p-1)}^p.
 */

// Exponent j of chi^j, normalized mod p-1; j = 0 is the trivial character.
struct CharIndex {
  std::uint64_t j = 0;
  bool trivial() const { return j == 0; }
};

CharIndex make_char(const PrimeContext& ctx, long long j);

// G_p(chi^j) = sum_x chi^j(x) zeta_p^x, conductor p(p-1).
CycInt gauss_sum(const PrimeContext& ctx, CharIndex a);

// J_p(chi^a, chi^b) = sum_x chi^a(x) chi^b(1-x), conductor p-1.
CycInt jacobi_sum(const PrimeContext& ctx, CharIndex a, CharIndex b);

// [J_p(chi^{ki}, chi^{kj})] for 1 <= i,j <= n-1.
CycMatrix jacobi_matrix_x(const PrimeContext& ctx, const DivisorPair& pair);
// [J_p(chi^{ki}, chi^{kj})] for 0 <= i,j <= n-1.
CycMatrix jacobi_matrix_y(const PrimeContext& ctx, const DivisorPair& pair);

// [G_p(chi^{k(i+j)})], indices from 1 (exclude_zero) or 0, conductor p(p-1).
CycMatrix gauss_matrix(const PrimeContext& ctx, const DivisorPair& pair, bool include_zero);

// J_p(A,B) * delta_p(AB) * G_p(AB) == G_p(A) * G_p(B), checked exactly in
// conductor p(p-1); requires A != eps or B != eps.
bool check_gauss_jacobi_relation(const PrimeContext& ctx, CharIndex a, CharIndex b);

// G_p(A) * G_p(conj A) == p * A(-1) for A != eps, checked exactly.
bool check_gauss_conjugate_identity(const PrimeContext& ctx, CharIndex a);

// chi^a(-1) as +1/-1 (equals (-1)^a since chi(-1) = -1).
int character_at_minus_one(const PrimeContext& ctx, CharIndex a);

}  // namespace cyclodet
