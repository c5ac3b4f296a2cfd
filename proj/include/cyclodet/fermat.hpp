#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclodet/cyclo_ring.hpp"
#include "cyclodet/fp_base.hpp"
#include "cyclodet/numeric.hpp"

namespace cyclodet {

// Number of projective F_{p^m}-points on the Fermat curve x^n + y^n = z^n.
struct CurveCount {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t count = 0;
};

// Exact count by chart enumeration (z = 1, then z = 0 with y = 1; the
// remaining chart z = y = 0, x = 1 has no solutions). Requires n | p-1 and
// m in {1, 2}.
CurveCount count_points(std::uint64_t p, std::uint64_t n, std::uint64_t m,
                        std::uint64_t cap = kDefaultFieldCap);

// H(T) = prod_{1<=i,j<=n-1, i+j != 0 mod n} (1 + J_p(chi^{ki}, chi^{kj}) T),
// expanded exactly over Z[zeta_{p-1}] with every coefficient extracted to Z.
struct HPoly {
  std::vector<BigInt> coeffs;  // constant first; H(0) = 1

  std::size_t degree() const { return coeffs.size() - 1; }
};

HPoly h_poly(const PrimeContext& ctx, const DivisorPair& pair);

// Zeta consistency: with H(T) = prod (1 - alpha_i T), Newton's identities on
// H's coefficients give s_m = sum alpha_i^m, and N(p^m) must equal
// p^m + 1 - s_m for m = 1, 2.
bool zeta_consistency(const HPoly& hp, const CurveCount& c1, const CurveCount& c2,
                      std::string* diag = nullptr);

// Full per-curve record: counts over F_p and F_{p^2}, H, and the check.
struct FermatCurveReport {
  std::uint64_t p = 0, n = 0, k = 0;
  CurveCount n1, n2;
  HPoly h;
  bool pass = false;
};

// n = 1 and n = 2 have H = 1 (empty product); n >= 3 goes through h_poly.
FermatCurveReport curve_report(std::uint64_t p, std::uint64_t n,
                               std::uint64_t cap = kDefaultFieldCap);

// Exploratory identity over F_q: the exact determinant
// det[J_q(chi^{ki}, chi^{kj})]_{1<=i,j<=n-1} against the period-sum side
// (-1)^{(n-1)((k+1)n-2)/2} n^{n-2} sum_b prod_{c != b} mu_k^{(c)} with
// mu_k^{(c)} = sum_{y in U_k(F_q)} zeta_p^{Tr(cy)}. The two sides live in
// different cyclotomic fields, so they are compared numerically.
struct ExtDetReport {
  std::uint64_t q = 0, k = 0, n = 0;
  Complex lhs, rhs;
  BigFloat gap;
  bool pass = false;
};

ExtDetReport ext_jacobi_det_check(const ExtFieldContext& ext, std::uint64_t k,
                                  const NumericPolicy& policy, int pass_log2_threshold = -40);

std::string fermat_report_json(const FermatCurveReport& rep);
std::string ext_report_json(const ExtDetReport& rep);

}  // namespace cyclodet
