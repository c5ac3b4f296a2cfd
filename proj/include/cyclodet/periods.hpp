#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclodet/cyclo_ring.hpp"
#include "cyclodet/fp_base.hpp"

namespace cyclodet {

// theta_k^{(b)} = sum_{x in U_k} zeta_p^{bx}, conductor p. Depends only on
// the coset b*U_k.
CycInt gaussian_period(const PrimeContext& ctx, const DivisorPair& pair, std::uint64_t b);

// P_k(T) = prod_b (T - theta_k^{(b)}) over the n coset representatives,
// with integer coefficients c_0..c_n (constant first), x = c_1, y = c_0.
struct MinPoly {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::vector<BigInt> coeffs;
  BigInt x;
  BigInt y;
};

MinPoly min_poly(const PrimeContext& ctx, const DivisorPair& pair);

// y == (-1)^n k^n (mod p) and y == k^2 x (mod p).
bool check_congruence(const MinPoly& mp);

// x_p(k) = (-1)^{n-1} sum_b prod_{c != b} theta_k^{(c)}, an independent
// route to the linear coefficient.
BigInt x_via_proof_formula(const PrimeContext& ctx, const DivisorPair& pair);
// y_p(k) = (-1)^n prod_b theta_k^{(b)}.
BigInt y_via_proof_formula(const PrimeContext& ctx, const DivisorPair& pair);

// {"p":..., "k":..., "n":..., "coeffs":["c0",...], "x":"...", "y":"..."}
std::string minpoly_json(const MinPoly& mp);

}  // namespace cyclodet
