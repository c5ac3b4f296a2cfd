#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclodet/bigint.hpp"
#include "cyclodet/errors.hpp"

namespace cyclodet {

/*
 * Exact arithmetic in Z[zeta_m].
 *
 * A CycInt is the canonical residue of an integer polynomial in zeta_m
 * modulo the m-th cyclotomic polynomial Phi_m: a coefficient vector of
 * length exactly phi(m). Canonicality makes equality a vector compare and
 * integer extraction a triviality; the price is one reduction per product.
 *
 * Values are immutable and all operations are pure, so CycInt is safe to
 * share and move across threads.
 */

// Integer polynomial, constant term first. The zero polynomial is the empty
// vector; otherwise the trailing coefficient is nonzero.
struct IntPoly {
  std::vector<BigInt> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  const BigInt& operator[](std::size_t i) const { return c[i]; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

void poly_normalize(IntPoly& f);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// Exact division; throws IntegrityError if b does not divide a over Z.
IntPoly poly_divexact(const IntPoly& a, const IntPoly& b);

unsigned euler_phi(unsigned m);

// Phi_m, computed as (x^m - 1) / prod_{d|m, d<m} Phi_d and memoized.
const IntPoly& cyclotomic_poly(unsigned m);

class CycInt {
 public:
  CycInt() : m_(1), c_(1, BigInt(0)) {}

  static CycInt zero(unsigned m);
  static CycInt from_integer(unsigned m, BigInt v);
  // Reduces an arbitrary-length coefficient vector (exponent i holds the
  // coefficient of zeta_m^i) modulo Phi_m.
  static CycInt from_coeffs(unsigned m, std::vector<BigInt> raw);

  unsigned conductor() const { return m_; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);
  friend bool operator==(const CycInt&, const CycInt&) = default;

 private:
  CycInt(unsigned m, std::vector<BigInt> canonical) : m_(m), c_(std::move(canonical)) {}

  unsigned m_;
  std::vector<BigInt> c_;
};

// zeta_m^e (e may be negative; reduced mod m).
CycInt zeta_pow(unsigned m, long long e);

// The automorphism zeta_m -> zeta_m^s; requires gcd(s, m) = 1.
CycInt galois_apply(long long s, const CycInt& a);

// Ring embedding Z[zeta_m] -> Z[zeta_M] via zeta_m -> zeta_M^{M/m}; m | M.
CycInt embed(const CycInt& a, unsigned M);

// Precomputed data for repeated exact division by the same divisor:
// cofactor = prod_{s != 1, gcd(s,m)=1} sigma_s(b) and norm = b * cofactor,
// a nonzero rational integer.
struct ExactDivisor {
  CycInt cofactor;
  BigInt norm;
};

ExactDivisor make_exact_divisor(const CycInt& b);

// Quotient a / b when b exactly divides a in Z[zeta_m]; a coefficient that
// fails to divide signals a logic bug upstream (IntegrityError).
CycInt exact_div(const CycInt& a, const CycInt& b);
CycInt exact_div(const CycInt& a, const ExactDivisor& d);

// c_0 when all higher coefficients vanish; IntegrityError otherwise.
BigInt as_integer(const CycInt& a);
std::optional<BigInt> try_as_integer(const CycInt& a);

// Horner evaluation of an integer polynomial at a CycInt.
CycInt eval_poly(const IntPoly& f, const CycInt& x);

// Debug form {"m": m, "coeffs": ["...", ...]} with decimal-string coefficients.
std::string debug_json(const CycInt& a);

}  // namespace cyclodet
