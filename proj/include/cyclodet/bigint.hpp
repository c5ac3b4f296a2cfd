#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <vector>

namespace cyclodet {

using BigInt = boost::multiprecision::mpz_int;
using BigFloat = boost::multiprecision::mpfr_float;  // variable precision

// b^e for machine-word exponents.
inline BigInt pow_int(const BigInt& b, std::uint64_t e) {
  return boost::multiprecision::pow(b, static_cast<unsigned>(e));
}

inline bool is_even(const BigInt& v) { return (v & 1) == 0; }

// (-1)^e as a BigInt.
inline BigInt sign_pow(std::uint64_t e) { return (e & 1) ? BigInt(-1) : BigInt(1); }

// Least s with s*s >= v (v >= 0).
BigInt ceil_sqrt(const BigInt& v);

// Nonnegative remainder of v mod ell, ell < 2^63.
std::uint64_t mod_u64(const BigInt& v, std::uint64_t ell);

// 64-bit modular arithmetic (modulus < 2^63).
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n);

// All divisors, ascending.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi_u64(std::uint64_t n);

}  // namespace cyclodet
