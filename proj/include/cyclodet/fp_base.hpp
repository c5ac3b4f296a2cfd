#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclodet/errors.hpp"

namespace cyclodet {

// Ambient structure of F_p^x: a generator g and the full discrete-log table
// ind, with ind[g^t mod p] = t for 0 <= t <= p-2. Immutable after
// construction; safe to share across threads.
struct PrimeContext {
  std::uint64_t p = 0;
  std::uint64_t g = 0;
  std::vector<std::uint32_t> ind;  // size p; ind[0] unused
  std::vector<std::uint32_t> pw;   // pw[t] = g^t mod p, size p-1

  std::uint32_t index_of(std::uint64_t x) const { return ind[x]; }
  std::uint64_t power_of_g(std::uint64_t t) const { return pw[t % (p - 1)]; }
};

// Least-primitive-root context for an odd prime p.
PrimeContext make_prime_context(std::uint64_t p);
// Same with an explicit generator (must be a primitive root of p).
PrimeContext make_prime_context(std::uint64_t p, std::uint64_t generator);
// Cache-aware variant: loads <dir>/pctx-<p>.json when valid, else computes
// and writes it. Output is bit-identical to make_prime_context(p).
PrimeContext make_prime_context_cached(std::uint64_t p, const std::string& dir);

std::uint64_t least_primitive_root(std::uint64_t p);

// k*n = p-1 with 1 <= k < p-1 (so n >= 2).
struct DivisorPair {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
};

DivisorPair make_divisor_pair(const PrimeContext& ctx, std::uint64_t k);
// Every valid k for p, ascending (divisors of p-1 except p-1 itself).
std::vector<std::uint64_t> valid_k_values(std::uint64_t p);

// U_k = {x in F_p^x : x^k = 1}, sorted ascending.
std::vector<std::uint64_t> unit_subgroup(const PrimeContext& ctx, const DivisorPair& pair);
// Canonical coset representatives g^0, g^1, ..., g^{n-1} of F_p^x / U_k,
// in exponent order.
std::vector<std::uint64_t> coset_reps(const PrimeContext& ctx, const DivisorPair& pair);

// F_q with q = p^m, represented as F_p[x]/(f) for the lexicographically
// least monic irreducible f of degree m. Elements are encoded as
// sum a_i p^i for the residue sum a_i x^i.
struct ExtFieldContext {
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  std::uint64_t q = 0;
  std::vector<std::uint32_t> modulus;   // coefficients c_0..c_m, c_m = 1
  std::uint64_t generator = 0;          // least multiplicative generator
  std::vector<std::uint32_t> dlog;      // size q, dlog[enc] for enc != 0
  std::vector<std::uint32_t> expo;      // size q-1, expo[t] = generator^t
  std::vector<std::uint32_t> trace_tbl; // size q, values in F_p

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
};

constexpr std::uint64_t kDefaultFieldCap = 1ULL << 16;

ExtFieldContext make_ext_context(std::uint64_t p, std::uint64_t m,
                                 std::uint64_t cap = kDefaultFieldCap);

// Tr_{F_q/F_p}(a) = a + a^p + ... + a^{p^{m-1}}, returned in F_p.
std::uint64_t trace(const ExtFieldContext& ext, std::uint64_t a);

}  // namespace cyclodet
