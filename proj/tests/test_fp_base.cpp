#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <filesystem>
#include <set>

#include "cyclodet/bigint.hpp"
#include "cyclodet/fp_base.hpp"

using namespace cyclodet;

TEST_CASE("prime context small cases") {
  // oracle: direct exponentiation 2^t mod 5 gives 1,2,4,3
  PrimeContext c5 = make_prime_context(5);
  CHECK(c5.g == 2);
  CHECK(c5.ind[1] == 0);
  CHECK(c5.ind[2] == 1);
  CHECK(c5.ind[4] == 2);
  CHECK(c5.ind[3] == 3);

  PrimeContext c3 = make_prime_context(3);
  CHECK(c3.g == 2);
  CHECK(c3.ind[1] == 0);
  CHECK(c3.ind[2] == 1);

  CHECK_THROWS_AS(make_prime_context(9), ParameterError);
  CHECK_THROWS_AS(make_prime_context(2), ParameterError);
  CHECK_THROWS_AS(make_prime_context(5, 4), ParameterError);  // 4 has order 2
}

TEST_CASE("generator generates all of F_p^x") {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 61ULL, 199ULL}) {
    PrimeContext ctx = make_prime_context(p);
    std::set<std::uint64_t> seen;
    std::uint64_t x = 1;
    for (std::uint64_t t = 0; t + 1 < p; ++t) {
      seen.insert(x);
      CHECK(ctx.ind[x] == t);
      x = x * ctx.g % p;
    }
    CHECK(seen.size() == p - 1);
  }
}

TEST_CASE("index table is a discrete logarithm") {
  // full check for p <= 100
  for (std::uint64_t p = 3; p <= 100; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeContext ctx = make_prime_context(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      for (std::uint64_t b = 1; b < p; ++b) {
        CHECK((ctx.ind[a] + ctx.ind[b]) % (p - 1) == ctx.ind[a * b % p]);
      }
    }
  }
  // sampled above 100
  PrimeContext big = make_prime_context(199);
  for (std::uint64_t a = 1; a < 199; a += 7) {
    for (std::uint64_t b = 3; b < 199; b += 11) {
      CHECK((big.ind[a] + big.ind[b]) % 198 == big.ind[a * b % 199]);
    }
  }
}

TEST_CASE("unit subgroup") {
  PrimeContext c5 = make_prime_context(5);
  CHECK(unit_subgroup(c5, make_divisor_pair(c5, 2)) == std::vector<std::uint64_t>{1, 4});

  PrimeContext c7 = make_prime_context(7);
  CHECK(unit_subgroup(c7, make_divisor_pair(c7, 3)) == std::vector<std::uint64_t>{1, 2, 4});
  CHECK(unit_subgroup(c7, make_divisor_pair(c7, 1)) == std::vector<std::uint64_t>{1});

  CHECK_THROWS_AS(make_divisor_pair(c7, 4), ParameterError);
  CHECK_THROWS_AS(make_divisor_pair(c7, 6), ParameterError);  // k = p-1 excluded

  // oracle: enumerate x with x^k = 1 directly
  for (std::uint64_t p : {13ULL, 31ULL, 61ULL}) {
    PrimeContext ctx = make_prime_context(p);
    for (std::uint64_t k : valid_k_values(p)) {
      std::vector<std::uint64_t> brute;
      for (std::uint64_t x = 1; x < p; ++x) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 0; i < k; ++i) v = v * x % p;
        if (v == 1) brute.push_back(x);
      }
      CHECK(unit_subgroup(ctx, make_divisor_pair(ctx, k)) == brute);
    }
  }
}

TEST_CASE("subgroup axioms by enumeration, p <= 200") {
  for (std::uint64_t p = 3; p <= 200; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeContext ctx = make_prime_context(p);
    for (std::uint64_t k : valid_k_values(p)) {
      auto u = unit_subgroup(ctx, make_divisor_pair(ctx, k));
      std::set<std::uint64_t> s(u.begin(), u.end());
      REQUIRE(s.size() == k);
      for (std::uint64_t a : u) {
        for (std::uint64_t b : u) {
          if (!s.count(a * b % p)) FAIL("not closed under multiplication");
        }
        if (!s.count(powmod_u64(a, p - 2, p))) FAIL("not closed under inversion");
      }
    }
  }
}

TEST_CASE("coset representatives tile F_p^x") {
  PrimeContext c5 = make_prime_context(5);
  CHECK(coset_reps(c5, make_divisor_pair(c5, 2)) == std::vector<std::uint64_t>{1, 2});

  PrimeContext c7 = make_prime_context(7);
  CHECK(c7.g == 3);
  CHECK(coset_reps(c7, make_divisor_pair(c7, 3)) == std::vector<std::uint64_t>{1, 3});

  PrimeContext c3 = make_prime_context(3);
  CHECK(coset_reps(c3, make_divisor_pair(c3, 1)) == std::vector<std::uint64_t>{1, 2});

  for (std::uint64_t p : {7ULL, 31ULL, 101ULL}) {
    PrimeContext ctx = make_prime_context(p);
    for (std::uint64_t k : valid_k_values(p)) {
      DivisorPair pair = make_divisor_pair(ctx, k);
      auto reps = coset_reps(ctx, pair);
      auto u = unit_subgroup(ctx, pair);
      std::set<std::uint64_t> covered;
      for (std::uint64_t r : reps) {
        for (std::uint64_t x : u) covered.insert(r * x % p);
      }
      CHECK(covered.size() == p - 1);  // partition: n*k elements, no overlap
    }
  }
}

TEST_CASE("context cache round trip") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "cyclodet-cache-test";
  std::filesystem::remove_all(dir);
  for (std::uint64_t p : {5ULL, 61ULL}) {
    PrimeContext fresh = make_prime_context(p);
    PrimeContext first = make_prime_context_cached(p, dir.string());
    PrimeContext second = make_prime_context_cached(p, dir.string());  // from disk
    CHECK(first.g == fresh.g);
    CHECK(first.ind == fresh.ind);
    CHECK(second.g == fresh.g);
    CHECK(second.ind == fresh.ind);
    CHECK(second.pw == fresh.pw);
  }
  // A corrupted cache entry must fall back to recomputation.
  {
    std::ofstream bad(dir / "pctx-7.json");
    bad << "{\"p\": 7, \"g\": 5, \"ind\": [0,0,0,0,0,0,0]}";
  }
  PrimeContext c7 = make_prime_context_cached(7, dir.string());
  CHECK(c7.g == 3);
  CHECK(c7.ind == make_prime_context(7).ind);
  std::filesystem::remove_all(dir);
}

TEST_CASE("extension field construction") {
  // oracle: exhaustive irreducibility / order checks at tiny sizes
  ExtFieldContext f9 = make_ext_context(3, 2);
  CHECK(f9.q == 9);
  CHECK(f9.modulus.size() == 3);
  std::uint64_t g = f9.generator;
  std::set<std::uint64_t> orbit;
  std::uint64_t acc = 1;
  for (int i = 0; i < 8; ++i) {
    acc = f9.mul(acc, g);
    orbit.insert(acc);
  }
  CHECK(orbit.size() == 8);
  CHECK(acc == 1);

  ExtFieldContext f8 = make_ext_context(2, 3);
  CHECK(f8.q == 8);
  acc = 1;
  orbit.clear();
  for (int i = 0; i < 7; ++i) {
    acc = f8.mul(acc, f8.generator);
    orbit.insert(acc);
  }
  CHECK(orbit.size() == 7);

  // m = 1 degenerates to F_p with the identity encoding
  ExtFieldContext f5 = make_ext_context(5, 1);
  CHECK(f5.q == 5);
  CHECK(f5.mul(2, 4) == 3);
  CHECK(f5.add(2, 4) == 1);

  CHECK_THROWS_AS(make_ext_context(4, 1), ParameterError);
  CHECK_THROWS_AS(make_ext_context(2, 17), ParameterError);  // cap exceeded
}

TEST_CASE("trace properties") {
  ExtFieldContext f9 = make_ext_context(3, 2);
  CHECK(trace(f9, 0) == 0);
  CHECK(trace(f9, 1) == 2);  // m mod p

  ExtFieldContext f25 = make_ext_context(5, 2);
  CHECK(trace(f25, 1) == 2);
  for (std::uint64_t a = 0; a < 25; ++a) {
    for (std::uint64_t b = 0; b < 25; ++b) {
      CHECK((trace(f25, a) + trace(f25, b)) % 5 == trace(f25, f25.add(a, b)));
    }
  }
}

TEST_CASE("frobenius is an automorphism fixing exactly F_p") {
  // full pair check at small q, fixed-point count for every q <= 2^12
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {3, 2}, {5, 2}, {3, 3}, {2, 5}, {7, 2}, {2, 8}, {13, 2}, {3, 7}, {61, 2}, {5, 5}}) {
    ExtFieldContext f = make_ext_context(p, m);
    REQUIRE(f.q <= (1ULL << 12));
    std::uint64_t fixed = 0;
    const std::uint64_t stride = f.q <= 256 ? 1 : 17;
    for (std::uint64_t a = 0; a < f.q; ++a) {
      std::uint64_t fa = f.pow(a, p);
      if (fa == a) ++fixed;
      for (std::uint64_t b = a % stride; b < f.q; b += stride) {
        CHECK(f.pow(f.add(a, b), p) == f.add(fa, f.pow(b, p)));
        CHECK(f.pow(f.mul(a, b), p) == f.mul(fa, f.pow(b, p)));
      }
    }
    CHECK(fixed == p);
  }
}
