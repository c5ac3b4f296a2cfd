#include <doctest.h>

#include <random>
#include <set>

#include "cyclodet/cyclo_ring.hpp"

using namespace cyclodet;

namespace {

IntPoly make_poly(std::initializer_list<long> cs) {
  IntPoly f;
  for (long c : cs) f.c.emplace_back(c);
  poly_normalize(f);
  return f;
}

CycInt random_cyc(unsigned m, std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> d(-span, span);
  std::vector<BigInt> raw(euler_phi(m));
  for (auto& c : raw) c = d(rng);
  return CycInt::from_coeffs(m, std::move(raw));
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == make_poly({-1, 1}));
  CHECK(cyclotomic_poly(5) == make_poly({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(6) == make_poly({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == make_poly({1, 0, -1, 0, 1}));
  // Phi_m(zeta_m) = 0 for all m <= 60
  for (unsigned m = 1; m <= 60; ++m) {
    CHECK(eval_poly(cyclotomic_poly(m), zeta_pow(m, 1)).is_zero());
  }
}

TEST_CASE("zeta powers reduce canonically") {
  CHECK(zeta_pow(5, 5) == CycInt::from_integer(5, 1));
  CHECK(zeta_pow(5, 4) == CycInt::from_coeffs(5, {BigInt(-1), BigInt(-1), BigInt(-1), BigInt(-1)}));
  CHECK(zeta_pow(6, 3) == CycInt::from_integer(6, -1));
  CHECK(zeta_pow(7, -1) == zeta_pow(7, 6));
}

TEST_CASE("ring operations") {
  // (zeta + zeta^4)(zeta^2 + zeta^3) = -1 in Z[zeta_5]
  CycInt a = zeta_pow(5, 1) + zeta_pow(5, 4);
  CycInt b = zeta_pow(5, 2) + zeta_pow(5, 3);
  CHECK(a * b == CycInt::from_integer(5, -1));

  CycInt z = a + (-a);
  CHECK(z.is_zero());

  CHECK_THROWS_AS(zeta_pow(5, 1) + zeta_pow(7, 1), ParameterError);

  std::mt19937_64 rng(42);
  for (unsigned m : {5u, 6u, 12u, 20u, 30u}) {
    for (int i = 0; i < 1000; ++i) {
      CycInt x = random_cyc(m, rng), y = random_cyc(m, rng), w = random_cyc(m, rng);
      CHECK(x * y == y * x);
      CHECK((x * y) * w == x * (y * w));
      CHECK(x * (y + w) == x * y + x * w);
    }
  }
}

TEST_CASE("galois action") {
  CycInt theta = zeta_pow(5, 1) + zeta_pow(5, 4);
  CHECK(galois_apply(1, theta) == theta);
  CHECK(galois_apply(2, theta) == zeta_pow(5, 2) + zeta_pow(5, 3));
  CHECK_THROWS_AS(galois_apply(5, theta), ParameterError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    CycInt x = random_cyc(12, rng), y = random_cyc(12, rng);
    for (long long s : {5, 7, 11}) {
      CHECK(galois_apply(s, x * y) == galois_apply(s, x) * galois_apply(s, y));
      CHECK(galois_apply(s, x + y) == galois_apply(s, x) + galois_apply(s, y));
    }
  }

  // orbit of zeta_m under the full Galois group = all primitive m-th roots
  for (unsigned m : {5u, 8u, 12u}) {
    std::set<std::vector<BigInt>> orbit;
    for (unsigned s = 1; s < m; ++s) {
      if (gcd_u64(s, m) != 1) continue;
      orbit.insert(galois_apply(s, zeta_pow(m, 1)).coeffs());
    }
    CHECK(orbit.size() == euler_phi(m));
  }
}

TEST_CASE("conductor embedding") {
  CHECK(embed(CycInt::from_integer(3, 7), 12) == CycInt::from_integer(12, 7));
  // zeta_3 -> zeta_6^2 = zeta_6 - 1
  CHECK(embed(zeta_pow(3, 1), 6) == zeta_pow(6, 1) - CycInt::from_integer(6, 1));
  CHECK_THROWS_AS(embed(zeta_pow(5, 1), 12), ParameterError);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    CycInt x = random_cyc(6, rng), y = random_cyc(6, rng);
    CHECK(embed(x * y, 30) == embed(x, 30) * embed(y, 30));
    CHECK(embed(x + y, 30) == embed(x, 30) + embed(y, 30));
  }
}

TEST_CASE("exact division") {
  CycInt b = CycInt::from_coeffs(5, {BigInt(2), BigInt(0), BigInt(3)});  // 2 + 3 zeta^2
  CycInt a = CycInt::from_coeffs(5, {BigInt(1), BigInt(1)});             // 1 + zeta
  CHECK(exact_div(a * b, b) == a);
  CHECK(exact_div(CycInt::zero(5), b).is_zero());
  CHECK_THROWS_AS(exact_div(a, CycInt::zero(5)), ParameterError);
  // 1 + zeta is not divisible by 2 in Z[zeta_5]
  CHECK_THROWS_AS(exact_div(a, CycInt::from_integer(5, 2)), IntegrityError);

  std::mt19937_64 rng(13);
  for (unsigned m : {5u, 12u, 30u}) {
    for (int i = 0; i < 100; ++i) {
      CycInt x = random_cyc(m, rng);
      CycInt y = random_cyc(m, rng);
      if (y.is_zero()) continue;
      CHECK(exact_div(x * y, y) == x);
    }
  }
}

TEST_CASE("integer extraction") {
  CycInt s = zeta_pow(5, 1) + zeta_pow(5, 2) + zeta_pow(5, 3) + zeta_pow(5, 4);
  CHECK(as_integer(s) == -1);
  CHECK(as_integer(CycInt::from_integer(12, 42)) == 42);
  CHECK_THROWS_AS(as_integer(zeta_pow(5, 1)), IntegrityError);
  CHECK(!try_as_integer(zeta_pow(5, 1)).has_value());
}

TEST_CASE("debug json") {
  CHECK(debug_json(CycInt::from_integer(3, -2)) == "{\"m\": 3, \"coeffs\": [\"-2\", \"0\"]}");
}
