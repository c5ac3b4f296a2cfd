#include <doctest.h>

#include "cyclodet/sums.hpp"

using namespace cyclodet;

TEST_CASE("gauss sums, small cases") {
  // p=3: G(chi)^2 = -3 for the quadratic character
  PrimeContext c3 = make_prime_context(3);
  CycInt g = gauss_sum(c3, make_char(c3, 1));
  CHECK(as_integer(g * g) == -3);

  // trivial character: G(eps) = -1
  CHECK(gauss_sum(c3, make_char(c3, 0)) == CycInt::from_integer(6, -1));
  PrimeContext c5 = make_prime_context(5);
  CHECK(gauss_sum(c5, make_char(c5, 0)) == CycInt::from_integer(20, -1));

  // p=5: the quadratic character is chi^2 and G^2 = 5 (p == 1 mod 4)
  CycInt g2 = gauss_sum(c5, make_char(c5, 2));
  CHECK(as_integer(g2 * g2) == 5);
}

TEST_CASE("jacobi sums, small cases") {
  PrimeContext c3 = make_prime_context(3);
  CHECK(jacobi_sum(c3, make_char(c3, 1), make_char(c3, 1)) == CycInt::from_integer(2, 1));

  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL}) {
    PrimeContext ctx = make_prime_context(p);
    CHECK(jacobi_sum(ctx, make_char(ctx, 0), make_char(ctx, 0)) ==
          CycInt::from_integer(static_cast<unsigned>(p - 1), BigInt(p - 2)));
  }

  PrimeContext c5 = make_prime_context(5);
  CHECK(jacobi_sum(c5, make_char(c5, 2), make_char(c5, 2)) == CycInt::from_integer(4, -1));
}

TEST_CASE("matrix X") {
  PrimeContext c5 = make_prime_context(5);
  CycMatrix x52 = jacobi_matrix_x(c5, make_divisor_pair(c5, 2));
  CHECK(x52.rows() == 1);
  CHECK(x52.at(0, 0) == CycInt::from_integer(4, -1));

  PrimeContext c7 = make_prime_context(7);
  CycMatrix x73 = jacobi_matrix_x(c7, make_divisor_pair(c7, 3));
  CHECK(x73.at(0, 0) == CycInt::from_integer(6, 1));

  PrimeContext c3 = make_prime_context(3);
  CycMatrix x31 = jacobi_matrix_x(c3, make_divisor_pair(c3, 1));
  CHECK(x31.at(0, 0) == CycInt::from_integer(2, 1));
}

TEST_CASE("matrix Y") {
  PrimeContext c5 = make_prime_context(5);
  CycMatrix y = jacobi_matrix_y(c5, make_divisor_pair(c5, 2));
  REQUIRE(y.rows() == 2);
  CHECK(y.at(0, 0) == CycInt::from_integer(4, 3));
  CHECK(y.at(0, 1) == CycInt::from_integer(4, -1));
  CHECK(y.at(1, 0) == CycInt::from_integer(4, -1));
  CHECK(y.at(1, 1) == CycInt::from_integer(4, -1));

  // row 0: J(eps, eps) = p-2, J(eps, chi^kj) = -1
  for (std::uint64_t p : {7ULL, 13ULL, 31ULL}) {
    PrimeContext ctx = make_prime_context(p);
    for (std::uint64_t k : valid_k_values(p)) {
      CycMatrix m = jacobi_matrix_y(ctx, make_divisor_pair(ctx, k));
      unsigned o = static_cast<unsigned>(p - 1);
      CHECK(m.at(0, 0) == CycInt::from_integer(o, BigInt(p - 2)));
      for (std::size_t j = 1; j < m.cols(); ++j) {
        CHECK(m.at(0, j) == CycInt::from_integer(o, -1));
      }
    }
  }
}

TEST_CASE("jacobi symmetry J(A,B) = J(B,A), p <= 31") {
  for (std::uint64_t p = 3; p <= 31; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeContext ctx = make_prime_context(p);
    for (std::uint64_t a = 0; a < p - 1; ++a) {
      for (std::uint64_t b = a; b < p - 1; ++b) {
        CHECK(jacobi_sum(ctx, CharIndex{a}, CharIndex{b}) ==
              jacobi_sum(ctx, CharIndex{b}, CharIndex{a}));
      }
    }
  }
}

TEST_CASE("|J|^2 = p for nondegenerate pairs, p <= 31") {
  for (std::uint64_t p = 3; p <= 31; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeContext ctx = make_prime_context(p);
    unsigned o = static_cast<unsigned>(p - 1);
    for (std::uint64_t a = 1; a < p - 1; ++a) {
      for (std::uint64_t b = 1; b < p - 1; ++b) {
        if ((a + b) % (p - 1) == 0) continue;
        CycInt j = jacobi_sum(ctx, CharIndex{a}, CharIndex{b});
        CHECK(j * galois_apply(-1, j) == CycInt::from_integer(o, BigInt(p)));
      }
    }
  }
}

TEST_CASE("gauss matrix shape and symmetry") {
  PrimeContext c3 = make_prime_context(3);
  CycMatrix g = gauss_matrix(c3, make_divisor_pair(c3, 1), true);
  REQUIRE(g.rows() == 2);
  CHECK(g.at(0, 0) == CycInt::from_integer(6, -1));
  CHECK(g.at(1, 1) == CycInt::from_integer(6, -1));  // G(chi^2) = G(eps)
  CHECK(g.at(0, 1) == g.at(1, 0));
  CHECK(g.at(0, 1) == gauss_sum(c3, make_char(c3, 1)));

  PrimeContext c5 = make_prime_context(5);
  CycMatrix ge = gauss_matrix(c5, make_divisor_pair(c5, 2), false);
  REQUIRE(ge.rows() == 1);
  // k(i+j) = 4 == 0 (mod 4): the entry is G(eps) = -1
  CHECK(ge.at(0, 0) == CycInt::from_integer(20, -1));
}

TEST_CASE("gauss-jacobi relation (lemma 2.1 i)") {
  PrimeContext c5 = make_prime_context(5);
  CHECK(check_gauss_jacobi_relation(c5, CharIndex{1}, CharIndex{1}));
  CHECK(check_gauss_jacobi_relation(c5, CharIndex{1}, CharIndex{3}));  // AB = eps branch
  CHECK_THROWS_AS(check_gauss_jacobi_relation(c5, CharIndex{0}, CharIndex{0}), ParameterError);

  PrimeContext c7 = make_prime_context(7);
  for (std::uint64_t a = 0; a < 6; ++a) {
    for (std::uint64_t b = 0; b < 6; ++b) {
      if (a == 0 && b == 0) continue;
      CHECK(check_gauss_jacobi_relation(c7, CharIndex{a}, CharIndex{b}));
    }
  }
}

TEST_CASE("G(A) G(conj A) = p A(-1) (lemma 2.1 ii), p <= 19") {
  for (std::uint64_t p = 3; p <= 19; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeContext ctx = make_prime_context(p);
    for (std::uint64_t a = 1; a < p - 1; ++a) {
      CHECK(check_gauss_conjugate_identity(ctx, CharIndex{a}));
    }
  }
}

TEST_CASE("gauss-product factorization p J = (-1)^{ki+kj} G G G") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    PrimeContext ctx = make_prime_context(p);
    const unsigned M = static_cast<unsigned>(p * (p - 1));
    for (std::uint64_t k : valid_k_values(p)) {
      DivisorPair pair = make_divisor_pair(ctx, k);
      for (std::uint64_t i = 1; i <= pair.n - 1; ++i) {
        for (std::uint64_t j = 1; j <= pair.n - 1; ++j) {
          CycInt lhs = CycInt::from_integer(M, BigInt(p)) *
                       embed(jacobi_sum(ctx, make_char(ctx, static_cast<long long>(k * i)),
                                        make_char(ctx, static_cast<long long>(k * j))),
                             M);
          CycInt rhs = gauss_sum(ctx, make_char(ctx, static_cast<long long>(k * i))) *
                       gauss_sum(ctx, make_char(ctx, static_cast<long long>(k * j))) *
                       gauss_sum(ctx, make_char(ctx, -static_cast<long long>(k * (i + j))));
          if ((k * (i + j)) % 2 == 1) rhs = -rhs;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}
