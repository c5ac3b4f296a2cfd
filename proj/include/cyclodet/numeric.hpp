#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclodet/bigint.hpp"
#include "cyclodet/cyclo_ring.hpp"
#include "cyclodet/fp_base.hpp"

namespace cyclodet {

/*
 * High-precision complex evaluation of cyclotomic integers and the numeric
 * verification paths (Lemma 2.3 eigenvalue multisets, Theorem 1.2 Gauss
 * determinants at sizes where exact conductor-p(p-1) arithmetic is heavy).
 *
 * Eigenvalue multisets are certified through trace, determinant, and
 * per-value characteristic residuals |det(M - lambda I)| rather than a
 * general eigensolver, so there is no ordering ambiguity to resolve.
 */

struct NumericPolicy {
  unsigned precision_bits = 192;
  unsigned guard_bits = 32;

  // 192 bits for p <= 31, else 4 n log2(p) + 64.
  static NumericPolicy for_case(std::uint64_t p, std::uint64_t n);

  // Residual acceptance threshold 2^{-guard_bits/2}.
  BigFloat threshold() const;
};

// Raises the process default mpfr precision to at least `bits` and restores
// it on destruction; a no-op when the current precision already suffices
// (which keeps nested guards in worker threads from flapping a global).
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned bits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  bool restore_ = false;
  unsigned prev_digits_ = 0;
};

unsigned bits_to_digits10(unsigned bits);

struct Complex {
  BigFloat re, im;

  Complex() : re(0), im(0) {}
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const;
  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigFloat abs2() const { return re * re + im * im; }
  BigFloat abs() const;
};

// Roots-of-unity table: pw[j] = e^{2 pi i j / m}, built at the current
// working precision with one sin/cos per entry.
struct RootTable {
  unsigned m = 1;
  std::vector<Complex> pw;
};

RootTable make_root_table(unsigned m);

// sum_i c_i e^{2 pi i * i / m} at policy precision.
Complex complex_eval(const CycInt& a, const NumericPolicy& policy);

// Nearest integer when both |imag| and the distance to it are below
// 2^{-guard_bits/2}; PrecisionError otherwise.
BigInt round_to_int(const Complex& z, const NumericPolicy& policy);

// LU determinant with partial pivoting on |.|^2.
Complex complex_det(std::vector<std::vector<Complex>> a);

// Numeric G_p(chi^t) from the context's tables.
Complex gauss_sum_numeric(const PrimeContext& ctx, std::uint64_t t, const RootTable& zp,
                          const RootTable& zo);

struct EigenReport {
  std::uint64_t p = 0, k = 0, n = 0;
  std::vector<Complex> claimed;
  std::vector<BigFloat> residuals;
  BigFloat trace_gap, det_gap;
  bool pass = false;
};

// Lemma 2.3: the numbers 1/p - 1 + (n/p) theta_k^{(b)} are exactly the
// eigenvalues of [G_p(chi^{k(i-j)})^{-1}]_{0<=i,j<=n-1}. Entries use the
// closed form 1/G(A) = A(-1) G(conj A) / p (and 1/G(eps) = -1).
EigenReport verify_lemma23(const PrimeContext& ctx, const DivisorPair& pair,
                           const NumericPolicy& policy);

// Numeric determinant of the Gauss-sum matrix, rounded to the integer that
// Theorem 1.2 guarantees.
BigInt gauss_det_numeric(const PrimeContext& ctx, const DivisorPair& pair, bool include_zero,
                         const NumericPolicy& policy);

std::string eigen_report_json(const EigenReport& rep);
std::string format_float(const BigFloat& v);

}  // namespace cyclodet
