#include "cyclodet/sums.hpp"

namespace cyclodet {

CharIndex make_char(const PrimeContext& ctx, long long j) {
  long long o = static_cast<long long>(ctx.p - 1);
  long long r = j % o;
  if (r < 0) r += o;
  return CharIndex{static_cast<std::uint64_t>(r)};
}

CycInt gauss_sum(const PrimeContext& ctx, CharIndex a) {
  const std::uint64_t p = ctx.p;
  const std::uint64_t o = p - 1;
  if (p * o > (1ULL << 20)) {
    throw ParameterError("conductor p(p-1) too large for exact Gauss-sum arithmetic; "
                         "use the numeric engine");
  }
  const unsigned M = static_cast<unsigned>(p * o);
  std::vector<BigInt> raw(M, BigInt(0));
  for (std::uint64_t x = 1; x < p; ++x) {
    // chi^a(x) * zeta_p^x = zeta_M^{p * (a*ind(x) mod o) + (p-1) * x}
    std::uint64_t e = (p * ((a.j * ctx.ind[x]) % o) + o * x) % M;
    raw[e] += 1;
  }
  return CycInt::from_coeffs(M, std::move(raw));
}

CycInt jacobi_sum(const PrimeContext& ctx, CharIndex a, CharIndex b) {
  const std::uint64_t p = ctx.p;
  const std::uint64_t o = p - 1;
  std::vector<BigInt> raw(o, BigInt(0));
  // x = 0 and x = 1 contribute nothing: one factor is A(0) = 0.
  for (std::uint64_t x = 2; x < p; ++x) {
    std::uint64_t e = (a.j * ctx.ind[x] + b.j * ctx.ind[p + 1 - x]) % o;
    raw[e] += 1;
  }
  return CycInt::from_coeffs(static_cast<unsigned>(o), std::move(raw));
}

CycMatrix jacobi_matrix_x(const PrimeContext& ctx, const DivisorPair& pair) {
  if (pair.k * pair.n != ctx.p - 1) throw ParameterError("divisor pair does not match context");
  const std::size_t d = pair.n - 1;
  CycMatrix out(d, d, static_cast<unsigned>(ctx.p - 1));
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i; j <= d; ++j) {
      CycInt v = jacobi_sum(ctx, make_char(ctx, static_cast<long long>(pair.k * i)),
                            make_char(ctx, static_cast<long long>(pair.k * j)));
      if (i != j) out.set(j - 1, i - 1, v);
      out.set(i - 1, j - 1, std::move(v));
    }
  }
  return out;
}

CycMatrix jacobi_matrix_y(const PrimeContext& ctx, const DivisorPair& pair) {
  if (pair.k * pair.n != ctx.p - 1) throw ParameterError("divisor pair does not match context");
  const std::size_t d = pair.n;
  CycMatrix out(d, d, static_cast<unsigned>(ctx.p - 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      CycInt v = jacobi_sum(ctx, make_char(ctx, static_cast<long long>(pair.k * i)),
                            make_char(ctx, static_cast<long long>(pair.k * j)));
      if (i != j) out.set(j, i, v);
      out.set(i, j, std::move(v));
    }
  }
  return out;
}

CycMatrix gauss_matrix(const PrimeContext& ctx, const DivisorPair& pair, bool include_zero) {
  if (pair.k * pair.n != ctx.p - 1) throw ParameterError("divisor pair does not match context");
  const std::size_t lo = include_zero ? 0 : 1;
  const std::size_t d = pair.n - (include_zero ? 0 : 1);
  const unsigned M = static_cast<unsigned>(ctx.p * (ctx.p - 1));
  // Entry (i,j) depends only on i+j: 2n-1 distinct Gauss sums at most.
  std::vector<CycInt> by_sum;
  by_sum.reserve(2 * pair.n);
  for (std::size_t s = 2 * lo; s <= 2 * (lo + d - 1); ++s) {
    by_sum.push_back(gauss_sum(ctx, make_char(ctx, static_cast<long long>(pair.k * s))));
  }
  CycMatrix out(d, d, M);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out.set(i, j, by_sum[i + j]);
    }
  }
  return out;
}

int character_at_minus_one(const PrimeContext&, CharIndex a) {
  // chi(-1) = zeta_{p-1}^{(p-1)/2} = -1, so chi^a(-1) = (-1)^a.
  return (a.j % 2 == 0) ? 1 : -1;
}

bool check_gauss_jacobi_relation(const PrimeContext& ctx, CharIndex a, CharIndex b) {
  if (a.trivial() && b.trivial()) {
    throw ParameterError("Gauss-Jacobi relation requires a nontrivial character");
  }
  const std::uint64_t o = ctx.p - 1;
  const unsigned M = static_cast<unsigned>(ctx.p * o);
  CharIndex ab = make_char(ctx, static_cast<long long>(a.j + b.j));
  BigInt delta = ab.trivial() ? BigInt(ctx.p) : BigInt(1);
  CycInt lhs = embed(jacobi_sum(ctx, a, b), M) * CycInt::from_integer(M, delta) *
               gauss_sum(ctx, ab);
  CycInt rhs = gauss_sum(ctx, a) * gauss_sum(ctx, b);
  return lhs == rhs;
}

bool check_gauss_conjugate_identity(const PrimeContext& ctx, CharIndex a) {
  if (a.trivial()) throw ParameterError("identity requires A != eps");
  const std::uint64_t o = ctx.p - 1;
  const unsigned M = static_cast<unsigned>(ctx.p * o);
  CycInt lhs = gauss_sum(ctx, a) * gauss_sum(ctx, make_char(ctx, static_cast<long long>(o - a.j)));
  CycInt rhs = CycInt::from_integer(
      M, BigInt(ctx.p) * character_at_minus_one(ctx, a));
  return lhs == rhs;
}

}  // namespace cyclodet
