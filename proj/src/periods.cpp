#include "cyclodet/periods.hpp"

#include <sstream>

namespace cyclodet {

CycInt gaussian_period(const PrimeContext& ctx, const DivisorPair& pair, std::uint64_t b) {
  if (pair.k * pair.n != ctx.p - 1) throw ParameterError("divisor pair does not match context");
  b %= ctx.p;
  if (b == 0) throw ParameterError("gaussian_period requires b in F_p^x");
  std::vector<BigInt> raw(ctx.p, BigInt(0));
  for (std::uint64_t t = 0; t < pair.k; ++t) {
    std::uint64_t x = ctx.power_of_g(pair.n * t);
    raw[mulmod_u64(b, x, ctx.p)] += 1;
  }
  return CycInt::from_coeffs(static_cast<unsigned>(ctx.p), std::move(raw));
}

namespace {

std::vector<CycInt> all_periods(const PrimeContext& ctx, const DivisorPair& pair) {
  std::vector<CycInt> out;
  out.reserve(pair.n);
  for (std::uint64_t b : coset_reps(ctx, pair)) out.push_back(gaussian_period(ctx, pair, b));
  return out;
}

}  // namespace

MinPoly min_poly(const PrimeContext& ctx, const DivisorPair& pair) {
  const unsigned p = static_cast<unsigned>(ctx.p);
  std::vector<CycInt> periods = all_periods(ctx, pair);

  // Expand prod (T - theta) with coefficients accumulated exactly in Z[zeta_p].
  std::vector<CycInt> poly;
  poly.push_back(CycInt::from_integer(p, 1));
  for (const CycInt& theta : periods) {
    std::vector<CycInt> next(poly.size() + 1, CycInt::zero(p));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * theta;
    }
    poly = std::move(next);
  }

  MinPoly mp;
  mp.p = ctx.p;
  mp.k = pair.k;
  mp.n = pair.n;
  mp.coeffs.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    auto v = try_as_integer(poly[i]);
    if (!v) {
      throw IntegrityError("period polynomial coefficient of T^" + std::to_string(i) +
                           " is not a rational integer (p=" + std::to_string(ctx.p) +
                           ", k=" + std::to_string(pair.k) + ")");
    }
    mp.coeffs.push_back(std::move(*v));
  }
  if (mp.coeffs.size() != pair.n + 1 || mp.coeffs.back() != 1) {
    throw IntegrityError("period polynomial is not monic of degree n");
  }
  mp.x = mp.coeffs[1];
  mp.y = mp.coeffs[0];
  return mp;
}

bool check_congruence(const MinPoly& mp) {
  BigInt p(mp.p);
  BigInt kn = boost::multiprecision::powm(BigInt(mp.k), BigInt(mp.n), p);
  BigInt rhs1 = sign_pow(mp.n) * kn;
  BigInt rhs2 = BigInt(mp.k) * BigInt(mp.k) * mp.x;
  return (mp.y - rhs1) % p == 0 && (mp.y - rhs2) % p == 0;
}

BigInt x_via_proof_formula(const PrimeContext& ctx, const DivisorPair& pair) {
  const unsigned p = static_cast<unsigned>(ctx.p);
  std::vector<CycInt> periods = all_periods(ctx, pair);
  const std::size_t n = periods.size();

  // prod_{c != b} theta^{(c)} via prefix/suffix products.
  std::vector<CycInt> pre(n + 1, CycInt::from_integer(p, 1));
  std::vector<CycInt> suf(n + 1, CycInt::from_integer(p, 1));
  for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] * periods[i];
  for (std::size_t i = n; i-- > 0;) suf[i] = periods[i] * suf[i + 1];

  CycInt sum = CycInt::zero(p);
  for (std::size_t b = 0; b < n; ++b) sum += pre[b] * suf[b + 1];

  auto v = try_as_integer(sum);
  if (!v) throw IntegrityError("x_p(k) proof formula did not produce a rational integer");
  return sign_pow(pair.n - 1) * (*v);
}

BigInt y_via_proof_formula(const PrimeContext& ctx, const DivisorPair& pair) {
  const unsigned p = static_cast<unsigned>(ctx.p);
  CycInt prod = CycInt::from_integer(p, 1);
  for (const CycInt& theta : all_periods(ctx, pair)) prod = prod * theta;
  auto v = try_as_integer(prod);
  if (!v) throw IntegrityError("y_p(k) proof formula did not produce a rational integer");
  return sign_pow(pair.n) * (*v);
}

std::string minpoly_json(const MinPoly& mp) {
  std::ostringstream os;
  os << "{\"p\": " << mp.p << ", \"k\": " << mp.k << ", \"n\": " << mp.n << ", \"coeffs\": [";
  for (std::size_t i = 0; i < mp.coeffs.size(); ++i) {
    if (i) os << ", ";
    os << '"' << mp.coeffs[i].str() << '"';
  }
  os << "], \"x\": \"" << mp.x.str() << "\", \"y\": \"" << mp.y.str() << "\"}";
  return os.str();
}

}  // namespace cyclodet
