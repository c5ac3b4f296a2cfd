#include "cyclodet/fermat.hpp"

#include <sstream>

#include "cyclodet/detkit.hpp"
#include "cyclodet/sums.hpp"

namespace cyclodet {

CurveCount count_points(std::uint64_t p, std::uint64_t n, std::uint64_t m, std::uint64_t cap) {
  if (!is_prime_u64(p)) throw ParameterError("p must be prime");
  if (n == 0 || (n > 1 && (p - 1) % n != 0)) throw ParameterError("need n | p-1");
  if (m != 1 && m != 2) throw ParameterError("only m in {1, 2} supported");

  ExtFieldContext f = make_ext_context(p, m, cap);
  const std::uint64_t q = f.q;

  // nth-power histogram: cnt[v] = #{x in F_q : x^n = v}  (0^n = 0).
  std::vector<std::uint64_t> cnt(q, 0);
  cnt[0] = 1;
  for (std::uint64_t t = 0; t < q - 1; ++t) {
    cnt[f.expo[(n * t) % (q - 1)]] += 1;
  }

  std::uint64_t total = 0;
  // chart z = 1: pairs with x^n + y^n = 1
  const std::uint64_t one = 1;
  for (std::uint64_t v = 0; v < q; ++v) {
    if (cnt[v] == 0) continue;
    total += cnt[v] * cnt[f.sub(one, v)];
  }
  // chart z = 0, y = 1: x^n = -1
  total += cnt[f.sub(0, one)];

  CurveCount out{p, n, m, total};
  if (out.count < 3) throw IntegrityError("implausible point count");
  return out;
}

HPoly h_poly(const PrimeContext& ctx, const DivisorPair& pair) {
  const std::uint64_t n = pair.n;
  const unsigned o = static_cast<unsigned>(ctx.p - 1);
  if (n < 3) return HPoly{{BigInt(1)}};  // empty index set

  std::vector<CycInt> poly;  // coefficients in Z[zeta_{p-1}]
  poly.push_back(CycInt::from_integer(o, 1));
  for (std::uint64_t i = 1; i <= n - 1; ++i) {
    for (std::uint64_t j = 1; j <= n - 1; ++j) {
      if ((i + j) % n == 0) continue;
      CycInt jac = jacobi_sum(ctx, make_char(ctx, static_cast<long long>(pair.k * i)),
                              make_char(ctx, static_cast<long long>(pair.k * j)));
      std::vector<CycInt> next(poly.size() + 1, CycInt::zero(o));
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] += poly[d];
        next[d + 1] += poly[d] * jac;
      }
      poly = std::move(next);
    }
  }

  HPoly hp;
  hp.coeffs.reserve(poly.size());
  for (std::size_t d = 0; d < poly.size(); ++d) {
    auto v = try_as_integer(poly[d]);
    if (!v) {
      throw IntegrityError("H(T) coefficient of T^" + std::to_string(d) +
                           " is not a rational integer");
    }
    hp.coeffs.push_back(std::move(*v));
  }
  if (hp.coeffs[0] != 1) throw IntegrityError("H(0) != 1");
  if (hp.degree() != (n - 1) * (n - 2)) throw IntegrityError("deg H != (n-1)(n-2)");
  return hp;
}

bool zeta_consistency(const HPoly& hp, const CurveCount& c1, const CurveCount& c2,
                      std::string* diag) {
  if (c1.p != c2.p || c1.n != c2.n || c1.m != 1 || c2.m != 2) {
    throw ParameterError("zeta_consistency needs m=1 and m=2 counts for one (p, n)");
  }
  // H(T) = prod (1 - alpha_i T) = sum (-1)^j e_j T^j, so e_j = (-1)^j h_j.
  BigInt e1 = hp.coeffs.size() > 1 ? -hp.coeffs[1] : BigInt(0);
  BigInt e2 = hp.coeffs.size() > 2 ? hp.coeffs[2] : BigInt(0);
  BigInt s1 = e1;
  BigInt s2 = e1 * s1 - 2 * e2;

  BigInt p(c1.p);
  BigInt pred1 = p + 1 - s1;
  BigInt pred2 = p * p + 1 - s2;
  bool ok = pred1 == BigInt(c1.count) && pred2 == BigInt(c2.count);
  if (!ok && diag) {
    std::ostringstream os;
    os << "predicted N(p)=" << pred1 << " N(p^2)=" << pred2 << ", counted N(p)=" << c1.count
       << " N(p^2)=" << c2.count;
    *diag = os.str();
  }
  return ok;
}

FermatCurveReport curve_report(std::uint64_t p, std::uint64_t n, std::uint64_t cap) {
  FermatCurveReport rep;
  rep.p = p;
  rep.n = n;
  rep.n1 = count_points(p, n, 1, cap);
  rep.n2 = count_points(p, n, 2, cap);
  if (n == 1) {
    rep.k = 0;  // k = p-1 is not a valid divisor pair; H is the empty product
    rep.h = HPoly{{BigInt(1)}};
  } else {
    PrimeContext ctx = make_prime_context(p);
    DivisorPair pair = make_divisor_pair(ctx, (p - 1) / n);
    rep.k = pair.k;
    rep.h = h_poly(ctx, pair);
  }
  rep.pass = zeta_consistency(rep.h, rep.n1, rep.n2);
  return rep;
}

ExtDetReport ext_jacobi_det_check(const ExtFieldContext& ext, std::uint64_t k,
                                  const NumericPolicy& policy, int pass_log2_threshold) {
  const std::uint64_t q = ext.q;
  if (k == 0 || k >= q - 1 || (q - 1) % k != 0) {
    throw ParameterError("k must divide q-1 with 1 <= k < q-1");
  }
  const std::uint64_t n = (q - 1) / k;
  const unsigned o = static_cast<unsigned>(q - 1);

  ScopedPrecision guard(policy.precision_bits);

  // Left side: det[J_q(chi^{ki}, chi^{kj})] computed exactly in Z[zeta_{q-1}].
  CycMatrix J(n - 1, n - 1, o);
  for (std::uint64_t i = 1; i <= n - 1; ++i) {
    for (std::uint64_t j = i; j <= n - 1; ++j) {
      std::vector<BigInt> raw(o, BigInt(0));
      // encodings 2..q-1 are exactly the field elements other than 0 and 1
      for (std::uint64_t x = 2; x < q; ++x) {
        std::uint64_t y = ext.sub(1, x);
        raw[(k * i * ext.dlog[x] + k * j * ext.dlog[y]) % o] += 1;
      }
      CycInt v = CycInt::from_coeffs(o, std::move(raw));
      if (i != j) J.set(j - 1, i - 1, v);
      J.set(i - 1, j - 1, std::move(v));
    }
  }
  CycInt det = bareiss_det(J);

  ExtDetReport rep;
  rep.q = q;
  rep.k = k;
  rep.n = n;
  rep.lhs = complex_eval(det, policy);

  // Right side: period sums mu_k^{(c)} = sum_{y in U_k} zeta_p^{Tr(cy)} over
  // the coset representatives c = gamma^t, exact in Z[zeta_p].
  const unsigned p = static_cast<unsigned>(ext.p);
  std::vector<CycInt> mu;
  mu.reserve(n);
  for (std::uint64_t t = 0; t < n; ++t) {
    std::uint64_t c = ext.expo[t];
    std::vector<BigInt> raw(p, BigInt(0));
    for (std::uint64_t s = 0; s < k; ++s) {
      std::uint64_t y = ext.expo[(n * s) % (q - 1)];
      raw[trace(ext, ext.mul(c, y))] += 1;
    }
    mu.push_back(CycInt::from_coeffs(p, std::move(raw)));
  }

  std::vector<CycInt> pre(n + 1, CycInt::from_integer(p, 1));
  std::vector<CycInt> suf(n + 1, CycInt::from_integer(p, 1));
  for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] * mu[i];
  for (std::size_t i = n; i-- > 0;) suf[i] = mu[i] * suf[i + 1];
  CycInt sum = CycInt::zero(p);
  for (std::size_t b = 0; b < n; ++b) sum += pre[b] * suf[b + 1];

  // sign exponent (n-1)((k+1)n - 2)/2
  BigInt sign_e = BigInt(n - 1) * (BigInt(k + 1) * n - 2) / 2;
  BigInt factor = sign_pow(mod_u64(sign_e, 2)) * pow_int(BigInt(n), n - 2);

  Complex s = complex_eval(sum, policy);
  BigFloat fac(factor);
  rep.rhs = Complex(fac * s.re, fac * s.im);
  rep.gap = (rep.lhs - rep.rhs).abs();
  rep.pass = rep.gap < boost::multiprecision::pow(BigFloat(2), pass_log2_threshold);
  return rep;
}

std::string fermat_report_json(const FermatCurveReport& rep) {
  std::ostringstream os;
  os << "{\"p\": " << rep.p << ", \"n\": " << rep.n << ", \"k\": " << rep.k
     << ", \"N1\": " << rep.n1.count << ", \"N2\": " << rep.n2.count << ", \"H\": [";
  for (std::size_t i = 0; i < rep.h.coeffs.size(); ++i) {
    if (i) os << ", ";
    os << '"' << rep.h.coeffs[i].str() << '"';
  }
  os << "], \"pass\": " << (rep.pass ? "true" : "false") << "}";
  return os.str();
}

std::string ext_report_json(const ExtDetReport& rep) {
  std::ostringstream os;
  os << "{\"q\": " << rep.q << ", \"k\": " << rep.k << ", \"n\": " << rep.n
     << ", \"lhs\": [\"" << format_float(rep.lhs.re) << "\", \"" << format_float(rep.lhs.im)
     << "\"], \"rhs\": [\"" << format_float(rep.rhs.re) << "\", \"" << format_float(rep.rhs.im)
     << "\"], \"gap\": \"" << format_float(rep.gap)
     << "\", \"pass\": " << (rep.pass ? "true" : "false") << "}";
  return os.str();
}

}  // namespace cyclodet
