#include "cyclodet/numeric.hpp"

#include <cmath>
#include <sstream>

#include "cyclodet/sums.hpp"

namespace cyclodet {

namespace mp = boost::multiprecision;

unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30103) + 3;
}

NumericPolicy NumericPolicy::for_case(std::uint64_t p, std::uint64_t n) {
  NumericPolicy policy;
  if (p > 31) {
    double bits = 4.0 * static_cast<double>(n) * std::log2(static_cast<double>(p)) + 64.0;
    policy.precision_bits = static_cast<unsigned>(bits);
  }
  return policy;
}

BigFloat NumericPolicy::threshold() const {
  return mp::pow(BigFloat(2), -static_cast<int>(guard_bits / 2));
}

ScopedPrecision::ScopedPrecision(unsigned bits) {
  unsigned want = bits_to_digits10(bits);
  unsigned cur = static_cast<unsigned>(BigFloat::default_precision());
  if (cur < want) {
    BigFloat::default_precision(want);
    restore_ = true;
    prev_digits_ = cur;
  }
}

ScopedPrecision::~ScopedPrecision() {
  if (restore_) BigFloat::default_precision(prev_digits_);
}

Complex Complex::operator/(const Complex& o) const {
  BigFloat d = o.abs2();
  return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
}

BigFloat Complex::abs() const { return mp::sqrt(abs2()); }

namespace {
BigFloat fmax2(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
}  // namespace

RootTable make_root_table(unsigned m) {
  RootTable t;
  t.m = m;
  t.pw.reserve(m);
  BigFloat two_pi;
  mpfr_const_pi(two_pi.backend().data(), MPFR_RNDN);
  two_pi *= 2;
  for (unsigned j = 0; j < m; ++j) {
    BigFloat angle = two_pi * j / m;
    t.pw.emplace_back(mp::cos(angle), mp::sin(angle));
  }
  return t;
}

Complex complex_eval(const CycInt& a, const NumericPolicy& policy) {
  ScopedPrecision guard(policy.precision_bits);
  RootTable t = make_root_table(a.conductor());
  Complex acc;
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    BigFloat coeff(c[i]);
    acc += Complex(coeff * t.pw[i].re, coeff * t.pw[i].im);
  }
  return acc;
}

BigInt round_to_int(const Complex& z, const NumericPolicy& policy) {
  BigFloat thr = policy.threshold();
  BigFloat rounded = mp::round(z.re);
  BigFloat re_res = mp::abs(z.re - rounded);
  BigFloat im_res = mp::abs(z.im);
  if (im_res >= thr || re_res >= thr) {
    throw PrecisionError("rounding residual " + format_float(fmax2(re_res, im_res)) +
                         " exceeds threshold " + format_float(thr) +
                         "; increase --precision");
  }
  return rounded.convert_to<BigInt>();
}

Complex complex_det(std::vector<std::vector<Complex>> a) {
  const std::size_t n = a.size();
  Complex det(BigFloat(1), BigFloat(0));
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = step;
    BigFloat best = a[step][step].abs2();
    for (std::size_t i = step + 1; i < n; ++i) {
      BigFloat v = a[i][step].abs2();
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0) return Complex();
    if (piv != step) {
      std::swap(a[piv], a[step]);
      det = Complex(-det.re, -det.im);
    }
    det = det * a[step][step];
    for (std::size_t i = step + 1; i < n; ++i) {
      Complex f = a[i][step] / a[step][step];
      if (f.abs2() == 0) continue;
      for (std::size_t j = step; j < n; ++j) {
        a[i][j] = a[i][j] - f * a[step][j];
      }
    }
  }
  return det;
}

Complex gauss_sum_numeric(const PrimeContext& ctx, std::uint64_t t, const RootTable& zp,
                          const RootTable& zo) {
  const std::uint64_t p = ctx.p;
  const std::uint64_t o = p - 1;
  Complex acc;
  for (std::uint64_t x = 1; x < p; ++x) {
    acc += zo.pw[(t * ctx.ind[x]) % o] * zp.pw[x];
  }
  return acc;
}

EigenReport verify_lemma23(const PrimeContext& ctx, const DivisorPair& pair,
                           const NumericPolicy& policy) {
  ScopedPrecision guard(policy.precision_bits);
  const std::uint64_t p = ctx.p;
  const std::uint64_t n = pair.n;
  const std::uint64_t o = p - 1;

  EigenReport rep;
  rep.p = p;
  rep.k = pair.k;
  rep.n = n;

  RootTable zp = make_root_table(static_cast<unsigned>(p));
  RootTable zo = make_root_table(static_cast<unsigned>(o));
  BigFloat pf(p);

  // 1/G(chi^t) for the n residues t = k(i-j) mod (p-1) that occur.
  std::vector<Complex> inv_gauss(n);
  for (std::uint64_t d = 0; d < n; ++d) {
    std::uint64_t t = (pair.k * d) % o;
    if (t == 0) {
      inv_gauss[d] = Complex(BigFloat(-1), BigFloat(0));
    } else {
      Complex conj_sum = gauss_sum_numeric(ctx, o - t, zp, zo);
      BigFloat s(character_at_minus_one(ctx, CharIndex{t}));
      inv_gauss[d] = Complex(s * conj_sum.re / pf, s * conj_sum.im / pf);
    }
  }

  std::vector<std::vector<Complex>> M(n, std::vector<Complex>(n));
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      M[i][j] = inv_gauss[(i + n - j) % n];
    }
  }

  // Claimed eigenvalues 1/p - 1 + (n/p) theta_k^{(b)} from the exact periods.
  BigFloat base = 1 / pf - 1;
  BigFloat scale = BigFloat(n) / pf;
  Complex claimed_sum, claimed_prod(BigFloat(1), BigFloat(0));
  for (std::uint64_t b : coset_reps(ctx, pair)) {
    Complex theta;
    for (std::uint64_t t = 0; t < pair.k; ++t) {
      theta += zp.pw[mulmod_u64(b, ctx.power_of_g(pair.n * t), p)];
    }
    Complex lam(base + scale * theta.re, scale * theta.im);
    claimed_sum += lam;
    claimed_prod = claimed_prod * lam;
    rep.claimed.push_back(lam);
  }

  Complex tr;
  for (std::uint64_t i = 0; i < n; ++i) tr += M[i][i];
  rep.trace_gap = (tr - claimed_sum).abs();
  rep.det_gap = (complex_det(M) - claimed_prod).abs();

  BigFloat worst = fmax2(rep.trace_gap, rep.det_gap);
  for (const Complex& lam : rep.claimed) {
    auto shifted = M;
    for (std::uint64_t i = 0; i < n; ++i) shifted[i][i] = shifted[i][i] - lam;
    BigFloat res = complex_det(shifted).abs();
    rep.residuals.push_back(res);
    worst = fmax2(worst, res);
  }
  rep.pass = worst < policy.threshold();
  return rep;
}

BigInt gauss_det_numeric(const PrimeContext& ctx, const DivisorPair& pair, bool include_zero,
                         const NumericPolicy& policy) {
  // magnitude bound n^{n/2} p^{n/2} must fit under the working precision
  BigInt bound = pow_int(ceil_sqrt(BigInt(pair.n) * ctx.p), pair.n);
  unsigned need = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 1 + policy.guard_bits;
  if (policy.precision_bits < need) {
    throw PrecisionError("gauss_det_numeric needs at least " + std::to_string(need) +
                         " precision bits for p=" + std::to_string(ctx.p) +
                         ", k=" + std::to_string(pair.k));
  }
  ScopedPrecision guard(policy.precision_bits);
  const std::uint64_t p = ctx.p;
  const std::uint64_t o = p - 1;
  const std::size_t lo = include_zero ? 0 : 1;
  const std::size_t d = pair.n - (include_zero ? 0 : 1);

  RootTable zp = make_root_table(static_cast<unsigned>(p));
  RootTable zo = make_root_table(static_cast<unsigned>(o));

  std::vector<Complex> by_sum(2 * (lo + d - 1) + 1);
  for (std::size_t s = 2 * lo; s <= 2 * (lo + d - 1); ++s) {
    by_sum[s] = gauss_sum_numeric(ctx, (pair.k * s) % o, zp, zo);
  }
  std::vector<std::vector<Complex>> M(d, std::vector<Complex>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      M[i][j] = by_sum[lo + i + lo + j];
    }
  }
  return round_to_int(complex_det(std::move(M)), policy);
}

std::string format_float(const BigFloat& v) {
  std::ostringstream os;
  os.precision(6);
  os << std::scientific << v;
  return os.str();
}

std::string eigen_report_json(const EigenReport& rep) {
  std::ostringstream os;
  os << "{\"p\": " << rep.p << ", \"k\": " << rep.k << ", \"n\": " << rep.n
     << ", \"pass\": " << (rep.pass ? "true" : "false")
     << ", \"trace_gap\": \"" << format_float(rep.trace_gap)
     << "\", \"det_gap\": \"" << format_float(rep.det_gap) << "\", \"claimed\": [";
  for (std::size_t i = 0; i < rep.claimed.size(); ++i) {
    if (i) os << ", ";
    os << "[\"" << format_float(rep.claimed[i].re) << "\", \""
       << format_float(rep.claimed[i].im) << "\"]";
  }
  os << "], \"residuals\": [";
  for (std::size_t i = 0; i < rep.residuals.size(); ++i) {
    if (i) os << ", ";
    os << '"' << format_float(rep.residuals[i]) << '"';
  }
  os << "]}";
  return os.str();
}

}  // namespace cyclodet
