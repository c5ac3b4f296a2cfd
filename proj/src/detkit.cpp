#include "cyclodet/detkit.hpp"

#include <atomic>
#include <numeric>
#include <thread>

#include "cyclodet/bigint.hpp"

namespace cyclodet {

CycInt bareiss_det(const CycMatrix& M) {
  if (M.rows() != M.cols()) throw ParameterError("determinant of a non-square matrix");
  const std::size_t n = M.rows();
  const unsigned m = M.conductor();
  if (n == 1) return M.at(0, 0);

  std::vector<std::vector<CycInt>> a(n, std::vector<CycInt>(n, CycInt::zero(m)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = M.at(i, j);

  int sign = 1;
  CycInt prev = CycInt::from_integer(m, 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    // first nonzero pivot in column order
    std::size_t piv = step;
    while (piv < n && a[piv][step].is_zero()) ++piv;
    if (piv == n) return CycInt::zero(m);
    if (piv != step) {
      std::swap(a[piv], a[step]);
      sign = -sign;
    }
    // One divisor context per step: every interior division in this sweep is
    // by the same previous pivot.
    const bool trivial_div = (step == 0);
    ExactDivisor div;
    if (!trivial_div) div = make_exact_divisor(prev);
    for (std::size_t i = step + 1; i < n; ++i) {
      for (std::size_t j = step + 1; j < n; ++j) {
        CycInt num = a[step][step] * a[i][j] - a[i][step] * a[step][j];
        a[i][j] = trivial_div ? std::move(num) : exact_div(num, div);
      }
      a[i][step] = CycInt::zero(m);
    }
    prev = a[step][step];
  }
  CycInt det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------------------
// Multi-modular engine
// ---------------------------------------------------------------------------

std::uint64_t next_aux_prime(unsigned m, std::uint64_t after) {
  const std::uint64_t lo = std::max<std::uint64_t>(after, 1ULL << 20);
  std::uint64_t c = lo + 1;
  c += (1 + m - c % m) % m;  // smallest c > lo with c == 1 (mod m)
  for (;; c += m) {
    if (is_prime_u64(c)) return c;
  }
}

HomContext make_hom_context(unsigned m, std::uint64_t ell, WRule rule) {
  if (ell < 3 || !is_prime_u64(ell) || (ell - 1) % m != 0) {
    throw ParameterError("auxiliary prime must satisfy ell == 1 (mod m)");
  }
  HomContext hom;
  hom.m = m;
  hom.ell = ell;
  if (m == 1) {
    hom.w = 1;
    return hom;
  }
  auto factors = prime_factors_u64(m);
  std::uint64_t w = 0;
  for (std::uint64_t h = 2; h < ell; ++h) {
    std::uint64_t cand = powmod_u64(h, (ell - 1) / m, ell);
    if (cand == 1) continue;
    bool order_m = true;
    for (std::uint64_t q : factors) {
      if (powmod_u64(cand, m / q, ell) == 1) {
        order_m = false;
        break;
      }
    }
    if (order_m) {
      w = cand;
      break;
    }
  }
  if (w == 0) throw IntegrityError("no element of order m found mod ell");
  if (rule == WRule::kAlternate && m > 2) {
    std::uint64_t e = 2;
    while (gcd_u64(e, m) != 1) ++e;
    w = powmod_u64(w, e, ell);
  }
  hom.w = w;
  return hom;
}

std::uint64_t modular_det(const CycMatrix& M, const HomContext& hom) {
  if (M.rows() != M.cols()) throw ParameterError("determinant of a non-square matrix");
  if (hom.m != M.conductor()) throw ParameterError("hom context conductor mismatch");
  const std::size_t n = M.rows();
  const std::uint64_t ell = hom.ell;
  const unsigned phi = euler_phi(hom.m);

  std::vector<std::uint64_t> wpow(phi, 1);
  for (unsigned i = 1; i < phi; ++i) wpow[i] = mulmod_u64(wpow[i - 1], hom.w, ell);

  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& c = M.at(i, j).coeffs();
      std::uint64_t v = 0;
      for (unsigned t = 0; t < phi; ++t) {
        if (c[t] != 0) v = (v + mulmod_u64(mod_u64(c[t], ell), wpow[t], ell)) % ell;
      }
      a[i][j] = v;
    }
  }

  std::uint64_t det = 1;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = step;
    while (piv < n && a[piv][step] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != step) {
      std::swap(a[piv], a[step]);
      det = ell - det;
    }
    const std::uint64_t pv = a[step][step];
    det = mulmod_u64(det, pv, ell);
    const std::uint64_t inv = powmod_u64(pv, ell - 2, ell);
    for (std::size_t i = step + 1; i < n; ++i) {
      if (a[i][step] == 0) continue;
      const std::uint64_t f = mulmod_u64(a[i][step], inv, ell);
      for (std::size_t j = step; j < n; ++j) {
        a[i][j] = (a[i][j] + ell - mulmod_u64(f, a[step][j], ell)) % ell;
      }
    }
  }
  return det % ell;
}

BigInt crt_int_det(const CycMatrix& M, const BigInt& bound, WRule rule, unsigned jobs) {
  if (bound < 0) throw ParameterError("crt_int_det requires a nonnegative magnitude bound");
  const unsigned m = M.conductor();

  std::vector<std::uint64_t> primes;
  BigInt modulus = 1;
  std::uint64_t ell = 1ULL << 20;
  do {
    ell = next_aux_prime(m, ell);
    primes.push_back(ell);
    modulus *= ell;
  } while (modulus <= 2 * bound);

  std::vector<std::uint64_t> residues(primes.size(), 0);
  if (jobs <= 1 || primes.size() == 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
      residues[i] = modular_det(M, make_hom_context(m, primes[i], rule));
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto work = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= primes.size() || failed.load()) return;
        try {
          residues[i] = modular_det(M, make_hom_context(m, primes[i], rule));
        } catch (...) {
          failed.store(true);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, primes.size()); ++t) {
      pool.emplace_back(work);
    }
    for (auto& th : pool) th.join();
    if (failed.load()) throw IntegrityError("a modular determinant worker failed");
  }

  // Incremental CRT, then symmetric lift.
  BigInt x = 0, prod = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const BigInt ellB(primes[i]);
    BigInt inv = boost::multiprecision::powm(prod % ellB, ellB - 2, ellB);
    BigInt delta = ((BigInt(residues[i]) - x % ellB) * inv) % ellB;
    if (delta < 0) delta += ellB;
    x += prod * delta;
    prod *= ellB;
  }
  if (2 * x > prod) x -= prod;
  return x;
}

BigInt cyc_matrix_hadamard_bound(const CycMatrix& M) {
  BigInt prod_sq = 1;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    BigInt row_sq = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      BigInt mag = 0;
      for (const BigInt& c : M.at(i, j).coeffs()) mag += abs(c);
      row_sq += mag * mag;
    }
    if (row_sq == 0) return 0;
    prod_sq *= row_sq;
  }
  return ceil_sqrt(prod_sq) + 1;
}

BigInt jacobi_det_bound(std::uint64_t p, std::uint64_t n, bool include_zero) {
  // X rows: n-2 entries of magnitude sqrt(p) plus one degenerate entry of
  // magnitude 1. Y adds the eps row (p-2 and n-1 ones) and an eps column
  // entry of magnitude 1 per row.
  BigInt prod_sq = 1;
  if (include_zero) {
    prod_sq *= BigInt(p - 2) * (p - 2) + (n - 1);
    BigInt row_sq = BigInt(n - 2) * p + 2;
    prod_sq *= pow_int(row_sq, n - 1);
  } else {
    BigInt row_sq = BigInt(n - 2) * p + 1;
    prod_sq = pow_int(row_sq, n - 1);
  }
  return ceil_sqrt(prod_sq) + 1;
}

// ---------------------------------------------------------------------------
// Circulants (Lemma 2.2 machinery)
// ---------------------------------------------------------------------------

CycMatrix circulant_matrix(const std::vector<CycInt>& v) {
  if (v.empty()) throw ParameterError("circulant of an empty vector");
  const std::size_t n = v.size();
  CycMatrix out(n, n, v[0].conductor());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.set(i, j, v[(i + n - j) % n]);
    }
  }
  return out;
}

CycMatrix almost_circulant_matrix(const std::vector<CycInt>& v) {
  const std::size_t n = v.size();
  if (n < 2) throw ParameterError("almost circulant needs n >= 2");
  CycMatrix out(n - 1, n - 1, v[0].conductor());
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j < n; ++j) {
      out.set(i - 1, j - 1, v[(i + n - j) % n]);
    }
  }
  return out;
}

std::vector<CycInt> circulant_eigs(const std::vector<CycInt>& v) {
  if (v.empty()) throw ParameterError("circulant of an empty vector");
  const std::size_t n = v.size();
  const unsigned mv = v[0].conductor();
  const unsigned L = static_cast<unsigned>(std::lcm<std::uint64_t>(n, mv));
  std::vector<CycInt> emb;
  emb.reserve(n);
  for (const CycInt& a : v) emb.push_back(embed(a, L));

  std::vector<CycInt> eigs;
  eigs.reserve(n);
  const unsigned step = L / static_cast<unsigned>(n);
  for (std::size_t l = 0; l < n; ++l) {
    CycInt acc = CycInt::zero(L);
    for (std::size_t j = 0; j < n; ++j) {
      if (emb[j].is_zero()) continue;
      acc += emb[j] * zeta_pow(L, static_cast<long long>((l * j) % n) * step);
    }
    eigs.push_back(std::move(acc));
  }
  return eigs;
}

CycInt almost_circulant_det(const std::vector<CycInt>& v) {
  const std::size_t n = v.size();
  if (n < 2) throw ParameterError("almost circulant needs n >= 2");
  std::vector<CycInt> eigs = circulant_eigs(v);
  const unsigned L = eigs[0].conductor();

  std::vector<CycInt> pre(n + 1, CycInt::from_integer(L, 1));
  std::vector<CycInt> suf(n + 1, CycInt::from_integer(L, 1));
  for (std::size_t i = 0; i < n; ++i) pre[i + 1] = pre[i] * eigs[i];
  for (std::size_t i = n; i-- > 0;) suf[i] = eigs[i] * suf[i + 1];

  CycInt total = CycInt::zero(L);
  for (std::size_t l = 0; l < n; ++l) total += pre[l] * suf[l + 1];

  // The sum is divisible by n in the ring; anything else is an upstream bug.
  std::vector<BigInt> out;
  out.reserve(total.coeffs().size());
  const BigInt nB(n);
  for (const BigInt& c : total.coeffs()) {
    BigInt q, r;
    boost::multiprecision::divide_qr(c, nB, q, r);
    if (r != 0) throw IntegrityError("Lemma 2.2 sum not divisible by n");
    out.push_back(std::move(q));
  }
  return CycInt::from_coeffs(L, std::move(out));
}

}  // namespace cyclodet
