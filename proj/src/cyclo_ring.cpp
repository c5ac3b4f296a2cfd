#include "cyclodet/cyclo_ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace cyclodet {

void poly_normalize(IntPoly& f) {
  while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  poly_normalize(out);
  return out;
}

IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw IntegrityError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw IntegrityError("non-exact polynomial division");
  std::vector<BigInt> rem = a.c;
  std::size_t db = b.c.size() - 1;
  IntPoly q;
  q.c.assign(a.c.size() - db, BigInt(0));
  const BigInt& lead = b.c.back();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    BigInt qi, r;
    boost::multiprecision::divide_qr(rem[i], lead, qi, r);
    if (r != 0) throw IntegrityError("non-exact polynomial division");
    q.c[i - db] = qi;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= qi * b.c[j];
  }
  for (const BigInt& v : rem) {
    if (v != 0) throw IntegrityError("non-exact polynomial division");
  }
  poly_normalize(q);
  return q;
}

unsigned euler_phi(unsigned m) { return static_cast<unsigned>(euler_phi_u64(m)); }

namespace {

std::mutex g_phi_mutex;
std::map<unsigned, std::shared_ptr<const IntPoly>> g_phi_cache;

std::shared_ptr<const IntPoly> cyclotomic_poly_ptr(unsigned m) {
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
  }
  // x^m - 1 divided by the product of all lower-level Phi_d, d | m, d < m.
  IntPoly num;
  num.c.assign(m + 1, BigInt(0));
  num.c[0] = -1;
  num.c[m] = 1;
  IntPoly den;
  den.c = {BigInt(1)};
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) den = poly_mul(den, *cyclotomic_poly_ptr(d));
  }
  auto result = std::make_shared<IntPoly>(poly_divexact(num, den));
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  auto [it, inserted] = g_phi_cache.emplace(m, result);
  return it->second;
}

// Reduce a raw coefficient vector in place modulo Phi_m and truncate it to
// length phi(m). Phi_m is monic, so this is plain integer long division.
void reduce_mod_phi(std::vector<BigInt>& v, unsigned m, unsigned phi) {
  const IntPoly& f = cyclotomic_poly(m);
  for (std::size_t i = v.size(); i-- > phi;) {
    if (v[i] == 0) continue;
    BigInt c = std::move(v[i]);
    v[i] = 0;
    for (std::size_t j = 0; j < phi; ++j) {
      if (f.c[j] != 0) v[i - phi + j] -= c * f.c[j];
    }
  }
  v.resize(phi);
}

}  // namespace

const IntPoly& cyclotomic_poly(unsigned m) {
  if (m == 0) throw ParameterError("conductor must be >= 1");
  return *cyclotomic_poly_ptr(m);
}

CycInt CycInt::zero(unsigned m) {
  if (m == 0) throw ParameterError("conductor must be >= 1");
  return CycInt(m, std::vector<BigInt>(euler_phi(m), BigInt(0)));
}

CycInt CycInt::from_integer(unsigned m, BigInt v) {
  CycInt out = zero(m);
  out.c_[0] = std::move(v);
  return out;
}

CycInt CycInt::from_coeffs(unsigned m, std::vector<BigInt> raw) {
  if (m == 0) throw ParameterError("conductor must be >= 1");
  unsigned phi = euler_phi(m);
  if (raw.size() > phi) {
    reduce_mod_phi(raw, m, phi);
  } else {
    raw.resize(phi, BigInt(0));
  }
  return CycInt(m, std::move(raw));
}

bool CycInt::is_zero() const {
  for (const BigInt& v : c_) {
    if (v != 0) return false;
  }
  return true;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (BigInt& v : out.c_) v = -v;
  return out;
}

namespace {
void require_same_conductor(const CycInt& a, const CycInt& b) {
  if (a.conductor() != b.conductor()) {
    throw ParameterError("conductor mismatch: " + std::to_string(a.conductor()) + " vs " +
                         std::to_string(b.conductor()));
  }
}
}  // namespace

CycInt& CycInt::operator+=(const CycInt& o) {
  require_same_conductor(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  require_same_conductor(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
  require_same_conductor(a, b);
  unsigned phi = static_cast<unsigned>(a.c_.size());
  std::vector<BigInt> prod(2 * phi - 1, BigInt(0));
  // Iterate the sparser operand on the outside; period-like values have few
  // nonzero terms and this makes multiplying by them O(nnz * phi).
  auto nnz = [](const CycInt& v) {
    std::size_t n = 0;
    for (const BigInt& x : v.c_) n += (x != 0);
    return n;
  };
  const CycInt& outer = nnz(a) <= nnz(b) ? a : b;
  const CycInt& inner = nnz(a) <= nnz(b) ? b : a;
  for (std::size_t i = 0; i < phi; ++i) {
    if (outer.c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (inner.c_[j] != 0) prod[i + j] += outer.c_[i] * inner.c_[j];
    }
  }
  return CycInt::from_coeffs(a.m_, std::move(prod));
}

CycInt zeta_pow(unsigned m, long long e) {
  if (m == 0) throw ParameterError("conductor must be >= 1");
  long long r = e % static_cast<long long>(m);
  if (r < 0) r += m;
  std::vector<BigInt> raw(static_cast<std::size_t>(r) + 1, BigInt(0));
  raw[static_cast<std::size_t>(r)] = 1;
  return CycInt::from_coeffs(m, std::move(raw));
}

CycInt galois_apply(long long s, const CycInt& a) {
  unsigned m = a.conductor();
  long long r = s % static_cast<long long>(m);
  if (r < 0) r += m;
  if (gcd_u64(static_cast<std::uint64_t>(r), m) != 1) {
    throw ParameterError("galois_apply requires gcd(s, m) = 1");
  }
  std::vector<BigInt> raw(m, BigInt(0));
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) raw[(i * static_cast<std::size_t>(r)) % m] += c[i];
  }
  return CycInt::from_coeffs(m, std::move(raw));
}

CycInt embed(const CycInt& a, unsigned M) {
  unsigned m = a.conductor();
  if (M == 0 || M % m != 0) throw ParameterError("embed requires m | M");
  if (M == m) return a;
  unsigned step = M / m;
  std::vector<BigInt> raw(M, BigInt(0));
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) raw[(i * static_cast<std::size_t>(step)) % M] += c[i];
  }
  return CycInt::from_coeffs(M, std::move(raw));
}

ExactDivisor make_exact_divisor(const CycInt& b) {
  if (b.is_zero()) throw ParameterError("exact_div by zero");
  unsigned m = b.conductor();
  CycInt cof = CycInt::from_integer(m, 1);
  for (unsigned s = 2; s < m; ++s) {
    if (gcd_u64(s, m) == 1) cof = cof * galois_apply(s, b);
  }
  CycInt nrm = b * cof;
  BigInt norm = as_integer(nrm);  // field norm of the residue: a rational integer
  if (norm == 0) throw IntegrityError("zero norm for a nonzero cyclotomic integer");
  return ExactDivisor{std::move(cof), std::move(norm)};
}

CycInt exact_div(const CycInt& a, const ExactDivisor& d) {
  CycInt num = a * d.cofactor;
  std::vector<BigInt> out;
  out.reserve(num.coeffs().size());
  for (const BigInt& v : num.coeffs()) {
    BigInt q, r;
    boost::multiprecision::divide_qr(v, d.norm, q, r);
    if (r != 0) {
      throw IntegrityError("exact_div: coefficient " + v.str() + " not divisible by norm " +
                           d.norm.str());
    }
    out.push_back(std::move(q));
  }
  return CycInt::from_coeffs(a.conductor(), std::move(out));
}

CycInt exact_div(const CycInt& a, const CycInt& b) {
  require_same_conductor(a, b);
  return exact_div(a, make_exact_divisor(b));
}

std::optional<BigInt> try_as_integer(const CycInt& a) {
  const auto& c = a.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return std::nullopt;
  }
  return c[0];
}

BigInt as_integer(const CycInt& a) {
  const auto& c = a.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) {
      throw IntegrityError("non-rational cyclotomic integer: coefficient of zeta_" +
                           std::to_string(a.conductor()) + "^" + std::to_string(i) + " is " +
                           c[i].str());
    }
  }
  return c[0];
}

CycInt eval_poly(const IntPoly& f, const CycInt& x) {
  CycInt acc = CycInt::zero(x.conductor());
  for (std::size_t i = f.c.size(); i-- > 0;) {
    acc = acc * x;
    acc += CycInt::from_integer(x.conductor(), f.c[i]);
  }
  return acc;
}

std::string debug_json(const CycInt& a) {
  std::ostringstream os;
  os << "{\"m\": " << a.conductor() << ", \"coeffs\": [";
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << '"' << a.coeffs()[i].str() << '"';
  }
  os << "]}";
  return os.str();
}

}  // namespace cyclodet
