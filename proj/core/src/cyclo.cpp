#include "frobtrace/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "frobtrace/error.hpp"

namespace frobtrace {

namespace {

using IntVec = std::vector<mpz_class>;

struct PhiTerm {
  std::uint32_t exponent;
  long coeff;
};

struct CycloPolyEntry {
  std::vector<long> dense;
  std::vector<PhiTerm> sparse;  // non-leading nonzero terms
};

// Exact quotient of integer polynomials (constant term first), divisor monic.
std::vector<long> divide_exact(std::vector<long> num, const std::vector<long>& div) {
  const std::size_t dd = div.size() - 1;
  std::vector<long> q(num.size() - dd, 0);
  for (std::size_t k = num.size() - 1; k >= dd; --k) {
    const long c = num[k];
    if (c != 0) {
      q[k - dd] = c;
      for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * div[t];
    }
    if (k == dd) break;
  }
  return q;
}

const CycloPolyEntry& cyclotomic_entry(std::uint32_t n) {
  static std::mutex mutex;
  static std::map<std::uint32_t, CycloPolyEntry> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, filled in for every divisor
  // of n in increasing order.
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<long> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (std::uint32_t e = 1; e < d; ++e)
      if (d % e == 0) poly = divide_exact(std::move(poly), cache.at(e).dense);
    CycloPolyEntry entry;
    entry.dense = poly;
    for (std::uint32_t t = 0; t + 1 < poly.size(); ++t)
      if (poly[t] != 0) entry.sparse.push_back({t, poly[t]});
    cache.emplace(d, std::move(entry));
  }
  return cache.at(n);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t g = m, x = 0, x1 = 1, b = mod_floor(a, m);
  while (b != 0) {
    std::int64_t q = g / b;
    std::tie(g, b) = std::make_pair(b, g - q * b);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return mod_floor(x, m);
}

// In-place reduction of a length <= n vector modulo Phi_n; result has length phi(n).
void reduce_mod_phi(std::uint32_t n, IntVec& v) {
  const auto& entry = cyclotomic_entry(n);
  const std::size_t deg = entry.dense.size() - 1;
  if (v.size() < deg) v.resize(deg);
  for (std::size_t k = v.size(); k-- > deg;) {
    if (sgn(v[k]) == 0) continue;
    const mpz_class c = v[k];
    const std::size_t shift = k - deg;
    for (const auto& term : entry.sparse) {
      if (term.coeff == 1)
        v[shift + term.exponent] -= c;
      else if (term.coeff == -1)
        v[shift + term.exponent] += c;
      else
        v[shift + term.exponent] -= c * term.coeff;
    }
  }
  v.resize(deg);
}

bool all_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

// Try to re-express v in Q(zeta_{n/p}) where p exactly divides n, using the
// basis {zeta_p^s : s < p-1} of Q(zeta_n) over Q(zeta_{n/p}).
bool drop_simple_prime(std::uint32_t n, std::uint32_t p, IntVec& v) {
  const std::uint32_t m = n / p;
  const std::int64_t u = inverse_mod(p, m);
  const std::int64_t t = inverse_mod(m, p);
  std::vector<IntVec> parts(p, IntVec(m));
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (sgn(v[j]) == 0) continue;
    const auto s = static_cast<std::size_t>((t * static_cast<std::int64_t>(j)) % p);
    const auto idx = static_cast<std::size_t>((u * static_cast<std::int64_t>(j)) % m);
    parts[s][idx] += v[j];
  }
  for (auto& part : parts) reduce_mod_phi(m, part);
  for (std::uint32_t s = 1; s + 1 < p; ++s)
    if (parts[s] != parts[p - 1]) return false;
  IntVec out = std::move(parts[0]);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] -= parts[p - 1][j];
  v = std::move(out);
  return true;
}

// Minimise the conductor of the element given by v over Q(zeta_n).
std::uint32_t minimise_conductor(std::uint32_t n, IntVec& v) {
  if (all_zero(v)) {
    v.assign(1, 0);
    return 1;
  }
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    for (std::uint32_t p : prime_factors(n)) {
      if (n % (p * p) == 0) {
        // Phi_n(x) = Phi_{n/p}(x^p): membership is a pattern check.
        bool ok = true;
        for (std::size_t j = 0; j < v.size() && ok; ++j)
          if (j % p != 0 && sgn(v[j]) != 0) ok = false;
        if (!ok) continue;
        IntVec w(v.size() / p);
        for (std::size_t j = 0; j < w.size(); ++j) w[j] = std::move(v[j * p]);
        v = std::move(w);
        n /= p;
        changed = true;
        break;
      }
      if (drop_simple_prime(n, p, v)) {
        n /= p;
        changed = true;
        break;
      }
    }
  }
  return n;
}

IntVec place_cyclic(std::uint32_t from, const IntVec& num, std::uint32_t to) {
  IntVec out(to);
  const std::uint32_t step = to / from;
  for (std::size_t j = 0; j < num.size(); ++j)
    if (sgn(num[j]) != 0) out[(j * step) % to] += num[j];
  return out;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t lcm_conductor(std::uint32_t a, std::uint32_t b) { return std::lcm(a, b); }

const std::vector<long>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw DomainError("E_CYCLO_CONDUCTOR", "cyclotomic polynomial of order 0");
  return cyclotomic_entry(n).dense;
}

CycloNum::CycloNum() : n_(1), num_{0}, den_(1) {}
CycloNum::CycloNum(long value) : n_(1), num_{mpz_class(value)}, den_(1) {}
CycloNum::CycloNum(const mpz_class& value) : n_(1), num_{value}, den_(1) {}
CycloNum::CycloNum(const mpq_class& value) : CycloNum(1, {value.get_num()}, value.get_den()) {}

CycloNum::CycloNum(std::uint32_t n, std::vector<mpz_class> num, mpz_class den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycloNum::normalize() {
  n_ = minimise_conductor(n_, num_);
  if (sgn(den_) < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (all_zero(num_)) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

CycloNum CycloNum::zeta(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw DomainError("E_CYCLO_CONDUCTOR", "zeta_0 is undefined");
  IntVec cyc(n);
  cyc[static_cast<std::size_t>(mod_floor(k, n))] = 1;
  reduce_mod_phi(n, cyc);
  return CycloNum(n, std::move(cyc), 1);
}

CycloNum CycloNum::from_power_basis(std::uint32_t n, const std::vector<mpq_class>& coeffs) {
  if (n == 0) throw DomainError("E_CYCLO_CONDUCTOR", "conductor must be positive");
  if (coeffs.size() != euler_phi(n))
    throw DomainError("E_CYCLO_LENGTH", "expected " + std::to_string(euler_phi(n)) +
                                            " coefficients for conductor " + std::to_string(n) +
                                            ", got " + std::to_string(coeffs.size()));
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntVec num(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) num[j] = coeffs[j].get_num() * (den / coeffs[j].get_den());
  return CycloNum(n, std::move(num), den);
}

CycloNum CycloNum::from_cyclic(std::uint32_t n, const std::vector<mpq_class>& coeffs) {
  if (n == 0) throw DomainError("E_CYCLO_CONDUCTOR", "conductor must be positive");
  mpz_class den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntVec cyc(n);
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (sgn(coeffs[j]) != 0) cyc[j % n] += coeffs[j].get_num() * (den / coeffs[j].get_den());
  reduce_mod_phi(n, cyc);
  return CycloNum(n, std::move(cyc), den);
}

std::vector<mpq_class> CycloNum::coeffs() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (const auto& c : num_) {
    mpq_class q(c, den_);
    q.canonicalize();
    out.push_back(std::move(q));
  }
  return out;
}

bool CycloNum::is_zero() const noexcept { return n_ == 1 && sgn(num_[0]) == 0; }

mpq_class CycloNum::to_rational() const {
  if (!is_rational()) throw DomainError("E_CYCLO_NOT_RATIONAL", "value " + to_string() + " is not rational");
  mpq_class q(num_[0], den_);
  q.canonicalize();
  return q;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (n_ == rhs.n_) {
    IntVec num(num_.size());
    for (std::size_t j = 0; j < num.size(); ++j) num[j] = num_[j] * rhs.den_ + rhs.num_[j] * den_;
    return *this = CycloNum(n_, std::move(num), den_ * rhs.den_);
  }
  const std::uint32_t n = std::lcm(n_, rhs.n_);
  IntVec a = place_cyclic(n_, num_, n);
  IntVec b = place_cyclic(rhs.n_, rhs.num_, n);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (sgn(a[j]) != 0) a[j] *= rhs.den_;
    if (sgn(b[j]) != 0) a[j] += b[j] * den_;
  }
  reduce_mod_phi(n, a);
  return *this = CycloNum(n, std::move(a), den_ * rhs.den_);
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) { return *this += -rhs; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.is_zero() || b.is_zero()) return CycloNum();
  if (a.n_ == 1) return b.scaled(mpq_class(a.num_[0], a.den_));
  if (b.n_ == 1) return a.scaled(mpq_class(b.num_[0], b.den_));
  const std::uint32_t n = std::lcm(a.n_, b.n_);
  const std::uint32_t sa = n / a.n_;
  const std::uint32_t sb = n / b.n_;
  IntVec cyc(n);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (sgn(a.num_[i]) == 0) continue;
    const std::size_t ei = i * sa;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (sgn(b.num_[j]) == 0) continue;
      std::size_t e = ei + j * sb;
      if (e >= n) e -= n;
      mpz_addmul(cyc[e].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  reduce_mod_phi(n, cyc);
  return CycloNum(n, std::move(cyc), a.den_ * b.den_);
}

CycloNum& CycloNum::operator*=(const CycloNum& rhs) { return *this = *this * rhs; }

CycloNum& CycloNum::operator/=(const CycloNum& rhs) { return *this = *this * rhs.inverse(); }

CycloNum CycloNum::scaled(const mpq_class& factor) const {
  if (sgn(factor) == 0) return CycloNum();
  IntVec num = num_;
  for (auto& c : num) c *= factor.get_num();
  return CycloNum(n_, std::move(num), den_ * factor.get_den());
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DomainError("E_DIV_ZERO", "division by zero in cyclotomic field");
  if (n_ == 1) return CycloNum(mpq_class(den_, num_[0]));
  // Extended Euclid of a(x) against Phi_n(x) over Q.
  using Poly = std::vector<mpq_class>;
  auto trim = [](Poly& p) {
    while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
  };
  const auto& phi = cyclotomic_polynomial(n_);
  Poly r0(phi.begin(), phi.end());
  Poly r1 = coeffs();
  trim(r1);
  Poly s0{0}, s1{1};
  while (r1.size() > 1) {
    Poly q(r0.size() - r1.size() + 1, 0);
    Poly r = r0;
    const mpq_class lead = r1.back();
    for (std::size_t k = r.size(); k-- >= r1.size();) {
      if (sgn(r[k]) != 0) {
        mpq_class c = r[k] / lead;
        q[k - (r1.size() - 1)] = c;
        for (std::size_t t = 0; t < r1.size(); ++t) r[k - (r1.size() - 1) + t] -= c * r1[t];
      }
      if (k == r1.size() - 1) break;
    }
    r.resize(r1.size() - 1);
    if (r.empty()) r.push_back(0);
    trim(r);
    Poly s(std::max(s0.size(), q.size() + s1.size() - 1), 0);
    for (std::size_t i = 0; i < s0.size(); ++i) s[i] += s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant c with s1 * a = c mod Phi_n.
  const mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return from_cyclic(n_, s1);
}

CycloNum CycloNum::conj() const { return galois(-1); }

CycloNum CycloNum::galois(std::int64_t k) const {
  if (n_ == 1) return *this;
  if (std::gcd(mod_floor(k, n_), static_cast<std::int64_t>(n_)) != 1)
    throw DomainError("E_GALOIS", "exponent " + std::to_string(k) + " is not a unit modulo " + std::to_string(n_));
  IntVec cyc(n_);
  for (std::size_t j = 0; j < num_.size(); ++j)
    if (sgn(num_[j]) != 0) cyc[static_cast<std::size_t>(mod_floor(k * static_cast<std::int64_t>(j), n_))] += num_[j];
  reduce_mod_phi(n_, cyc);
  return CycloNum(n_, std::move(cyc), den_);
}

CycloNum CycloNum::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNum result(1L), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

ComplexApprox CycloNum::embed() const {
  long double re = 0, im = 0;
  const long double d = mpz_get_d(den_.get_mpz_t());
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) == 0) continue;
    long double c;
    if (mpz_sizeinbase(den_.get_mpz_t(), 2) > 1000 || mpz_sizeinbase(num_[j].get_mpz_t(), 2) > 1000)
      c = mpq_class(num_[j], den_).get_d();
    else
      c = mpz_get_d(num_[j].get_mpz_t()) / d;
    const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(j) / n_;
    re += c * std::cos(angle);
    im += c * std::sin(angle);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
}

std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t j = 0; j < a.num_.size(); ++j) {
    const int c = cmp(a.num_[j] * b.den_, b.num_[j] * a.den_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (sgn(num_[j]) == 0) continue;
    mpq_class c(num_[j], den_);
    c.canonicalize();
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (j == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "z" << n_;
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& a) { return os << a.to_string(); }

CycloNum gauss_sum(std::uint32_t p) {
  auto is_prime = [](std::uint32_t x) {
    if (x < 2) return false;
    for (std::uint32_t d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  if (p < 3 || !is_prime(p))
    throw DomainError("E_GAUSS_SUM", "gauss_sum needs an odd prime, got " + std::to_string(p));
  if (p % 4 != 3)
    throw DomainError("E_GAUSS_SUM", "gauss_sum only supports p = 3 mod 4, got " + std::to_string(p));
  std::vector<mpq_class> cyc(p, 0);
  for (std::uint32_t a = 1; a < p; ++a) {
    // Euler's criterion
    std::uint64_t r = 1, base = a, e = (p - 1) / 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    cyc[a] = (r == 1) ? 1 : -1;
  }
  return CycloNum::from_cyclic(p, cyc);
}

}  // namespace frobtrace
