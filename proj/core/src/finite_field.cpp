#include "frobtrace/finite_field.hpp"

#include <algorithm>
#include <charconv>

#include "frobtrace/error.hpp"

namespace frobtrace {

namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(c), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Ben-Or: no factor of degree i <= k/2 iff gcd(x^{p^i} - x, m) = 1 for each i.
bool irreducible(const Poly& m, std::uint32_t p) {
  const std::size_t k = m.size() - 1;
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= k / 2; ++i) {
    Poly base = xp, r{1};
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) r = poly_mulmod(r, base, m, p);
      base = poly_mulmod(base, base, m, p);
    }
    xp = r;
    Poly t = xp;
    t.resize(std::max<std::size_t>(t.size(), 2), 0);
    t[1] = (t[1] + p - 1) % p;
    if (poly_gcd(t, m, p).size() != 1) return false;
  }
  return true;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k, std::uint64_t max_q) : p_(p), k_(k), q_(1) {
  if (!is_prime(p) || p == 2) throw ConfigError("E_FIELD", "characteristic " + std::to_string(p) + " is not an odd prime");
  if (k < 1) throw ConfigError("E_FIELD", "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_q)
      throw ConfigError("E_FIELD", "field " + std::to_string(p) + "^" + std::to_string(k) + " exceeds size bound " +
                                       std::to_string(max_q));
  }
  q_ = static_cast<std::uint32_t>(q);

  // tuples (m_0, ..., m_{k-1}) in lexicographic order, m_0 most significant
  modulus_.assign(k + 1, 0);
  modulus_[k] = 1;
  for (std::uint64_t code = 0;; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = k; i-- > 0;) {
      modulus_[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (irreducible(modulus_, p)) break;
  }

  auto to_poly = [&](Elem a) {
    Poly d(k);
    for (std::uint32_t i = 0; i < k; ++i, a /= p) d[i] = a % p;
    trim(d);
    return d;
  };
  auto from_poly = [&](const Poly& d) {
    Elem a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
    return a;
  };
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Poly r{1}, b = to_poly(a);
    for (; e; e >>= 1) {
      if (e & 1) r = poly_mulmod(r, b, modulus_, p);
      b = poly_mulmod(b, b, modulus_, p);
    }
    return from_poly(r);
  };

  const auto ls = prime_factors(q_ - 1);
  Elem g = 1;
  for (Elem cand = 1; cand < q_; ++cand) {
    bool ok = true;
    for (auto l : ls) ok = ok && slow_pow(cand, (q_ - 1) / l) != 1;
    if (ok) {
      g = cand;
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  const Poly gp = to_poly(g);
  Poly cur{1};
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    const Elem e = from_poly(cur);
    exp_[i] = e;
    log_[e] = i;
    cur = poly_mulmod(cur, gp, modulus_, p);
  }
}

FiniteField FiniteField::parse(const std::string& spec, std::uint64_t max_q) {
  auto number = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw ConfigError("E_FIELD", "bad field spec '" + spec + "', expected p^k");
    return v;
  };
  const auto caret = spec.find('^');
  if (caret == std::string::npos) return FiniteField(number(spec), 1, max_q);
  return FiniteField(number(std::string_view(spec).substr(0, caret)), number(std::string_view(spec).substr(caret + 1)),
                     max_q);
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % p_;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i, a /= p_, b /= p_, scale *= p_) out += (a % p_ + b % p_) % p_ * scale;
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return (p_ - a) % p_;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i, a /= p_, scale *= p_) out += (p_ - a % p_) % p_ * scale;
  return out;
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
  return exp_[s % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DomainError("E_FIELD_DIV", "inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
}

bool FiniteField::is_square(Elem a) const { return a == 0 || log_[a] % 2 == 0; }

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i, a /= p_) d[i] = a % p_;
  return d;
}

FiniteField::Elem FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem a = 0;
  for (std::size_t i = std::min<std::size_t>(d.size(), k_); i-- > 0;) a = a * p_ + d[i] % p_;
  return a;
}

}  // namespace frobtrace
