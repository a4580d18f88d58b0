#include "frobtrace/cyclo_roots.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "frobtrace/error.hpp"
#include "frobtrace/lll.hpp"

namespace frobtrace {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;
using ModPoly = std::vector<u64>;

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(u128(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly poly_rem(ModPoly a, const ModPoly& m, const Zp& f) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 inv = f.inv(m.back());
  while (a.size() > dm) {
    const u64 c = f.mul(a.back(), inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

ModPoly poly_div(ModPoly a, const ModPoly& m, const Zp& f) {
  const std::size_t dm = m.size() - 1;
  if (a.size() <= dm) return {};
  ModPoly q(a.size() - dm, 0);
  const u64 inv = f.inv(m.back());
  for (std::size_t k = a.size(); k-- > dm;) {
    const u64 c = f.mul(a[k], inv);
    q[k - dm] = c;
    for (std::size_t i = 0; i <= dm; ++i) a[k - dm + i] = f.sub(a[k - dm + i], f.mul(c, m[i]));
  }
  trim(q);
  return q;
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, const Zp& f) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return poly_rem(std::move(c), m, f);
}

ModPoly poly_powmod(ModPoly base, u64 e, const ModPoly& m, const Zp& f) {
  ModPoly r = poly_rem({1}, m, f);
  base = poly_rem(std::move(base), m, f);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, f);
    base = poly_mulmod(base, base, m, f);
    e >>= 1;
  }
  return r;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, const Zp& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_rem(std::move(a), b, f);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = f.inv(a.back());
    for (auto& x : a) x = f.mul(x, inv);
  }
  return a;
}

// Roots of a monic squarefree f that splits into distinct linear factors.
void split_roots(const ModPoly& f, const Zp& zp, std::mt19937_64& rng, std::vector<u64>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(zp.sub(0, zp.mul(f[0], zp.inv(f[1]))));
    return;
  }
  std::uniform_int_distribution<u64> pick(0, zp.p - 1);
  while (true) {
    ModPoly h = poly_powmod({pick(rng), 1}, (zp.p - 1) / 2, f, zp);
    if (h.empty()) h = {0};
    h[0] = zp.sub(h[0], 1);
    ModPoly g = poly_gcd(f, h, zp);
    if (g.size() > 1 && g.size() < f.size()) {
      split_roots(g, zp, rng, out);
      split_roots(poly_div(f, g, zp), zp, rng, out);
      return;
    }
  }
}

bool is_prime(u64 n) {
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

// Image of c in Z/mod under zeta_M -> W, given the power table of W.
mpz_class to_padic(const CycloNum& c, std::uint32_t M, const std::vector<mpz_class>& wpow, const mpz_class& mod) {
  const std::uint32_t step = M / c.conductor();
  mpz_class s = 0;
  const auto& num = c.numerators();
  for (std::size_t j = 0; j < num.size(); ++j)
    if (num[j] != 0) s += num[j] * wpow[(step * j) % M];
  mpz_class inv;
  mpz_class den = c.denominator() % mod;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  s = (s % mod) * inv % mod;
  if (s < 0) s += mod;
  return s;
}

std::vector<mpz_class> power_table(const mpz_class& w, std::uint32_t M, const mpz_class& mod) {
  std::vector<mpz_class> out(M);
  out[0] = 1;
  for (std::uint32_t i = 1; i < M; ++i) out[i] = out[i - 1] * w % mod;
  return out;
}

std::vector<mpz_class> derivative(const std::vector<mpz_class>& a, const mpz_class& mod) {
  std::vector<mpz_class> out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * static_cast<unsigned long>(i) % mod);
  return out;
}

mpz_class eval_mod(const std::vector<mpz_class>& a, const mpz_class& x, const mpz_class& mod) {
  mpz_class v = 0;
  for (std::size_t k = a.size(); k-- > 0;) v = (v * x + a[k]) % mod;
  if (v < 0) v += mod;
  return v;
}

// Divide by (X - x) if x is a root; returns false otherwise.
bool divide_linear(CycloPoly& poly, const CycloNum& x) {
  const std::size_t n = poly.size() - 1;
  CycloPoly q(n);
  CycloNum carry = poly[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = poly[k] + carry * x;
  }
  if (!carry.is_zero()) return false;
  poly = std::move(q);
  return true;
}

std::vector<std::uint32_t> field_ladder(std::uint32_t M) {
  std::vector<std::uint32_t> ds;
  for (std::uint32_t d = 1; d <= M; ++d)
    if (M % d == 0 && d % 4 != 2) ds.push_back(d);
  std::sort(ds.begin(), ds.end(), [](std::uint32_t a, std::uint32_t b) {
    const auto pa = euler_phi(a), pb = euler_phi(b);
    return pa != pb ? pa < pb : a < b;
  });
  return ds;
}

std::size_t bits_for(std::size_t dim) { return dim * (64 + dim); }

// Try to write the p-adic number a as an element of Q(zeta_d) via LLL.
std::vector<CycloNum> recognise(const mpz_class& a_full, std::uint32_t d, std::uint32_t M, const mpz_class& w_full,
                                u64 p, std::size_t scale) {
  const std::size_t phi = euler_phi(d);
  const std::size_t dim = phi + 1;
  const std::size_t bits = bits_for(dim) * scale;
  mpz_class mod = 1;
  const mpz_class pz(static_cast<unsigned long>(p));
  while (mpz_sizeinbase(mod.get_mpz_t(), 2) < bits) mod *= pz;
  const mpz_class a = a_full % mod;
  mpz_class wd;
  const mpz_class wm = w_full % mod;
  const mpz_class e(M / d);
  mpz_powm(wd.get_mpz_t(), wm.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());

  IntMatrix basis(dim, std::vector<mpz_class>(dim, 0));
  basis[0][0] = mod;
  mpz_class wj = 1;
  for (std::size_t j = 1; j < phi; ++j) {
    wj = wj * wd % mod;
    basis[j][0] = (mod - wj) % mod;
    basis[j][j] = 1;
  }
  basis[phi][0] = a;
  basis[phi][phi] = 1;
  if (!lll_reduce(basis)) return {};

  std::vector<CycloNum> out;
  for (std::size_t r = 0; r < std::min<std::size_t>(dim, 2); ++r) {
    const auto& v = basis[r];
    mpz_class den = v[phi];
    if (den == 0) continue;
    std::vector<mpq_class> c(phi);
    for (std::size_t j = 0; j < phi; ++j) {
      c[j] = mpq_class(v[j], den);
      c[j].canonicalize();
    }
    out.push_back(CycloNum::from_power_basis(d, c));
  }
  return out;
}

}  // namespace

CycloNum evaluate(const CycloPoly& poly, const CycloNum& x) {
  CycloNum v;
  for (std::size_t k = poly.size(); k-- > 0;) v = v * x + poly[k];
  return v;
}

std::vector<CycloNum> roots_in_field(const CycloPoly& poly_in, const RootSearch& search) {
  CycloPoly poly = poly_in;
  while (!poly.empty() && poly.back().is_zero()) poly.pop_back();
  if (poly.empty()) throw DomainError("E_ROOTS_ZERO", "root search on the zero polynomial");

  std::vector<CycloNum> roots;
  while (poly.size() > 1 && poly.front().is_zero()) {
    poly.erase(poly.begin());
    roots.emplace_back();
  }
  const std::size_t degree = poly.size() - 1;
  if (degree == 0) return roots;
  {
    const CycloNum inv = poly.back().inverse();
    for (auto& c : poly) c *= inv;
  }

  std::uint32_t M = std::max<std::uint32_t>(1, search.conductor);
  for (const auto& c : poly) M = std::lcm(M, c.conductor());
  if (M % 4 == 2) M /= 2;

  mpz_class den_product = 1;
  for (const auto& c : poly) den_product = lcm(den_product, c.denominator());

  const auto ladder = field_ladder(M);
  const std::size_t max_bits = bits_for(euler_phi(M) + 1);

  struct ModRoots {
    u64 w = 1;
    std::vector<u64> roots;
    std::vector<std::size_t> mult;
    std::size_t found = 0;
  };
  const auto qs = prime_factors(M);
  auto roots_mod = [&](u64 prime) {
    const Zp zp{prime};
    ModRoots out;
    // primitive M-th root of unity mod p
    for (u64 x = 2; M > 1; ++x) {
      out.w = zp.pow(x, (prime - 1) / M);
      bool ok = true;
      for (auto q : qs) ok = ok && zp.pow(out.w, M / q) != 1;
      if (ok) break;
    }
    const mpz_class pz(static_cast<unsigned long>(prime));
    ModPoly f(poly.size());
    const auto wp = power_table(mpz_class(static_cast<unsigned long>(out.w)), M, pz);
    for (std::size_t i = 0; i < poly.size(); ++i) f[i] = to_padic(poly[i], M, wp, pz).get_ui();

    // distinct roots mod p, then multiplicities
    ModPoly xpx = poly_powmod({0, 1}, prime, f, zp);
    xpx.resize(std::max<std::size_t>(xpx.size(), 2), 0);
    xpx[1] = zp.sub(xpx[1], 1);
    const ModPoly g = poly_gcd(f, xpx, zp);
    std::mt19937_64 rng(prime);
    split_roots(g, zp, rng, out.roots);
    std::sort(out.roots.begin(), out.roots.end());
    for (u64 r : out.roots) {
      ModPoly h = f;
      std::size_t k = 0;
      while (h.size() > 1) {
        ModPoly q = poly_div(h, {zp.sub(0, r), 1}, zp);
        if (!poly_rem(h, {zp.sub(0, r), 1}, zp).empty()) break;
        h = std::move(q);
        ++k;
      }
      out.mult.push_back(k);
      out.found += k;
    }
    return out;
  };
  auto next_prime = [&](u64 from) {
    while (!is_prime(from) || mpz_divisible_ui_p(den_product.get_mpz_t(), static_cast<unsigned long>(from)))
      from += M;
    return from;
  };
  auto nonsplit = [&] {
    return DomainError("E_NONSPLIT", "polynomial of degree " + std::to_string(degree) +
                                         " does not split into linear factors over Q(zeta_" + std::to_string(M) +
                                         ")");
  };

  u64 p = ((u64(1) << 30) / M + 1) * M + 1;
  if (search.require_split) {
    // f splits over Q(zeta_M) only if it splits mod every prime = 1 mod M
    u64 probe = ((u64(1) << 20) / M + 1) * M + 1;
    for (int i = 0; i < 12; ++i) {
      probe = next_prime(probe);
      if (roots_mod(probe).found < degree) throw nonsplit();
      probe += M;
    }
  }
  for (int attempt = 0; attempt < search.max_primes; ++attempt) {
    p = next_prime(p);
    const u64 current = p;
    p += M;
    const mpz_class pz(static_cast<unsigned long>(current));
    const ModRoots mr = roots_mod(current);
    const u64 w = mr.w;
    const auto& mod_roots = mr.roots;
    const auto& mult = mr.mult;
    if (search.require_split && mr.found < degree) throw nonsplit();

    bool prime_failed = false;
    std::vector<CycloNum> candidates;
    for (std::size_t scale = 1; scale <= (search.require_split ? 4u : 1u); scale *= 2) {
      mpz_class mod = 1;
      while (mpz_sizeinbase(mod.get_mpz_t(), 2) < max_bits * scale + 64) mod *= pz;
      // lift the root of unity: Newton on x^M - 1
      mpz_class wl(static_cast<unsigned long>(w));
      const mpz_class Mz(M);
      for (std::size_t it = 0; it < 64; ++it) {
        mpz_class wm1, val;
        const mpz_class e1(M - 1);
        mpz_powm(wm1.get_mpz_t(), wl.get_mpz_t(), e1.get_mpz_t(), mod.get_mpz_t());
        val = (wm1 * wl - 1) % mod;
        if (val == 0) break;
        mpz_class inv, deriv = Mz * wm1 % mod;
        mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), mod.get_mpz_t());
        wl = ((wl - val * inv) % mod + mod) % mod;
      }
      const auto wp = power_table(wl, M, mod);
      std::vector<mpz_class> lifted(poly.size());
      for (std::size_t i = 0; i < poly.size(); ++i) lifted[i] = to_padic(poly[i], M, wp, mod);

      candidates.clear();
      prime_failed = false;
      for (std::size_t idx = 0; idx < mod_roots.size(); ++idx) {
        std::vector<mpz_class> q = lifted;
        for (std::size_t k = 1; k < mult[idx]; ++k) q = derivative(q, mod);
        const auto dq = derivative(q, mod);
        mpz_class a(static_cast<unsigned long>(mod_roots[idx]));
        if (eval_mod(dq, a, pz) == 0) {
          prime_failed = true;
          break;
        }
        for (std::size_t it = 0; it < 64; ++it) {
          const mpz_class v = eval_mod(q, a, mod);
          if (v == 0) break;
          mpz_class inv, dv = eval_mod(dq, a, mod);
          mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t());
          a = ((a - v * inv) % mod + mod) % mod;
        }
        for (std::uint32_t d : ladder) {
          bool hit = false;
          for (const auto& x : recognise(a, d, M, wl, current, scale)) {
            if (evaluate(poly, x).is_zero()) {
              candidates.push_back(x);
              hit = true;
              break;
            }
          }
          if (hit) break;
        }
      }
      if (prime_failed) break;

      CycloPoly rest = poly;
      std::vector<CycloNum> got;
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (const auto& x : candidates)
        while (rest.size() > 1 && divide_linear(rest, x)) got.push_back(x);
      if (!search.require_split || got.size() == degree) {
        roots.insert(roots.end(), got.begin(), got.end());
        std::sort(roots.begin(), roots.end());
        return roots;
      }
    }
  }
  if (search.require_split)
    throw DomainError("E_NONSPLIT", "could not recover all roots of a degree " + std::to_string(degree) +
                                        " polynomial in Q(zeta_" + std::to_string(M) + ")");
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace frobtrace
