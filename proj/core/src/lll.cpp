#include "frobtrace/lll.hpp"

#include <algorithm>

namespace frobtrace {

namespace {

mpz_class dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// nearest integer to a / b for b > 0
mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_class num = 2 * a + b;
  mpz_class den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

bool lll_reduce(IntMatrix& b) {
  const std::size_t n = b.size();
  if (n <= 1) return true;
  // 1-based indices below follow the usual presentation; d[0] = 1.
  std::vector<mpz_class> d(n + 1, 0);
  std::vector<std::vector<mpz_class>> lam(n + 1, std::vector<mpz_class>(n + 1, 0));
  auto B = [&](std::size_t i) -> std::vector<mpz_class>& { return b[i - 1]; };

  d[0] = 1;
  d[1] = dot(B(1), B(1));
  if (d[1] == 0) return false;
  std::size_t k = 2, kmax = 1;

  auto red = [&](std::size_t kk, std::size_t l) {
    if (2 * abs(lam[kk][l]) <= d[l]) return;
    const mpz_class q = round_div(lam[kk][l], d[l]);
    auto& bk = B(kk);
    const auto& bl = B(l);
    for (std::size_t i = 0; i < bk.size(); ++i) bk[i] -= q * bl[i];
    lam[kk][l] -= q * d[l];
    for (std::size_t i = 1; i < l; ++i) lam[kk][i] -= q * lam[l][i];
  };

  auto swap = [&](std::size_t kk) {
    std::swap(B(kk), B(kk - 1));
    for (std::size_t j = 1; j + 2 <= kk; ++j) std::swap(lam[kk][j], lam[kk - 1][j]);
    const mpz_class l = lam[kk][kk - 1];
    const mpz_class nb = (d[kk - 2] * d[kk] + l * l) / d[kk - 1];
    for (std::size_t i = kk + 1; i <= kmax; ++i) {
      const mpz_class t = lam[i][kk];
      lam[i][kk] = (d[kk] * lam[i][kk - 1] - l * t) / d[kk - 1];
      lam[i][kk - 1] = (nb * t + l * lam[i][kk]) / d[kk];
    }
    d[kk - 1] = nb;
  };

  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        mpz_class u = dot(B(k), B(j));
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) return false;
    }
    red(k, k - 1);
    const mpz_class& l = lam[k][k - 1];
    if (100 * d[k] * d[k - 2] < 99 * d[k - 1] * d[k - 1] - 100 * l * l) {
      swap(k);
      k = std::max<std::size_t>(2, k - 1);
    } else {
      for (std::size_t ll = k - 1; ll-- > 1;) red(k, ll);
      ++k;
    }
  }
  return true;
}

}  // namespace frobtrace
