#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A CycloNum is stored over the power basis {zeta_n^j : 0 <= j < phi(n)},
// reduced modulo the n-th cyclotomic polynomial, always over the smallest
// conductor that contains it. Equality is therefore coefficientwise.
// Coefficients are integers over one positive denominator.

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace frobtrace {

using ComplexApprox = std::complex<double>;

class CycloNum {
 public:
  CycloNum();  // zero
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  CycloNum(const mpz_class& value);  // NOLINT
  CycloNum(const mpq_class& value);  // NOLINT

  // zeta_n^k under the fixed embedding zeta_n -> exp(2 pi i / n).
  static CycloNum zeta(std::uint32_t n, std::int64_t k = 1);

  // Element sum_j coeffs[j] zeta_n^j. coeffs.size() must equal phi(n).
  static CycloNum from_power_basis(std::uint32_t n, const std::vector<mpq_class>& coeffs);

  // Element sum_j coeffs[j] zeta_n^j for an arbitrary-length coefficient list,
  // exponents taken modulo n.
  static CycloNum from_cyclic(std::uint32_t n, const std::vector<mpq_class>& coeffs);

  std::uint32_t conductor() const noexcept { return n_; }
  std::vector<mpq_class> coeffs() const;
  const std::vector<mpz_class>& numerators() const noexcept { return num_; }
  const mpz_class& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept;
  bool is_rational() const noexcept { return n_ == 1; }
  mpq_class to_rational() const;  // requires is_rational()

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& rhs);
  CycloNum& operator-=(const CycloNum& rhs);
  CycloNum& operator*=(const CycloNum& rhs);
  CycloNum& operator/=(const CycloNum& rhs);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }

  // Multiply by a rational without leaving the field.
  CycloNum scaled(const mpq_class& factor) const;

  CycloNum inverse() const;  // throws DomainError on zero
  CycloNum conj() const;     // zeta -> zeta^{-1}
  CycloNum galois(std::int64_t k) const;  // zeta_n -> zeta_n^k, gcd(k, n) = 1
  CycloNum pow(std::int64_t e) const;

  ComplexApprox embed() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  // Canonical total order: conductor first, then power-basis coefficients
  // lexicographically. Used for deterministic sorting only.
  friend std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b);

  std::string to_string() const;

 private:
  CycloNum(std::uint32_t n, std::vector<mpz_class> num, mpz_class den);
  void normalize();

  std::uint32_t n_ = 1;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

inline CycloNum conj(const CycloNum& a) { return a.conj(); }
inline ComplexApprox embed(const CycloNum& a) { return a.embed(); }

// sum_{a=1}^{p-1} (a/p) zeta_p^a; squares to -p for p = 3 mod 4.
CycloNum gauss_sum(std::uint32_t p);

std::uint32_t euler_phi(std::uint32_t n);
std::vector<std::uint32_t> prime_factors(std::uint32_t n);
std::uint32_t lcm_conductor(std::uint32_t a, std::uint32_t b);
// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(std::uint32_t n);

std::ostream& operator<<(std::ostream& os, const CycloNum& a);

}  // namespace frobtrace
