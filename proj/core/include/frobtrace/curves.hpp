#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "frobtrace/finite_field.hpp"

namespace frobtrace {

// y^2 = f(x) over F_q, f squarefree of degree >= 1.
class HyperCurve {
 public:
  using Elem = FiniteField::Elem;

  // f constant first; `field` must outlive the curve. Throws DomainError E_CURVE
  // (f constant) or E_NOT_SQUAREFREE.
  HyperCurve(const FiniteField& field, std::vector<Elem> f);
  // integer coefficients, reduced into the prime field
  static HyperCurve from_integers(const FiniteField& field, const std::vector<long long>& f);

  const FiniteField& field() const noexcept { return *field_; }
  const std::vector<Elem>& coefficients() const noexcept { return f_; }
  std::uint32_t poly_degree() const noexcept { return static_cast<std::uint32_t>(f_.size() - 1); }
  std::uint32_t genus() const noexcept { return (poly_degree() - 1) / 2; }
  Elem evaluate(Elem x) const;

  // f(x + c)
  HyperCurve shifted(Elem c) const;

 private:
  const FiniteField* field_;
  std::vector<Elem> f_;
};

// Points on the smooth projective model: affine solutions, plus 1 point at
// infinity for odd deg f, 2 for even deg f with square leading coefficient,
// else 0. Throws ConfigError (E_BOUND) if q > bound.
std::uint64_t count_points(const HyperCurve& curve, std::uint64_t bound = 1000000, unsigned jobs = 1);

// q + 1 - count
mpz_class lefschetz_t1(const mpz_class& count, const mpz_class& q);

// The unique t1 = 1 - count mod q with |t1| <= 2 g sqrt(q). Throws DomainError
// E_PRECONDITION unless q > 16 g^2, E_NO_T1 if the residue has no such lift.
mpz_class recover_t1(const mpz_class& count, const mpz_class& q, std::uint32_t genus);

}  // namespace frobtrace
