#pragma once

#include <cstdint>
#include <vector>

#include "frobtrace/cyclo.hpp"

namespace frobtrace {

// Polynomial with cyclotomic coefficients, constant term first.
using CycloPoly = std::vector<CycloNum>;

struct RootSearch {
  // Roots are looked for in Q(zeta_M), M = lcm(conductor, coefficient conductors).
  std::uint32_t conductor = 1;
  // Require every root to lie in the field; throws DomainError (E_NONSPLIT)
  // otherwise. When false, roots outside the field are silently dropped.
  bool require_split = true;
  int max_primes = 3;
};

// Roots of a nonzero polynomial inside a cyclotomic field, with multiplicity,
// sorted in canonical CycloNum order. Roots are found modulo a prime that
// splits completely in the field, lifted p-adically and recognised with LLL,
// then confirmed by exact division.
std::vector<CycloNum> roots_in_field(const CycloPoly& poly, const RootSearch& search);

CycloNum evaluate(const CycloPoly& poly, const CycloNum& x);

}  // namespace frobtrace
