#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "frobtrace/chartable.hpp"
#include "frobtrace/curves.hpp"
#include "frobtrace/error.hpp"
#include "frobtrace/cyclo.hpp"
#include "frobtrace/group_library.hpp"
#include "frobtrace/groups.hpp"
#include "frobtrace/wdrep.hpp"
#include "frobtrace/weilmodel.hpp"

namespace frobtrace::testing {

// sqrt(-7) realised as the quadratic Gauss sum in Q(zeta_7).
inline CycloNum sqrt_m7() { return gauss_sum(7); }

// Table for C7 x| C3, columns [1, tau, tau^-1, sigma, sigma^-1] where sigma = 1
// and tau = 7 in the metacyclic(7, 3, 2) numbering.
inline std::vector<ClassColumn> c7c3_table_columns() { return {{0, 1}, {7, 7}, {14, 7}, {1, 3}, {6, 3}}; }

inline std::vector<std::vector<CycloNum>> c7c3_table_rows() {
  const CycloNum z3 = CycloNum::zeta(3), z3b = CycloNum::zeta(3, 2), s = sqrt_m7();
  const CycloNum a = (CycloNum(-1L) - s).scaled(mpq_class(1, 2));
  const CycloNum b = (CycloNum(-1L) + s).scaled(mpq_class(1, 2));
  return {
      {1L, 1L, 1L, 1L, 1L},
      {1L, z3b, z3, 1L, 1L},
      {1L, z3, z3b, 1L, 1L},
      {3L, 0L, 0L, a, b},
      {3L, 0L, 0L, b, a},
  };
}

inline Group c7c3() { return Group(library::named_shape("c7c3")); }

inline LocalShape c7c3_shape() { return LocalShape(c7c3(), 7); }

// Point counts over the residue fields of the slots (g, r), r = 1..6, for the
// the curve X (swapped = false) or its twin with 295 and 393 exchanged.
// Degrees other than 3 are filled in from the model rho1 (x) Psi1 + rho2 (x) Psi2
// with lambda^2 = -343: zero trace off inertia, and -343 (rho1 + rho2)(g) at r = 6.
inline std::vector<CountEntry> curve_x_counts(bool swapped) {
  const Group g = c7c3();
  std::vector<CountEntry> out;
  for (std::uint32_t r = 1; r <= 6; ++r) {
    mpz_class qr;
    mpz_ui_pow_ui(qr.get_mpz_t(), 7, r);
    for (std::uint32_t x : g.coset(r)) {
      mpz_class trace = 0;
      if (r == 3 && x != 0) {
        const bool square = x == 1 || x == 2 || x == 4;
        trace = (square != swapped) ? 49 : -49;
      }
      if (r == 6) trace = x == 0 ? -2058 : 343;
      out.push_back({{x, r}, qr + 1 - trace});
    }
  }
  return out;
}

// Row of the supplied character rho_1, i.e. value (-1 - sqrt(-7))/2 at sigma.
inline std::size_t rho1_row(const CharTable& t, const Group& g) {
  const CycloNum a = (CycloNum(-1L) - sqrt_m7()).scaled(mpq_class(1, 2));
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.at(g, i, 1) == a) return i;
  return t.size();
}

// Nonzero element of Q(zeta_n), n drawn from `fields`, small coefficients.
inline CycloNum random_cyclo(std::mt19937_64& rng, const std::vector<std::uint32_t>& fields = {1, 3, 4, 5, 8, 12, 24}) {
  const std::uint32_t n = fields[rng() % fields.size()];
  std::vector<mpq_class> c(euler_phi(n));
  CycloNum x;
  while (x.is_zero()) {
    for (auto& v : c) v = static_cast<long>(rng() % 5) - 2;
    x = CycloNum::from_power_basis(n, c);
  }
  return x;
}

// Weight-monodromy compatible: |alpha| = q^{(n-1)/2} in part n.
inline WDData random_compatible_wd(std::mt19937_64& rng) {
  static const std::uint64_t qs[] = {2, 3, 4, 5, 7, 9, 25, 49, 343};
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  WDData wd{qs[rng() % std::size(qs)], {}};
  const std::size_t parts = rng() % 4;
  for (std::size_t i = 0; i < parts; ++i) {
    const auto n = static_cast<std::uint32_t>(1 + rng() % 4);
    WDPart part{n, {}};
    const std::size_t count = 1 + rng() % 3;
    for (std::size_t k = 0; k < count; ++k)
      part.eigs.push_back(std::polar(std::pow(static_cast<double>(wd.q), (n - 1) / 2.0), angle(rng)));
    wd.parts.push_back(std::move(part));
  }
  return normalize(std::move(wd));
}

// Squarefree f of the given degree with random coefficients in F.
inline HyperCurve random_curve(const FiniteField& F, std::uint32_t deg, std::mt19937_64& rng) {
  for (;;) {
    std::vector<FiniteField::Elem> f(deg + 1);
    for (auto& c : f) c = static_cast<FiniteField::Elem>(rng() % F.size());
    if (f.back() == 0) continue;
    try {
      return HyperCurve(F, f);
    } catch (const DomainError&) {
    }
  }
}

}  // namespace frobtrace::testing
