#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobtrace/chartable.hpp"
#include "frobtrace/error.hpp"
#include "frobtrace/weilmodel.hpp"

namespace frobtrace {

// Raised when a trace dataset lacks the slots a computation needs. `missing`
// lists every absent (g, r).
struct MissingDataError : ConfigError {
  MissingDataError(std::vector<FieldSlot> slots, const std::string& detail)
      : ConfigError("E_MISSING_DATA", detail), missing(std::move(slots)) {}
  std::vector<FieldSlot> missing;
};

// Orbit of Irr(G) under tensoring with the characters psi_t(g) = zeta_f^{t deg g}
// of G/I. members[k] = rep (x) psi_{twists[k]}; rep is the first member in
// canonical row order.
struct TwistOrbit {
  std::size_t rep;
  std::uint32_t m;
  std::vector<std::size_t> members;
  std::vector<std::uint32_t> twists;
};

// <Res_I chi, Res_I chi>
mpq_class inertia_norm(const CharTable& table, const Group& group, std::size_t row);
// Number of t in Z/f with chi (x) psi_t = chi.
std::uint32_t twist_stabilizer(const CharTable& table, const Group& group, std::size_t row);

// Throws DomainError (E_ORBIT) if the two computations of m disagree or the
// inertia norm is not an integer.
std::vector<TwistOrbit> twist_orbits(const CharTable& table, const Group& group);

// Index into `orbits` of the orbit containing a character.
std::size_t orbit_of(const std::vector<TwistOrbit>& orbits, std::size_t character);

// p_d = 1/(|I| m) sum over g with deg g = d m of conj(chi(g)) trace(g, d m).
// A numeric dataset gives a numeric value.
Scalar psi_power_sum(const TwistOrbit& orbit, std::uint32_t d, const TraceDataset& data, const CharTable& table,
                     const Group& group);

// Slots psi_power_sum needs for orbit and d.
std::vector<FieldSlot> required_slots(const TwistOrbit& orbit, std::uint32_t d, const Group& group);

// Newton's identities: power sums p_1..p_N to e_1..e_N.
std::vector<Scalar> elementary_from_power_sums(const std::vector<Scalar>& p);
std::vector<Scalar> power_sums_of(const std::vector<Scalar>& values, std::size_t count);

struct RootOptions {
  std::uint32_t conductor = 1;  // exact mode search field
  double cluster_tol = 1e-6;    // numeric mode, after balancing
};

// Nonzero roots, with multiplicity, of the degree-N polynomial whose first N
// power sums are p. Sorted canonically in exact mode; numeric roots are
// sorted by (real, imag).
std::vector<Scalar> eigenvalues_from_power_sums(const std::vector<Scalar>& p, const RootOptions& options = {});

// Principal m-th root, argument in [0, 2 pi / m).
Complex principal_root(Complex x, std::uint32_t m);

// Per orbit representative, the multiset of lambda = mu^m.
struct CanonicalRep {
  Mode mode = Mode::exact;
  std::map<std::size_t, std::vector<Scalar>> lambda;
};

CanonicalRep canonical_form(const WeilRep& rep, const CharTable& table, const Group& group,
                            const std::vector<TwistOrbit>& orbits);

// Exact equality, or a tolerance matching of numeric multisets.
bool rep_equal(const CanonicalRep& a, const CanonicalRep& b, double tol = 1e-6);

struct ReconstructOptions {
  std::uint32_t dim_bound = 1;
  Mode mode = Mode::exact;
  // Extra conductor joined to lcm(exponent(G), field of the power sums).
  std::uint32_t conductor = 1;
  double cluster_tol = 1e-6;
  bool find_mu = true;
};

struct OrbitResult {
  std::size_t orbit;
  std::size_t rep_char;
  std::uint32_t m;
  std::uint32_t n_bound;
  std::vector<Scalar> power_sums;
  std::vector<Scalar> lambda;
  std::optional<std::vector<Scalar>> mu;
};

struct Reconstruction {
  Mode mode = Mode::exact;
  std::uint32_t dim = 0;
  std::vector<OrbitResult> orbits;  // orbits with a nonempty lambda multiset
  std::vector<std::size_t> skipped;  // orbits whose degree exceeds the bound
  CanonicalRep canonical;
  std::optional<WeilRep> rep;  // present when every mu was found
};

Reconstruction reconstruct(const TraceDataset& data, const CharTable& table, const LocalShape& shape,
                           const std::vector<TwistOrbit>& orbits, const ReconstructOptions& options);

}  // namespace frobtrace
