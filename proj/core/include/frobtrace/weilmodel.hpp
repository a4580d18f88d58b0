#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "frobtrace/chartable.hpp"
#include "frobtrace/cyclo.hpp"
#include "frobtrace/groups.hpp"

namespace frobtrace {

using Complex = std::complex<double>;

enum class Mode { exact, numeric };

std::string to_string(Mode mode);

// Either an exact cyclotomic value or a complex double. Arithmetic between an
// exact and a numeric value throws ConfigError (E_MODE_MIX); use numeric() to
// convert explicitly.
class Scalar {
 public:
  Scalar() : v_(CycloNum()) {}
  Scalar(CycloNum v) : v_(std::move(v)) {}  // NOLINT
  Scalar(long v) : v_(CycloNum(v)) {}       // NOLINT
  Scalar(Complex v) : v_(v) {}              // NOLINT

  bool exact() const noexcept { return std::holds_alternative<CycloNum>(v_); }
  Mode mode() const noexcept { return exact() ? Mode::exact : Mode::numeric; }
  const CycloNum& cyclo() const;  // throws ConfigError when numeric
  Complex complex() const;        // embeds exact values
  Scalar numeric() const { return Scalar(complex()); }
  Scalar in_mode(Mode m) const { return m == Mode::exact ? *this : numeric(); }

  bool is_zero(double tol = 0.0) const;
  Scalar conj() const;
  Scalar pow(std::int64_t e) const;
  Scalar scaled(const mpq_class& factor) const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const;
  Scalar operator/(const Scalar& rhs) const;

  // Exact equality in exact mode; numeric values compare bitwise.
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

  std::string to_string() const;

 private:
  std::variant<CycloNum, Complex> v_;
};

// Residue field size plus the group; deg: G -> Z/f comes from the group.
struct LocalShape {
  Group group;
  std::uint64_t q;

  // Throws ConfigError (E_SHAPE_Q) unless q is a prime power.
  LocalShape(Group g, std::uint64_t q_);
};

struct FieldSlot {
  std::uint32_t g;
  std::uint32_t r;
  auto operator<=>(const FieldSlot&) const = default;
};

// Throws DomainError (E_SLOT) unless 0 <= g < |G|, r >= 1 and deg(g) = r mod f.
void check_slot(const LocalShape& shape, const FieldSlot& slot);

// rho_chi (x) Psi with Psi(Frob_K) having eigenvalues mu. `character` is a row
// of the character table; it need not be an orbit representative.
struct Component {
  std::size_t character;
  std::vector<Scalar> mu;
};

struct WeilRep {
  std::vector<Component> components;
  std::uint32_t dimension(const CharTable& table) const;
  Mode mode() const;
};

// tr rho(Frob_L) = sum_i chi_i(g) * sum_k mu_{i,k}^r
Scalar trace_at(const WeilRep& rep, const CharTable& table, const LocalShape& shape, const FieldSlot& slot);

enum class Provenance { trace, count };
enum class FrobeniusConvention { arithmetic, geometric };

std::string to_string(Provenance p);
std::string to_string(FrobeniusConvention c);

struct TraceEntry {
  Scalar trace;
  Provenance source = Provenance::trace;
};

struct TraceDataset {
  Mode mode = Mode::exact;
  // Recorded only; traces are never rewritten for the geometric convention.
  FrobeniusConvention frobenius = FrobeniusConvention::arithmetic;
  std::map<FieldSlot, TraceEntry> entries;
  std::vector<std::string> warnings;

  const Scalar* find(std::uint32_t g, std::uint32_t r) const;
  std::size_t size() const noexcept { return entries.size(); }
};

struct RawTrace {
  FieldSlot slot;
  Scalar trace;
};

// Duplicate keys must agree exactly, or to `rel_tol` relative to
// max(1, |a|, |b|) once the dataset is numeric. A single numeric entry makes
// the whole dataset numeric.
TraceDataset dataset_from_traces(const std::vector<RawTrace>& entries, const LocalShape& shape,
                                 FrobeniusConvention frobenius = FrobeniusConvention::arithmetic,
                                 double rel_tol = 1e-9);

struct CountEntry {
  FieldSlot slot;
  mpz_class count;
};

// trace = q^r + 1 - count. Counts breaking the Hasse-Weil bound for the given
// genus are kept and reported in `warnings`.
TraceDataset dataset_from_counts(const std::vector<CountEntry>& entries, const LocalShape& shape,
                                 std::uint32_t genus,
                                 FrobeniusConvention frobenius = FrobeniusConvention::arithmetic);

// Dataset of rep evaluated at every slot (g, r) with g in the coset of degree r,
// for each r in `degrees`.
TraceDataset dataset_from_rep(const WeilRep& rep, const CharTable& table, const LocalShape& shape,
                              const std::vector<std::uint32_t>& degrees);

struct SampleOptions {
  std::uint32_t max_dim = 12;
  // mu are drawn from Q(zeta_n) for n in this list, coefficients in [-bound, bound].
  std::vector<std::uint32_t> fields{1, 3, 4, 8, 12, 24};
  int coeff_bound = 1;
};

// Random exact WeilRep of dimension 1..max_dim over arbitrary rows of the table.
// Uses only rng() so the draw is identical across standard libraries.
WeilRep sample_weil_rep(const CharTable& table, std::mt19937_64& rng, const SampleOptions& options = {});

}  // namespace frobtrace
