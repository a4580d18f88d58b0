#include "frobtrace/weilmodel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frobtrace/error.hpp"

namespace frobtrace {

namespace {

[[noreturn]] void mode_mix() {
  throw ConfigError("E_MODE_MIX", "exact and numeric values mixed in one computation");
}

std::string complex_string(Complex c) {
  std::ostringstream os;
  os.precision(17);
  os << c.real() << (c.imag() < 0 ? " - " : " + ") << std::abs(c.imag()) << "i";
  return os.str();
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::exact ? "exact" : "float"; }
std::string to_string(Provenance p) { return p == Provenance::trace ? "trace" : "count"; }
std::string to_string(FrobeniusConvention c) {
  return c == FrobeniusConvention::arithmetic ? "arithmetic" : "geometric";
}

const CycloNum& Scalar::cyclo() const {
  if (!exact()) mode_mix();
  return std::get<CycloNum>(v_);
}

Complex Scalar::complex() const {
  if (exact()) return std::get<CycloNum>(v_).embed();
  return std::get<Complex>(v_);
}

bool Scalar::is_zero(double tol) const {
  if (exact()) return std::get<CycloNum>(v_).is_zero();
  return std::abs(std::get<Complex>(v_)) <= tol;
}

Scalar Scalar::conj() const {
  if (exact()) return std::get<CycloNum>(v_).conj();
  return std::conj(std::get<Complex>(v_));
}

Scalar Scalar::pow(std::int64_t e) const {
  if (exact()) return std::get<CycloNum>(v_).pow(e);
  Complex r = 1, b = std::get<Complex>(v_);
  if (e < 0) {
    b = 1.0 / b;
    e = -e;
  }
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::scaled(const mpq_class& factor) const {
  if (exact()) return std::get<CycloNum>(v_).scaled(factor);
  return std::get<Complex>(v_) * factor.get_d();
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (exact() != rhs.exact()) mode_mix();
  if (exact())
    std::get<CycloNum>(v_) += std::get<CycloNum>(rhs.v_);
  else
    std::get<Complex>(v_) += std::get<Complex>(rhs.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (exact() != rhs.exact()) mode_mix();
  if (exact())
    std::get<CycloNum>(v_) -= std::get<CycloNum>(rhs.v_);
  else
    std::get<Complex>(v_) -= std::get<Complex>(rhs.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (exact() != rhs.exact()) mode_mix();
  if (exact())
    std::get<CycloNum>(v_) *= std::get<CycloNum>(rhs.v_);
  else
    std::get<Complex>(v_) *= std::get<Complex>(rhs.v_);
  return *this;
}

Scalar Scalar::operator-() const {
  if (exact()) return -std::get<CycloNum>(v_);
  return -std::get<Complex>(v_);
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  if (exact() != rhs.exact()) mode_mix();
  if (exact()) return std::get<CycloNum>(v_) / std::get<CycloNum>(rhs.v_);
  return std::get<Complex>(v_) / std::get<Complex>(rhs.v_);
}

std::string Scalar::to_string() const {
  return exact() ? std::get<CycloNum>(v_).to_string() : complex_string(std::get<Complex>(v_));
}

LocalShape::LocalShape(Group g, std::uint64_t q_) : group(std::move(g)), q(q_) {
  bool prime_power = q >= 2;
  if (prime_power) {
    std::uint64_t p = 2;
    while (p * p <= q && q % p) ++p;
    if (q % p) p = q;
    std::uint64_t x = q;
    while (x % p == 0) x /= p;
    prime_power = x == 1;
  }
  if (!prime_power) throw ConfigError("E_SHAPE_Q", "residue field size " + std::to_string(q) + " is not a prime power");
}

void check_slot(const LocalShape& shape, const FieldSlot& slot) {
  const Group& g = shape.group;
  if (slot.g >= g.order())
    throw DomainError("E_SLOT", "element " + std::to_string(slot.g) + " out of range for group of order " +
                                    std::to_string(g.order()));
  if (slot.r < 1) throw DomainError("E_SLOT", "residue degree must be positive");
  if (g.degree(slot.g) != slot.r % g.residue_degree())
    throw DomainError("E_SLOT", "slot (g=" + std::to_string(slot.g) + ", r=" + std::to_string(slot.r) +
                                    ") incompatible: deg(g) = " + std::to_string(g.degree(slot.g)) + " mod " +
                                    std::to_string(g.residue_degree()));
}

std::uint32_t WeilRep::dimension(const CharTable& table) const {
  std::uint32_t d = 0;
  for (const auto& c : components) d += table.degree(c.character) * static_cast<std::uint32_t>(c.mu.size());
  return d;
}

Mode WeilRep::mode() const {
  for (const auto& c : components)
    for (const auto& m : c.mu)
      if (!m.exact()) return Mode::numeric;
  return Mode::exact;
}

Scalar trace_at(const WeilRep& rep, const CharTable& table, const LocalShape& shape, const FieldSlot& slot) {
  check_slot(shape, slot);
  const Mode mode = rep.mode();
  Scalar total = Scalar(0L).in_mode(mode);
  for (const auto& c : rep.components) {
    if (c.character >= table.size())
      throw DomainError("E_REP", "component refers to character " + std::to_string(c.character) + " of " +
                                     std::to_string(table.size()));
    Scalar power_sum = Scalar(0L).in_mode(mode);
    for (const auto& m : c.mu) power_sum += m.in_mode(mode).pow(slot.r);
    total += Scalar(table.at(shape.group, c.character, slot.g)).in_mode(mode) * power_sum;
  }
  return total;
}

const Scalar* TraceDataset::find(std::uint32_t g, std::uint32_t r) const {
  auto it = entries.find(FieldSlot{g, r});
  return it == entries.end() ? nullptr : &it->second.trace;
}

TraceDataset dataset_from_traces(const std::vector<RawTrace>& entries, const LocalShape& shape,
                                 FrobeniusConvention frobenius, double rel_tol) {
  TraceDataset out;
  out.frobenius = frobenius;
  out.mode = std::all_of(entries.begin(), entries.end(), [](const RawTrace& e) { return e.trace.exact(); })
                 ? Mode::exact
                 : Mode::numeric;
  for (const auto& e : entries) {
    check_slot(shape, e.slot);
    Scalar value = e.trace.in_mode(out.mode);
    auto [it, inserted] = out.entries.emplace(e.slot, TraceEntry{value, Provenance::trace});
    if (inserted) continue;
    const Scalar& prev = it->second.trace;
    bool agree;
    if (out.mode == Mode::exact) {
      agree = prev == value;
    } else {
      const Complex a = prev.complex(), b = value.complex();
      agree = std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
    }
    if (!agree)
      throw DomainError("E_TRACE_CONFLICT", "conflicting traces for (g=" + std::to_string(e.slot.g) + ", r=" +
                                                std::to_string(e.slot.r) + "): " + prev.to_string() + " vs " +
                                                value.to_string());
  }
  return out;
}

TraceDataset dataset_from_counts(const std::vector<CountEntry>& entries, const LocalShape& shape,
                                 std::uint32_t genus, FrobeniusConvention frobenius) {
  TraceDataset out;
  out.frobenius = frobenius;
  for (const auto& e : entries) {
    check_slot(shape, e.slot);
    if (sgn(e.count) < 0)
      throw DomainError("E_COUNT", "negative point count at (g=" + std::to_string(e.slot.g) + ", r=" +
                                       std::to_string(e.slot.r) + ")");
    mpz_class qr;
    mpz_ui_pow_ui(qr.get_mpz_t(), shape.q, e.slot.r);
    const mpz_class t = qr + 1 - e.count;
    const mpz_class bound = 4 * mpz_class(genus) * genus * qr;
    if (t * t > bound)
      out.warnings.push_back("Hasse-Weil bound exceeded at (g=" + std::to_string(e.slot.g) + ", r=" +
                             std::to_string(e.slot.r) + "): trace " + t.get_str());
    const Scalar value{CycloNum(t)};
    auto [it, inserted] = out.entries.emplace(e.slot, TraceEntry{value, Provenance::count});
    if (!inserted && !(it->second.trace == value))
      throw DomainError("E_TRACE_CONFLICT", "conflicting counts for (g=" + std::to_string(e.slot.g) + ", r=" +
                                                std::to_string(e.slot.r) + ")");
  }
  return out;
}

TraceDataset dataset_from_rep(const WeilRep& rep, const CharTable& table, const LocalShape& shape,
                              const std::vector<std::uint32_t>& degrees) {
  TraceDataset out;
  out.mode = rep.mode();
  for (std::uint32_t r : degrees)
    for (std::uint32_t g : shape.group.coset(r)) {
      const FieldSlot slot{g, r};
      out.entries.emplace(slot, TraceEntry{trace_at(rep, table, shape, slot), Provenance::trace});
    }
  return out;
}

WeilRep sample_weil_rep(const CharTable& table, std::mt19937_64& rng, const SampleOptions& options) {
  auto below = [&](std::uint64_t n) { return rng() % n; };
  WeilRep rep;
  std::uint32_t budget = 1 + static_cast<std::uint32_t>(below(options.max_dim));
  while (budget > 0) {
    std::vector<std::size_t> fitting;
    for (std::size_t i = 0; i < table.size(); ++i)
      if (table.degree(i) <= budget) fitting.push_back(i);
    const std::size_t row = fitting[below(fitting.size())];
    const std::uint32_t deg = table.degree(row);
    const auto count = 1 + static_cast<std::uint32_t>(below(budget / deg));
    Component comp{row, {}};
    for (std::uint32_t k = 0; k < count; ++k) {
      const std::uint32_t n = options.fields[below(options.fields.size())];
      std::vector<mpq_class> c(euler_phi(n));
      CycloNum mu;
      while (mu.is_zero()) {
        for (auto& x : c) x = static_cast<long>(below(2 * options.coeff_bound + 1)) - options.coeff_bound;
        mu = CycloNum::from_power_basis(n, c);
      }
      comp.mu.emplace_back(std::move(mu));
    }
    budget -= deg * count;
    rep.components.push_back(std::move(comp));
    if (below(3) == 0) break;
  }
  return rep;
}

}  // namespace frobtrace
