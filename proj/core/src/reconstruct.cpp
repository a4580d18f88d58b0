#include "frobtrace/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "frobtrace/cyclo_roots.hpp"

namespace frobtrace {

namespace {

std::string slot_list(const std::vector<FieldSlot>& slots) {
  std::ostringstream os;
  for (std::size_t i = 0; i < slots.size(); ++i) os << (i ? " " : "") << "(g=" << slots[i].g << ",r=" << slots[i].r << ")";
  return os.str();
}

std::vector<CycloNum> twisted(const std::vector<CycloNum>& row, const Group& group, std::uint32_t t) {
  const std::uint32_t f = group.residue_degree();
  std::vector<CycloNum> out(row.size());
  const auto& reps = group.classes().reps;
  for (std::size_t c = 0; c < row.size(); ++c)
    out[c] = row[c] * CycloNum::zeta(f, static_cast<std::int64_t>(t) * group.degree(reps[c]));
  return out;
}

bool numeric_less(const Scalar& a, const Scalar& b) {
  const Complex x = a.complex(), y = b.complex();
  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

void sort_values(std::vector<Scalar>& v) {
  if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.exact(); }))
    std::sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) { return a.cyclo() < b.cyclo(); });
  else
    std::sort(v.begin(), v.end(), numeric_less);
}

}  // namespace

mpq_class inertia_norm(const CharTable& table, const Group& group, std::size_t row) {
  CycloNum s;
  const auto& cls = group.classes();
  for (std::uint32_t c = 0; c < cls.count(); ++c) {
    if (!group.in_inertia(cls.reps[c])) continue;
    s += (table.rows[row][c] * table.rows[row][group.inverse_class(c)]).scaled(mpq_class(cls.sizes[c]));
  }
  if (!s.is_rational()) throw DomainError("E_ORBIT", "inertia inner product is not rational: " + s.to_string());
  mpq_class v = s.to_rational() / group.inertia_order();
  v.canonicalize();
  return v;
}

std::uint32_t twist_stabilizer(const CharTable& table, const Group& group, std::size_t row) {
  std::uint32_t count = 0;
  for (std::uint32_t t = 0; t < group.residue_degree(); ++t)
    if (twisted(table.rows[row], group, t) == table.rows[row]) ++count;
  return count;
}

std::vector<TwistOrbit> twist_orbits(const CharTable& table, const Group& group) {
  const std::size_t k = table.size();
  const std::uint32_t f = group.residue_degree();
  std::vector<char> assigned(k, 0);
  std::vector<TwistOrbit> orbits;
  for (std::size_t i = 0; i < k; ++i) {
    if (assigned[i]) continue;
    TwistOrbit orbit{i, 0, {}, {}};
    std::uint32_t stab = 0;
    std::map<std::size_t, std::uint32_t> first_twist;
    for (std::uint32_t t = 0; t < f; ++t) {
      const auto row = twisted(table.rows[i], group, t);
      const auto it = std::find(table.rows.begin(), table.rows.end(), row);
      if (it == table.rows.end())
        throw DomainError("E_ORBIT", "twist of character " + std::to_string(i) + " is not a row of the table");
      const auto j = static_cast<std::size_t>(it - table.rows.begin());
      first_twist.emplace(j, t);
      if (j == i) ++stab;
    }
    for (const auto& [j, t] : first_twist) {
      orbit.members.push_back(j);
      orbit.twists.push_back(t);
      assigned[j] = 1;
    }
    const mpq_class norm = inertia_norm(table, group, i);
    if (norm.get_den() != 1)
      throw DomainError("E_ORBIT", "inertia inner product of character " + std::to_string(i) + " is " + norm.get_str());
    if (norm != stab)
      throw DomainError("E_ORBIT", "character " + std::to_string(i) + ": inertia inner product " + norm.get_str() +
                                       " differs from twist stabilizer order " + std::to_string(stab));
    orbit.m = stab;
    if (orbit.members.size() * stab != f)
      throw DomainError("E_ORBIT", "orbit size times m differs from f for character " + std::to_string(i));
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::size_t orbit_of(const std::vector<TwistOrbit>& orbits, std::size_t character) {
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (std::find(orbits[o].members.begin(), orbits[o].members.end(), character) != orbits[o].members.end()) return o;
  throw DomainError("E_ORBIT", "character " + std::to_string(character) + " lies in no orbit");
}

std::vector<FieldSlot> required_slots(const TwistOrbit& orbit, std::uint32_t d, const Group& group) {
  const std::uint32_t r = d * orbit.m;
  std::vector<FieldSlot> out;
  for (std::uint32_t g : group.coset(r)) out.push_back({g, r});
  return out;
}

Scalar psi_power_sum(const TwistOrbit& orbit, std::uint32_t d, const TraceDataset& data, const CharTable& table,
                     const Group& group) {
  const auto slots = required_slots(orbit, d, group);
  std::vector<FieldSlot> missing;
  for (const auto& s : slots)
    if (!data.find(s.g, s.r)) missing.push_back(s);
  if (!missing.empty())
    throw MissingDataError(missing, "missing traces for orbit of character " + std::to_string(orbit.rep) + ", d = " +
                                        std::to_string(d) + ": " + slot_list(missing));

  const Mode mode = data.mode;
  std::map<std::uint32_t, Scalar> by_class;
  for (const auto& s : slots) {
    const Scalar& t = *data.find(s.g, s.r);
    if (t.mode() != mode) throw ConfigError("E_MODE_MIX", "dataset entry mode differs from dataset mode");
    auto [it, inserted] = by_class.emplace(group.class_of(s.g), t);
    if (!inserted) it->second += t;
  }
  Scalar total = Scalar(0L).in_mode(mode);
  for (const auto& [c, sum] : by_class) total += Scalar(table.rows[orbit.rep][c].conj()).in_mode(mode) * sum;
  return total.scaled(mpq_class(1, static_cast<long>(group.inertia_order()) * orbit.m));
}

CanonicalRep canonical_form(const WeilRep& rep, const CharTable& table, const Group& group,
                            const std::vector<TwistOrbit>& orbits) {
  CanonicalRep out;
  out.mode = rep.mode();
  const std::uint32_t f = group.residue_degree();
  for (const auto& comp : rep.components) {
    if (comp.character >= table.size())
      throw DomainError("E_REP", "component refers to character " + std::to_string(comp.character));
    const auto& orbit = orbits[orbit_of(orbits, comp.character)];
    const auto pos = std::find(orbit.members.begin(), orbit.members.end(), comp.character) - orbit.members.begin();
    const Scalar twist = Scalar(CycloNum::zeta(f, orbit.twists[pos])).in_mode(out.mode);
    auto& lambdas = out.lambda[orbit.rep];
    for (const auto& mu : comp.mu) lambdas.push_back((twist * mu.in_mode(out.mode)).pow(orbit.m));
  }
  for (auto it = out.lambda.begin(); it != out.lambda.end();) {
    if (it->second.empty()) {
      it = out.lambda.erase(it);
    } else {
      sort_values(it->second);
      ++it;
    }
  }
  return out;
}

bool rep_equal(const CanonicalRep& a, const CanonicalRep& b, double tol) {
  if (a.mode == Mode::exact && b.mode == Mode::exact) return a.lambda == b.lambda;
  if (a.lambda.size() != b.lambda.size()) return false;
  for (auto ia = a.lambda.begin(), ib = b.lambda.begin(); ia != a.lambda.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.size() != ib->second.size()) return false;
    std::vector<char> used(ib->second.size(), 0);
    for (const auto& x : ia->second) {
      const Complex cx = x.complex();
      bool matched = false;
      for (std::size_t j = 0; j < ib->second.size() && !matched; ++j) {
        if (used[j]) continue;
        const Complex cy = ib->second[j].complex();
        if (std::abs(cx - cy) <= tol * std::max({1.0, std::abs(cx), std::abs(cy)})) {
          used[j] = 1;
          matched = true;
        }
      }
      if (!matched) return false;
    }
  }
  return true;
}

Reconstruction reconstruct(const TraceDataset& data_in, const CharTable& table, const LocalShape& shape,
                           const std::vector<TwistOrbit>& orbits, const ReconstructOptions& options) {
  if (options.dim_bound < 1) throw ConfigError("E_CONFIG", "dimension bound must be at least 1");
  if (options.mode == Mode::exact && data_in.mode == Mode::numeric)
    throw ConfigError("E_MODE", "numeric traces cannot be reconstructed in exact mode");
  const Group& group = shape.group;

  TraceDataset numeric_copy;
  const TraceDataset* data = &data_in;
  if (options.mode == Mode::numeric && data_in.mode == Mode::exact) {
    numeric_copy = data_in;
    numeric_copy.mode = Mode::numeric;
    for (auto& [slot, entry] : numeric_copy.entries) entry.trace = entry.trace.numeric();
    data = &numeric_copy;
  }

  Reconstruction out;
  out.mode = options.mode;
  out.canonical.mode = options.mode;

  std::vector<FieldSlot> missing;
  for (const auto& orbit : orbits) {
    const std::uint32_t n_bound = options.dim_bound / table.degree(orbit.rep);
    for (std::uint32_t d = 1; d <= n_bound; ++d)
      for (const auto& s : required_slots(orbit, d, group))
        if (!data->find(s.g, s.r)) missing.push_back(s);
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw MissingDataError(missing, "dataset lacks " + std::to_string(missing.size()) +
                                        " slots needed for dimension bound " + std::to_string(options.dim_bound) +
                                        ": " + slot_list(missing));
  }

  bool all_mu = true;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const auto& orbit = orbits[o];
    const std::uint32_t deg = table.degree(orbit.rep);
    const std::uint32_t n_bound = options.dim_bound / deg;
    if (n_bound == 0) {
      out.skipped.push_back(o);
      continue;
    }
    OrbitResult res{o, orbit.rep, orbit.m, n_bound, {}, {}, std::nullopt};
    std::uint32_t conductor = std::lcm(group.exponent(), std::max<std::uint32_t>(1, options.conductor));
    for (std::uint32_t d = 1; d <= n_bound; ++d) {
      res.power_sums.push_back(psi_power_sum(orbit, d, *data, table, group));
      if (res.power_sums.back().exact()) conductor = std::lcm(conductor, res.power_sums.back().cyclo().conductor());
    }
    res.lambda = eigenvalues_from_power_sums(res.power_sums, {conductor, options.cluster_tol});
    if (res.lambda.empty()) continue;
    out.dim += deg * static_cast<std::uint32_t>(res.lambda.size());

    if (options.find_mu) {
      std::vector<Scalar> mu;
      for (const auto& lambda : res.lambda) {
        if (!lambda.exact()) {
          mu.emplace_back(principal_root(lambda.complex(), orbit.m));
          continue;
        }
        if (orbit.m == 1) {
          mu.push_back(lambda);
          continue;
        }
        CycloPoly poly(orbit.m + 1, CycloNum());
        poly[0] = -lambda.cyclo();
        poly[orbit.m] = CycloNum(1L);
        const auto roots = roots_in_field(poly, {std::lcm(conductor, lambda.cyclo().conductor()), false});
        if (roots.empty()) break;
        mu.emplace_back(roots.front());
      }
      if (mu.size() == res.lambda.size()) res.mu = std::move(mu);
    }
    all_mu = all_mu && res.mu.has_value();
    out.canonical.lambda[orbit.rep] = res.lambda;
    out.orbits.push_back(std::move(res));
  }
  if (out.dim > options.dim_bound)
    throw DomainError("E_DIM_EXCEEDED", "reconstructed dimension " + std::to_string(out.dim) + " exceeds bound " +
                                            std::to_string(options.dim_bound));
  if (all_mu && options.find_mu) {
    WeilRep rep;
    for (const auto& r : out.orbits) rep.components.push_back({r.rep_char, *r.mu});
    out.rep = std::move(rep);
  }
  return out;
}

}  // namespace frobtrace
