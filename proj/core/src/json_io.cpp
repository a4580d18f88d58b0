#include "frobtrace/json_io.hpp"

#include <fstream>
#include <sstream>

#include "frobtrace/error.hpp"

namespace frobtrace::json_io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw IoError("E_PARSE", where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing key \"") + key + "\"");
  return *it;
}

template <class T>
T integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  if constexpr (std::is_unsigned_v<T>) {
    if (j.is_number_unsigned()) return j.get<T>();
    if (j.get<long long>() < 0) bad(where, "expected a non-negative integer");
  }
  return j.get<T>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  return j.get<double>();
}

bool rational_text(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&] {
    const std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return i > start;
  };
  if (i < s.size() && s[i] == '-') ++i;
  if (!digits()) return false;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (!digits()) return false;
  }
  return i == s.size();
}

FrobeniusConvention frobenius_from(const json& j) {
  auto it = j.find("frobenius");
  if (it == j.end()) return FrobeniusConvention::arithmetic;
  if (*it == "arithmetic") return FrobeniusConvention::arithmetic;
  if (*it == "geometric") return FrobeniusConvention::geometric;
  bad("frobenius", "expected \"arithmetic\" or \"geometric\"");
}

}  // namespace

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("E_IO", "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw IoError("E_PARSE", path.string() + ": " + e.what());
  }
}

mpq_class rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(mpz_class(j.dump()));
  if (!j.is_string()) bad(where, "expected a rational string");
  const auto s = j.get<std::string>();
  if (!rational_text(s)) bad(where, "\"" + s + "\" is not of the form p or p/q");
  mpq_class x(s);
  if (x.get_den() == 0) bad(where, "zero denominator");
  x.canonicalize();
  return x;
}

std::string rational_string(const mpq_class& x) { return x.get_str(); }

json to_json(const CycloNum& x) {
  json c = json::array();
  for (const auto& v : x.coeffs()) c.push_back(rational_string(v));
  return {{"n", x.conductor()}, {"c", c}};
}

CycloNum cyclo_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) return CycloNum(rational_from_json(j, where));
  const auto n = integer<std::uint32_t>(field(j, "n", where), where + ".n");
  if (n == 0) bad(where + ".n", "conductor must be positive");
  const auto& c = array(field(j, "c", where), where + ".c");
  if (c.size() != euler_phi(n))
    bad(where + ".c", "expected " + std::to_string(euler_phi(n)) + " coefficients for n = " + std::to_string(n));
  std::vector<mpq_class> coeffs;
  for (std::size_t i = 0; i < c.size(); ++i)
    coeffs.push_back(rational_from_json(c[i], where + ".c[" + std::to_string(i) + "]"));
  return CycloNum::from_power_basis(n, coeffs);
}

json to_json(const Scalar& s) {
  if (s.exact()) return to_json(s.cyclo());
  const Complex z = s.complex();
  return {{"re", z.real()}, {"im", z.imag()}};
}

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_object() && j.contains("re"))
    return Scalar(Complex(number(j["re"], where + ".re"), j.contains("im") ? number(j["im"], where + ".im") : 0.0));
  if (j.is_number_float()) return Scalar(Complex(j.get<double>(), 0));
  return Scalar(cyclo_from_json(j, where));
}

json to_json(const GroupData& g) {
  return {{"order", g.order}, {"mul", g.mul}, {"inertia", g.inertia}, {"frob", g.frob}};
}

GroupData group_from_json(const json& j) {
  GroupData g;
  g.order = integer<std::uint32_t>(field(j, "order", "group"), "group.order");
  const auto& mul = array(field(j, "mul", "group"), "group.mul");
  for (std::size_t i = 0; i < mul.size(); ++i)
    g.mul.push_back(integer<std::uint32_t>(mul[i], "group.mul[" + std::to_string(i) + "]"));
  const auto& inertia = array(field(j, "inertia", "group"), "group.inertia");
  for (std::size_t i = 0; i < inertia.size(); ++i)
    g.inertia.push_back(integer<std::uint32_t>(inertia[i], "group.inertia[" + std::to_string(i) + "]"));
  g.frob = integer<std::uint32_t>(field(j, "frob", "group"), "group.frob");
  return g;
}

json to_json(const CharTable& t) {
  json classes = json::array(), rows = json::array();
  for (std::size_t c = 0; c < t.classes.count(); ++c)
    classes.push_back({{"rep", t.classes.reps[c]}, {"size", t.classes.sizes[c]}});
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  return {{"classes", classes}, {"rows", rows}};
}

CharTable chartable_from_json(const json& j, const Group& group) {
  std::vector<ClassColumn> columns;
  const auto& classes = array(field(j, "classes", "chartab"), "chartab.classes");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string where = "chartab.classes[" + std::to_string(i) + "]";
    columns.push_back({integer<std::uint32_t>(field(classes[i], "rep", where), where + ".rep"),
                       integer<std::uint32_t>(field(classes[i], "size", where), where + ".size")});
  }
  std::vector<std::vector<CycloNum>> rows;
  const auto& rs = array(field(j, "rows", "chartab"), "chartab.rows");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string where = "chartab.rows[" + std::to_string(i) + "]";
    rows.emplace_back();
    const auto& row = array(rs[i], where);
    for (std::size_t k = 0; k < row.size(); ++k)
      rows.back().push_back(cyclo_from_json(row[k], where + "[" + std::to_string(k) + "]"));
  }
  return ingest_chartable(group, columns, rows);
}

json to_json(const TraceDataset& d) {
  json entries = json::array();
  for (const auto& [slot, e] : d.entries)
    entries.push_back({{"g", slot.g}, {"r", slot.r}, {"trace", to_json(e.trace)}});
  json out{{"mode", to_string(d.mode)}, {"frobenius", to_string(d.frobenius)}, {"entries", entries}};
  if (!d.warnings.empty()) out["warnings"] = d.warnings;
  return out;
}

TraceDataset traces_from_json(const json& j, const LocalShape& shape) {
  std::vector<RawTrace> raw;
  const auto& entries = array(field(j, "entries", "traces"), "traces.entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "traces.entries[" + std::to_string(i) + "]";
    const FieldSlot slot{integer<std::uint32_t>(field(entries[i], "g", where), where + ".g"),
                         integer<std::uint32_t>(field(entries[i], "r", where), where + ".r")};
    raw.push_back({slot, scalar_from_json(field(entries[i], "trace", where), where + ".trace")});
  }
  return dataset_from_traces(raw, shape, frobenius_from(j));
}

CountFile counts_from_json(const json& j) {
  CountFile out;
  out.genus = integer<std::uint32_t>(field(j, "genus", "counts"), "counts.genus");
  if (j.contains("q")) out.q = integer<std::uint64_t>(j["q"], "counts.q");
  out.frobenius = frobenius_from(j);
  const auto& entries = array(field(j, "entries", "counts"), "counts.entries");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "counts.entries[" + std::to_string(i) + "]";
    const FieldSlot slot{integer<std::uint32_t>(field(entries[i], "g", where), where + ".g"),
                         integer<std::uint32_t>(field(entries[i], "r", where), where + ".r")};
    const json& c = field(entries[i], "count", where);
    mpz_class count;
    if (c.is_number_integer())
      count = mpz_class(c.dump());
    else if (c.is_string() && rational_text(c.get<std::string>()) && c.get<std::string>().find('/') == std::string::npos)
      count = mpz_class(c.get<std::string>());
    else
      bad(where + ".count", "expected an integer");
    out.entries.push_back({slot, count});
  }
  return out;
}

json to_json(const CountFile& c) {
  json entries = json::array();
  for (const auto& e : c.entries) {
    json count = e.count.fits_slong_p() ? json(e.count.get_si()) : json(e.count.get_str());
    entries.push_back({{"g", e.slot.g}, {"r", e.slot.r}, {"count", count}});
  }
  json out{{"genus", c.genus}};
  if (c.q) out["q"] = *c.q;
  out["entries"] = entries;
  return out;
}

json to_json(const WDData& wd) {
  json parts = json::array();
  for (const auto& p : wd.parts) {
    json eigs = json::array();
    for (const auto& a : p.eigs) eigs.push_back({{"re", a.real()}, {"im", a.imag()}});
    parts.push_back({{"n", p.n}, {"eigs", eigs}});
  }
  return {{"q", wd.q}, {"parts", parts}};
}

WDData wd_from_json(const json& j) {
  WDData wd;
  wd.q = integer<std::uint64_t>(field(j, "q", "wd"), "wd.q");
  const auto& parts = array(field(j, "parts", "wd"), "wd.parts");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string where = "wd.parts[" + std::to_string(i) + "]";
    WDPart part{integer<std::uint32_t>(field(parts[i], "n", where), where + ".n"), {}};
    const auto& eigs = array(field(parts[i], "eigs", where), where + ".eigs");
    for (std::size_t k = 0; k < eigs.size(); ++k)
      part.eigs.push_back(scalar_from_json(eigs[k], where + ".eigs[" + std::to_string(k) + "]").complex());
    wd.parts.push_back(std::move(part));
  }
  return wd;
}

json to_json(const WMReport& r) {
  json parts = json::array();
  for (const auto& v : r.parts)
    parts.push_back({{"n", v.n}, {"expected", v.expected}, {"moduli", v.moduli}, {"ok", v.ok}, {"pass", v.pass}});
  return {{"pass", r.pass}, {"parts", parts}};
}

json to_json(const std::vector<TwistOrbit>& orbits, const CharTable& table) {
  json out = json::array();
  for (const auto& o : orbits)
    out.push_back({{"rep_char", o.rep},
                   {"m", o.m},
                   {"degree", table.degree(o.rep)},
                   {"members", o.members},
                   {"twists", o.twists}});
  return out;
}

json to_json(const Reconstruction& rec) {
  auto scalars = [](const std::vector<Scalar>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
  };
  json orbits = json::array();
  for (const auto& o : rec.orbits)
    orbits.push_back({{"rep_char", o.rep_char},
                      {"m", o.m},
                      {"lambda", scalars(o.lambda)},
                      {"mu", o.mu ? scalars(*o.mu) : json(nullptr)}});
  json canonical = json::array();
  for (const auto& [rep, lambda] : rec.canonical.lambda)
    canonical.push_back({{"rep_char", rep}, {"lambda", scalars(lambda)}});
  json rep = nullptr;
  if (rec.rep) {
    rep = json::array();
    for (const auto& c : rec.rep->components) rep.push_back({{"character", c.character}, {"mu", scalars(c.mu)}});
  }
  return {{"orbits", orbits}, {"dim", rec.dim},     {"mode", to_string(rec.mode)},
          {"skipped", rec.skipped}, {"canonical", canonical}, {"rep", rep}};
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace frobtrace::json_io
