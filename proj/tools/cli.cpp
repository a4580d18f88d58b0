#include "cli.hpp"

#include <charconv>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "frobtrace/chartable.hpp"
#include "frobtrace/curves.hpp"
#include "frobtrace/error.hpp"
#include "frobtrace/group_library.hpp"
#include "frobtrace/json_io.hpp"
#include "frobtrace/reconstruct.hpp"
#include "frobtrace/roundtrip.hpp"
#include "frobtrace/wdrep.hpp"

namespace frobtrace::cli {

namespace {

using json_io::json;

struct Output {
  bool as_json = false;
  bool pretty = false;
  std::ostream* out;

  bool structured() const { return as_json || pretty; }
  void emit(const json& j) const { *out << json_io::dump(j, pretty) << "\n"; }
};

struct GroupArgs {
  std::string group_file;
  std::string shape;
  std::string chartab_file;

  void add(CLI::App* cmd, bool with_table) {
    auto* g = cmd->add_option("--group", group_file, "group JSON file");
    auto* s = cmd->add_option("--shape", shape, "built-in shape instead of --group")
                  ->check(CLI::IsMember(library::named_shapes()));
    g->excludes(s);
    if (with_table) cmd->add_option("--chartab", chartab_file, "character table JSON (computed when absent)");
  }

  Group group() const {
    if (!shape.empty()) return Group(library::named_shape(shape));
    if (group_file.empty()) throw ConfigError("E_USAGE", "one of --group or --shape is required");
    return Group(json_io::group_from_json(json_io::read_file(group_file)));
  }

  CharTable table(const Group& g) const {
    if (chartab_file.empty()) return compute_chartable(g);
    return json_io::chartable_from_json(json_io::read_file(chartab_file), g);
  }
};

Mode parse_mode(const std::string& s) { return s == "float" ? Mode::numeric : Mode::exact; }

std::string join(const std::vector<Scalar>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
  return s + "}";
}

Complex parse_complex(const std::string& text) {
  auto number = [&](std::string_view v) {
    double x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw ConfigError("E_USAGE", "bad eigenvalue '" + text + "', expected re or re,im");
    return x;
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {number(text), 0.0};
  return {number(std::string_view(text).substr(0, comma)), number(std::string_view(text).substr(comma + 1))};
}

std::vector<long long> parse_poly(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    const auto b = tok.find_first_not_of(" \t[]"), e = tok.find_last_not_of(" \t[]");
    if (b == std::string::npos) throw ConfigError("E_USAGE", "empty coefficient in '" + text + "'");
    const std::string_view v = std::string_view(tok).substr(b, e - b + 1);
    long long x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
      throw ConfigError("E_USAGE", "bad coefficient '" + std::string(v) + "'");
    out.push_back(x);
  }
  return out;
}

mpz_class parse_integer(const std::string& text, const char* what) {
  mpz_class x;
  if (text.empty() || x.set_str(text, 10) != 0) throw ConfigError("E_USAGE", std::string("bad integer for ") + what);
  return x;
}

// --- commands ---

int cmd_validate(const GroupArgs& in, const Output& o) {
  const Group g = in.group();
  if (in.chartab_file.empty()) throw ConfigError("E_USAGE", "--chartab is required");
  const CharTable t = in.table(g);
  if (o.structured())
    o.emit({{"ok", true}, {"order", g.order()}, {"classes", t.size()}, {"degrees", t.degrees()}});
  else
    *o.out << "ok: group of order " << g.order() << ", " << t.size() << " classes, table orthogonal\n";
  return 0;
}

int cmd_chartab(const GroupArgs& in, const Output& o) {
  const Group g = in.group();
  const CharTable t = compute_chartable(g);
  if (o.structured()) {
    o.emit(json_io::to_json(t));
    return 0;
  }
  *o.out << "class reps:";
  for (std::size_t c = 0; c < t.classes.count(); ++c) *o.out << " " << t.classes.reps[c] << "(" << t.classes.sizes[c] << ")";
  *o.out << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    *o.out << "chi" << i << ":";
    for (const auto& v : t.rows[i]) *o.out << "  " << v.to_string();
    *o.out << "\n";
  }
  return 0;
}

int cmd_orbits(const GroupArgs& in, const Output& o) {
  const Group g = in.group();
  const CharTable t = in.table(g);
  const auto orbits = twist_orbits(t, g);
  if (o.structured()) {
    o.emit({{"orbits", json_io::to_json(orbits, t)}});
    return 0;
  }
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    *o.out << "orbit " << k << ": rep chi" << orbits[k].rep << ", degree " << t.degree(orbits[k].rep) << ", m = "
           << orbits[k].m << ", members {";
    for (std::size_t i = 0; i < orbits[k].members.size(); ++i) *o.out << (i ? ", " : "") << "chi" << orbits[k].members[i];
    *o.out << "}\n";
  }
  return 0;
}

struct DataArgs {
  std::string traces_file;
  std::string counts_file;
  std::optional<std::uint64_t> q;

  void add(CLI::App* cmd) {
    auto* t = cmd->add_option("--traces", traces_file, "trace dataset JSON");
    auto* c = cmd->add_option("--counts", counts_file, "point-count dataset JSON");
    t->excludes(c);
    cmd->add_option("--q", q, "residue field size for counts (overrides the file)");
  }

  TraceDataset load(const Group& g, std::ostream& err) const {
    if (!counts_file.empty()) {
      const auto file = json_io::counts_from_json(json_io::read_file(counts_file));
      const auto size = q ? q : file.q;
      if (!size) throw ConfigError("E_MISSING_Q", "counts need a residue field size: give --q or \"q\" in the file");
      auto data = dataset_from_counts(file.entries, LocalShape(g, *size), file.genus, file.frobenius);
      for (const auto& w : data.warnings) err << "warning: " << w << "\n";
      return data;
    }
    if (traces_file.empty()) throw ConfigError("E_USAGE", "one of --traces or --counts is required");
    // q plays no part in a trace dataset
    return json_io::traces_from_json(json_io::read_file(traces_file), LocalShape(g, q.value_or(2)));
  }
};

int cmd_traces(const GroupArgs& in, const DataArgs& data, const Output& o, std::ostream& err) {
  const Group g = in.group();
  const TraceDataset d = data.load(g, err);
  if (o.structured()) {
    o.emit(json_io::to_json(d));
    return 0;
  }
  for (const auto& [slot, e] : d.entries)
    *o.out << "g=" << slot.g << " r=" << slot.r << " trace " << e.trace.to_string() << "\n";
  return 0;
}

int cmd_reconstruct(const GroupArgs& in, const DataArgs& data, const ReconstructOptions& opts, const Output& o,
                    std::ostream& err) {
  const Group g = in.group();
  const CharTable t = in.table(g);
  const TraceDataset d = data.load(g, err);
  const auto orbits = twist_orbits(t, g);
  const auto rec = reconstruct(d, t, LocalShape(g, data.q.value_or(2)), orbits, opts);
  if (o.structured()) {
    o.emit(json_io::to_json(rec));
    return 0;
  }
  *o.out << "orbit  rep    m  lambda / mu\n";
  for (const auto& r : rec.orbits) {
    *o.out << std::left << std::setw(7) << r.orbit << std::setw(7) << ("chi" + std::to_string(r.rep_char))
           << std::setw(3) << r.m << join(r.lambda) << "\n";
    *o.out << std::string(17, ' ') << (r.mu ? join(*r.mu) : std::string("(no mu in the search field)")) << "\n";
  }
  *o.out << "dimension " << rec.dim << " (" << to_string(rec.mode) << ")\n";
  return 0;
}

int cmd_roundtrip(const GroupArgs& in, RoundTripOptions opts, std::uint64_t q, const Output& o) {
  const Group g = in.group();
  const CharTable t = in.table(g);
  const auto orbits = twist_orbits(t, g);
  const auto report = run_roundtrip(LocalShape(g, q), t, orbits, opts);
  if (o.structured()) {
    json failures = json::array();
    for (const auto& f : report.failures) {
      json input = json::array();
      for (const auto& c : f.input.components) {
        json mu = json::array();
        for (const auto& m : c.mu) mu.push_back(json_io::to_json(m));
        input.push_back({{"character", c.character}, {"mu", mu}});
      }
      auto canon = [](const CanonicalRep& c) {
        json a = json::array();
        for (const auto& [rep, lambda] : c.lambda) {
          json l = json::array();
          for (const auto& x : lambda) l.push_back(json_io::to_json(x));
          a.push_back({{"rep_char", rep}, {"lambda", l}});
        }
        return a;
      };
      failures.push_back({{"trial", f.trial},
                          {"trial_seed", f.trial_seed},
                          {"input", input},
                          {"expected", canon(f.expected)},
                          {"got", f.got ? canon(*f.got) : json(nullptr)},
                          {"error", f.error}});
    }
    o.emit({{"trials", report.trials},
            {"passed", report.passed},
            {"failed", report.failures.size()},
            {"seed", opts.seed},
            {"failures", failures}});
  } else {
    *o.out << "passed " << report.passed << "/" << report.trials << "\n";
    for (const auto& f : report.failures)
      *o.out << "FAIL trial " << f.trial << " seed " << f.trial_seed << (f.error.empty() ? "" : ": " + f.error) << "\n";
  }
  return report.failures.empty() ? 0 : 1;
}

int cmd_count(const std::string& field_spec, const std::string& poly, std::uint64_t bound, unsigned jobs,
              const Output& o) {
  const FiniteField F = FiniteField::parse(field_spec, std::max<std::uint64_t>(bound, 3));
  const auto curve = HyperCurve::from_integers(F, parse_poly(poly));
  const std::uint64_t n = count_points(curve, bound, jobs);
  const mpz_class t1 = lefschetz_t1(mpz_class(static_cast<unsigned long>(n)), F.size());
  if (o.structured())
    o.emit({{"q", F.size()}, {"genus", curve.genus()}, {"count", n}, {"t1", t1.get_si()}});
  else
    *o.out << n << "\n";
  return 0;
}

int cmd_recover(const std::string& count, const std::string& q, std::uint32_t genus, const Output& o) {
  const mpz_class t1 = recover_t1(parse_integer(count, "--count"), parse_integer(q, "--q"), genus);
  if (o.structured())
    o.emit({{"t1", t1.get_str()}});
  else
    *o.out << t1.get_str() << "\n";
  return 0;
}

WDData wd_input(const std::string& file, std::optional<std::uint64_t> q, const std::vector<std::string>& parts) {
  if (!file.empty()) return normalize(json_io::wd_from_json(json_io::read_file(file)));
  if (!q) throw ConfigError("E_USAGE", "give --wd FILE or --q with --part");
  WDData wd{*q, {}};
  for (const auto& p : parts) {
    const auto colon = p.find(':');
    if (colon == std::string::npos) throw ConfigError("E_USAGE", "bad part '" + p + "', expected n:re[,im][;re[,im]...]");
    std::uint32_t n = 0;
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + colon, n);
    if (ec != std::errc() || ptr != p.data() + colon) throw ConfigError("E_USAGE", "bad n in part '" + p + "'");
    WDPart part{n, {}};
    std::stringstream ss(p.substr(colon + 1));
    for (std::string e; std::getline(ss, e, ';');) part.eigs.push_back(parse_complex(e));
    wd.parts.push_back(std::move(part));
  }
  return normalize(std::move(wd));
}

int cmd_wm_check(const WDData& wd, double tol, int weight, const Output& o) {
  const auto report = wm_check(wd, tol, weight);
  if (o.structured()) {
    o.emit(json_io::to_json(report));
  } else {
    for (const auto& v : report.parts)
      for (std::size_t i = 0; i < v.moduli.size(); ++i)
        *o.out << (v.ok[i] ? "PASS" : "FAIL") << " n=" << v.n << " |alpha|=" << std::setprecision(12) << v.moduli[i]
               << " expected " << v.expected << "\n";
    *o.out << (report.pass ? "PASS" : "FAIL") << "\n";
  }
  return report.pass ? 0 : 1;
}

int cmd_wd_from_kernel(std::uint64_t q, const std::vector<std::string>& eigs, const std::string& file, double tol,
                       int weight, const Output& o) {
  std::vector<Complex> kernel;
  for (const auto& e : eigs) kernel.push_back(parse_complex(e));
  if (!file.empty()) {
    const json j = json_io::read_file(file);
    if (!j.is_array()) throw IoError("E_PARSE", file + ": expected an array of eigenvalues");
    for (std::size_t i = 0; i < j.size(); ++i)
      kernel.push_back(json_io::scalar_from_json(j[i], "kernel[" + std::to_string(i) + "]").complex());
  }
  const WDData wd = wd_from_kernel(kernel, q, tol, weight);
  if (o.structured()) {
    o.emit(json_io::to_json(wd));
    return 0;
  }
  for (const auto& p : wd.parts) {
    *o.out << "n=" << p.n << ":";
    for (const auto& a : p.eigs) *o.out << " " << Scalar(a).to_string() << ";";
    *o.out << "\n";
  }
  return 0;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain:
      return 1;
    case ErrorKind::io:
      return 2;
    case ErrorKind::config:
      return 3;
  }
  return 1;
}

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"frobtrace: reconstruct Weil representations of local fields from Frobenius traces"};
  app.require_subcommand(1);
  app.fallthrough();
  Output o{false, false, &out};
  app.add_flag("--json", o.as_json, "machine-readable JSON output");
  app.add_flag("--pretty", o.pretty, "indented JSON output");

  std::string mode_text = "exact";
  double tol = 1e-6;
  std::uint32_t dim_bound = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", mode_text, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  };
  auto add_jobs = [&](CLI::App* c) {
    c->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  };

  GroupArgs gargs;
  DataArgs dargs;

  auto* validate = app.add_subcommand("validate", "validate a group and character table");
  gargs.add(validate, true);

  auto* chartab = app.add_subcommand("chartab", "compute the character table (Burnside-Dixon)");
  gargs.add(chartab, false);

  auto* orbits = app.add_subcommand("orbits", "unramified twist orbits of Irr(G)");
  gargs.add(orbits, true);

  std::uint32_t conductor = 1;
  auto* recon = app.add_subcommand("reconstruct", "reconstruct a Weil representation from traces or counts");
  gargs.add(recon, true);
  dargs.add(recon);
  recon->add_option("--dim-bound", dim_bound, "dimension bound D")->required()->check(CLI::PositiveNumber);
  add_mode(recon);
  recon->add_option("--tol", tol, "float mode root clustering tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  recon->add_option("--conductor", conductor, "extra conductor for the eigenvalue search field")
      ->check(CLI::PositiveNumber);

  auto* traces = app.add_subcommand("traces", "convert a count dataset to traces (t = q^r + 1 - count)");
  gargs.add(traces, false);
  dargs.add(traces);

  RoundTripOptions rt;
  std::uint64_t rt_q = 7;
  auto* roundtrip = app.add_subcommand("roundtrip", "sample, evaluate, reconstruct and compare");
  gargs.add(roundtrip, true);
  roundtrip->add_option("--trials", rt.trials, "number of trials")->capture_default_str();
  roundtrip->add_option("--seed", seed, "RNG seed")->capture_default_str();
  roundtrip->add_option("--dim-bound", dim_bound, "dimension bound D (default 12)")->check(CLI::PositiveNumber);
  roundtrip->add_option("--conductor", rt.conductor, "field containing every sampled eigenvalue")
      ->capture_default_str();
  roundtrip->add_option("--max-d", rt.max_d, "only generate traces for d <= this (0: as needed)");
  roundtrip->add_option("--q", rt_q, "residue field size")->capture_default_str();
  roundtrip->add_option("--tol", tol, "float mode tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  add_mode(roundtrip);
  add_jobs(roundtrip);

  std::string field_spec, poly;
  std::uint64_t bound = 1000000;
  auto* count = app.add_subcommand(
      "count",
      "count points on y^2 = f(x) over F_q. The smooth projective model is counted: affine points, plus one point "
      "at infinity when deg f is odd, two when deg f is even and the leading coefficient is a square, else none");
  count->add_option("--field", field_spec, "field as p^k")->required();
  count->add_option("--poly", poly, "integer coefficients of f, constant first, comma separated")->required();
  count->add_option("--bound", bound, "largest q to enumerate")->capture_default_str();
  add_jobs(count);

  std::string count_text, q_text;
  std::uint32_t genus = 0;
  auto* recover = app.add_subcommand("recover-t1", "recover t1 from a point count mod q (needs q > 16 g^2)");
  recover->add_option("--count", count_text, "point count")->required();
  recover->add_option("--q", q_text, "residue field size")->required();
  recover->add_option("--genus", genus, "genus")->required();

  std::string wd_file;
  std::optional<std::uint64_t> wd_q;
  std::vector<std::string> parts, eigs;
  std::string kernel_file;
  double wd_tol = 1e-8;
  int weight = 0;
  auto* wmcheck = app.add_subcommand("wm-check", "check |alpha| = q^((w+n-1)/2) on every part");
  wmcheck->add_option("--wd", wd_file, "WD JSON file");
  wmcheck->add_option("--q", wd_q, "residue field size");
  wmcheck->add_option("--part", parts, "n:re[,im][;re[,im]...], repeatable");
  wmcheck->add_option("--tol", wd_tol, "relative tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  wmcheck->add_option("--weight", weight, "weight shift w")->capture_default_str();

  std::uint64_t kernel_q = 0;
  auto* fromkernel = app.add_subcommand("wd-from-kernel", "split kernel eigenvalues into parts by weight");
  fromkernel->add_option("--q", kernel_q, "residue field size")->required();
  fromkernel->add_option("--eig", eigs, "re[,im], repeatable");
  fromkernel->add_option("--kernel", kernel_file, "JSON array of eigenvalues");
  fromkernel->add_option("--tol", wd_tol, "relative tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  fromkernel->add_option("--weight", weight, "weight shift w")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error E_USAGE: " << one_line(e.what()) << "\n";
    return 3;
  }

  try {
    const Mode mode = parse_mode(mode_text);
    if (*validate) return cmd_validate(gargs, o);
    if (*chartab) return cmd_chartab(gargs, o);
    if (*orbits) return cmd_orbits(gargs, o);
    if (*traces) return cmd_traces(gargs, dargs, o, err);
    if (*recon) {
      ReconstructOptions opts;
      opts.dim_bound = dim_bound;
      opts.mode = mode;
      opts.cluster_tol = tol;
      opts.conductor = conductor;
      return cmd_reconstruct(gargs, dargs, opts, o, err);
    }
    if (*roundtrip) {
      rt.seed = seed;
      rt.dim_bound = dim_bound ? dim_bound : 12;
      rt.mode = mode;
      rt.tol = tol;
      rt.jobs = jobs;
      return cmd_roundtrip(gargs, rt, rt_q, o);
    }
    if (*count) return cmd_count(field_spec, poly, bound, jobs, o);
    if (*recover) return cmd_recover(count_text, q_text, genus, o);
    if (*wmcheck) return cmd_wm_check(wd_input(wd_file, wd_q, parts), wd_tol, weight, o);
    if (*fromkernel) return cmd_wd_from_kernel(kernel_q, eigs, kernel_file, wd_tol, weight, o);
  } catch (const MissingDataError& e) {
    err << "error " << e.code() << ": " << one_line(e.what()) << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error " << e.code() << ": " << one_line(e.what()) << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error E_INTERNAL: " << one_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace frobtrace::cli
