#include "frobtrace/wdrep.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "frobtrace/error.hpp"

namespace frobtrace {

namespace {

double expected_modulus(std::uint64_t q, std::uint32_t n, int weight) {
  return std::pow(static_cast<double>(q), (weight + static_cast<double>(n) - 1) / 2);
}

bool matches(double modulus, double expected, double tol) { return std::abs(modulus / expected - 1) <= tol; }

}  // namespace

WDData normalize(WDData wd) {
  if (wd.q < 2) throw DomainError("E_WD", "residue field size must be at least 2");
  std::map<std::uint32_t, std::vector<Complex>> merged;
  for (auto& part : wd.parts) {
    if (part.n == 0) throw DomainError("E_WD", "part with n = 0");
    for (const auto& a : part.eigs)
      if (a == Complex(0)) throw DomainError("E_WD", "zero eigenvalue in part n = " + std::to_string(part.n));
    auto& dst = merged[part.n];
    dst.insert(dst.end(), part.eigs.begin(), part.eigs.end());
  }
  wd.parts.clear();
  for (auto& [n, eigs] : merged) {
    std::sort(eigs.begin(), eigs.end(), [](Complex a, Complex b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    wd.parts.push_back({n, std::move(eigs)});
  }
  return wd;
}

WMReport wm_check(const WDData& wd, double tol, int weight) {
  if (!(tol > 0)) throw ConfigError("E_TOL", "tolerance must be positive");
  WMReport report;
  for (const auto& part : wd.parts) {
    WMVerdict v{part.n, expected_modulus(wd.q, part.n, weight), {}, {}, true};
    for (const auto& a : part.eigs) {
      v.moduli.push_back(std::abs(a));
      v.ok.push_back(matches(v.moduli.back(), v.expected, tol));
      v.pass = v.pass && v.ok.back();
    }
    report.pass = report.pass && v.pass;
    report.parts.push_back(std::move(v));
  }
  return report;
}

WDData wd_from_kernel(const std::vector<Complex>& kernel, std::uint64_t q, double tol, int weight) {
  if (!(tol > 0)) throw ConfigError("E_TOL", "tolerance must be positive");
  if (q < 2) throw DomainError("E_WD", "residue field size must be at least 2");
  WDData wd{q, {}};
  std::map<std::uint32_t, std::vector<Complex>> by_n;
  for (const auto& a : kernel) {
    const double modulus = std::abs(a);
    if (modulus == 0) throw DomainError("E_WEIGHT_NONE", "zero eigenvalue has no weight");
    const double x = 2 * std::log(modulus) / std::log(static_cast<double>(q)) - weight + 1;
    std::vector<std::uint32_t> hits;
    const long hi = std::max(1L, std::lround(x) + 2);
    for (long n = std::max(1L, std::lround(x) - 2); n <= hi; ++n)
      if (matches(modulus, expected_modulus(q, static_cast<std::uint32_t>(n), weight), tol))
        hits.push_back(static_cast<std::uint32_t>(n));
    if (hits.empty())
      throw DomainError("E_WEIGHT_NONE", "|" + Scalar(a).to_string() + "| = " + std::to_string(modulus) +
                                             " is not q^((n-1)/2) for any n >= 1");
    if (hits.size() > 1)
      throw DomainError("E_WEIGHT_AMBIGUOUS", "|" + Scalar(a).to_string() + "| matches n = " +
                                                  std::to_string(hits[0]) + " and n = " + std::to_string(hits[1]) +
                                                  " at tolerance " + std::to_string(tol));
    by_n[hits[0]].push_back(a);
  }
  for (auto& [n, eigs] : by_n) wd.parts.push_back({n, std::move(eigs)});
  return normalize(std::move(wd));
}

std::vector<Complex> flatten(const WDData& wd) {
  std::vector<Complex> out;
  for (const auto& part : wd.parts) out.insert(out.end(), part.eigs.begin(), part.eigs.end());
  return out;
}

Complex kernel_trace(const WDData& wd, std::uint32_t r) {
  Complex total = 0;
  for (const auto& part : wd.parts)
    for (const auto& a : part.eigs) total += Scalar(a).pow(r).complex();
  return total;
}

}  // namespace frobtrace
