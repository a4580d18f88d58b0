#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobtrace/weilmodel.hpp"

namespace frobtrace {

// rho = sum_n rho_n (x) Sp_n, given by the Frobenius eigenvalues on each rho_n.
// Numeric only; exact values are embedded before they get here.
struct WDPart {
  std::uint32_t n;
  std::vector<Complex> eigs;
};

struct WDData {
  std::uint64_t q = 0;
  std::vector<WDPart> parts;
};

// Merge parts with equal n, sort parts by n and eigenvalues by (re, im).
// Throws DomainError (E_WD) on n = 0, a zero eigenvalue or q < 2.
WDData normalize(WDData wd);

struct WMVerdict {
  std::uint32_t n;
  double expected;            // q^{(w + n - 1) / 2}
  std::vector<double> moduli;
  std::vector<bool> ok;
  bool pass = true;
};

struct WMReport {
  std::vector<WMVerdict> parts;
  bool pass = true;
};

// |alpha| in part n must be q^{(w + n - 1)/2} to relative tolerance tol. w is a
// weight shift, 0 for pure weight-0 rho_1.
WMReport wm_check(const WDData& wd, double tol = 1e-8, int weight = 0);

// Assign each eigenvalue the unique n >= 1 whose absolute value it matches.
// Throws DomainError E_WEIGHT_NONE / E_WEIGHT_AMBIGUOUS.
WDData wd_from_kernel(const std::vector<Complex>& kernel, std::uint64_t q, double tol = 1e-8, int weight = 0);

std::vector<Complex> flatten(const WDData& wd);

// sum over parts of sum alpha^r
Complex kernel_trace(const WDData& wd, std::uint32_t r);

}  // namespace frobtrace
