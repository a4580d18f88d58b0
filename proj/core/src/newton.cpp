#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "frobtrace/cyclo_roots.hpp"
#include "frobtrace/error.hpp"
#include "frobtrace/reconstruct.hpp"

namespace frobtrace {

std::vector<Scalar> elementary_from_power_sums(const std::vector<Scalar>& p) {
  const std::size_t n = p.size();
  const Mode mode = std::all_of(p.begin(), p.end(), [](const Scalar& s) { return s.exact(); }) ? Mode::exact
                                                                                                : Mode::numeric;
  std::vector<Scalar> e(n + 1, Scalar(0L).in_mode(mode));
  e[0] = Scalar(1L).in_mode(mode);
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc = Scalar(0L).in_mode(mode);
    for (std::size_t j = 1; j <= k; ++j) {
      const Scalar term = e[k - j] * p[j - 1].in_mode(mode);
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc.scaled(mpq_class(1, static_cast<long>(k)));
  }
  return e;
}

std::vector<Scalar> power_sums_of(const std::vector<Scalar>& values, std::size_t count) {
  const Mode mode = std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.exact(); })
                        ? Mode::exact
                        : Mode::numeric;
  std::vector<Scalar> out(count, Scalar(0L).in_mode(mode));
  for (const auto& v : values) {
    Scalar x = v.in_mode(mode);
    Scalar pw = x;
    for (std::size_t d = 0; d < count; ++d) {
      out[d] += pw;
      pw *= x;
    }
  }
  return out;
}

Complex principal_root(Complex x, std::uint32_t m) {
  double arg = std::arg(x);
  if (arg < 0) arg += 2 * std::numbers::pi;
  return std::polar(std::pow(std::abs(x), 1.0 / m), arg / m);
}

namespace {

bool numeric_less(const Scalar& a, const Scalar& b) {
  const Complex x = a.complex(), y = b.complex();
  return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
}

std::vector<Scalar> numeric_roots(const std::vector<Scalar>& e, double tol) {
  const std::size_t N = e.size() - 1;
  double s = 0;
  for (std::size_t k = 1; k <= N; ++k) s = std::max(s, std::pow(std::abs(e[k].complex()), 1.0 / k));
  if (s == 0) return {};
  // monic polynomial in y = x / s: y^N - b1 y^{N-1} + b2 y^{N-2} ...
  std::vector<Complex> c(N + 1);  // constant first
  for (std::size_t k = 0; k <= N; ++k) {
    Complex b = e[k].complex() / std::pow(s, static_cast<double>(k));
    if (std::abs(b) < 1e-9) b = 0;
    c[N - k] = (k % 2 ? -1.0 : 1.0) * b;
  }
  std::size_t zeros = 0;
  while (zeros < N && c[zeros] == Complex(0)) ++zeros;
  const std::size_t n = N - zeros;
  if (n == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (std::size_t i = 1; i < n; ++i) companion(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) companion(i, n - 1) = -c[zeros + i];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw DomainError("E_EIGEN", "companion eigenvalue iteration failed");
  std::vector<Complex> ys(solver.eigenvalues().data(), solver.eigenvalues().data() + n);

  // single-linkage clusters at tol
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(ys[i] - ys[j]) <= tol) parent[find(i)] = find(j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (find(i) != find(j) && std::abs(ys[i] - ys[j]) < 100 * tol)
        throw DomainError("E_AMBIGUOUS", "roots " + std::to_string(std::abs(ys[i] - ys[j]) * s) +
                                             " apart: multiplicity is ambiguous at the clustering tolerance");
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (find(i) != i) continue;
    Complex sum = 0;
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (find(j) == i) {
        sum += ys[j];
        ++count;
      }
    const Complex root = sum / static_cast<double>(count) * s;
    if (std::abs(root) <= tol * s) continue;
    for (std::size_t k = 0; k < count; ++k) out.emplace_back(root);
  }
  std::sort(out.begin(), out.end(), numeric_less);
  return out;
}

}  // namespace

std::vector<Scalar> eigenvalues_from_power_sums(const std::vector<Scalar>& p, const RootOptions& options) {
  if (p.empty()) return {};
  const auto e = elementary_from_power_sums(p);
  const std::size_t N = p.size();
  if (!e[1].exact()) return numeric_roots(e, options.cluster_tol);
  CycloPoly poly(N + 1);
  for (std::size_t k = 0; k <= N; ++k) poly[N - k] = k % 2 ? -e[k].cyclo() : e[k].cyclo();
  while (poly.size() > 1 && poly.front().is_zero()) poly.erase(poly.begin());
  if (poly.size() == 1) return {};
  std::vector<Scalar> out;
  for (auto& r : roots_in_field(poly, {options.conductor, true})) out.emplace_back(std::move(r));
  return out;
}

}  // namespace frobtrace
