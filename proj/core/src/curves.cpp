#include "frobtrace/curves.hpp"

#include <algorithm>
#include <thread>

#include "frobtrace/error.hpp"

namespace frobtrace {

namespace {

using Elem = FiniteField::Elem;
using FPoly = std::vector<Elem>;

void trim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FPoly poly_rem(FPoly a, const FPoly& m, const FiniteField& F) {
  trim(a);
  const Elem lead_inv = F.inv(m.back());
  while (a.size() >= m.size()) {
    const Elem c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(FPoly a, FPoly b, const FiniteField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_rem(std::move(a), b, F);
    std::swap(a, b);
  }
  return a.size() - 1;
}

}  // namespace

HyperCurve::HyperCurve(const FiniteField& field, std::vector<Elem> f) : field_(&field), f_(std::move(f)) {
  for (auto& c : f_)
    if (c >= field.size()) throw DomainError("E_CURVE", "coefficient " + std::to_string(c) + " not in the field");
  trim(f_);
  if (f_.size() < 2) throw DomainError("E_CURVE", "f must have degree at least 1");
  FPoly df(f_.size() - 1);
  for (std::size_t i = 1; i < f_.size(); ++i) df[i - 1] = field.mul(field.from_int(static_cast<long long>(i)), f_[i]);
  trim(df);
  // df = 0 only for f in F[x^p]; such f is a p-th power, hence not squarefree
  if (df.empty() || gcd_degree(f_, df, field) > 0)
    throw DomainError("E_NOT_SQUAREFREE", "f is not squarefree; the smooth model count is undefined");
}

HyperCurve HyperCurve::from_integers(const FiniteField& field, const std::vector<long long>& f) {
  std::vector<Elem> c;
  for (auto v : f) c.push_back(field.from_int(v));
  return HyperCurve(field, std::move(c));
}

HyperCurve::Elem HyperCurve::evaluate(Elem x) const {
  const FiniteField& F = *field_;
  Elem v = 0;
  for (std::size_t i = f_.size(); i-- > 0;) v = F.add(F.mul(v, x), f_[i]);
  return v;
}

HyperCurve HyperCurve::shifted(Elem c) const {
  const FiniteField& F = *field_;
  // Horner in the variable (x + c)
  FPoly out;
  for (std::size_t i = f_.size(); i-- > 0;) {
    FPoly next(out.size() + 1, 0);
    for (std::size_t j = 0; j < out.size(); ++j) {
      next[j + 1] = F.add(next[j + 1], out[j]);
      next[j] = F.add(next[j], F.mul(out[j], c));
    }
    next[0] = F.add(next[0], f_[i]);
    out = std::move(next);
  }
  return HyperCurve(F, std::move(out));
}

std::uint64_t count_points(const HyperCurve& curve, std::uint64_t bound, unsigned jobs) {
  const FiniteField& F = curve.field();
  const std::uint32_t q = F.size();
  if (q > bound)
    throw ConfigError("E_BOUND", "q = " + std::to_string(q) + " exceeds the enumeration bound " + std::to_string(bound));
  std::vector<char> square(q, 0);
  for (Elem y = 0; y < q; ++y) square[F.mul(y, y)] = 1;

  jobs = std::max(1u, std::min<unsigned>(jobs, q));
  std::vector<std::uint64_t> partial(jobs, 0);
  auto work = [&](unsigned id) {
    std::uint64_t n = 0;
    for (Elem x = id; x < q; x += jobs) {
      const Elem v = curve.evaluate(x);
      n += v == 0 ? 1 : square[v] ? 2 : 0;
    }
    partial[id] = n;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
  }
  std::uint64_t total = 0;
  for (auto n : partial) total += n;

  const auto& f = curve.coefficients();
  if (curve.poly_degree() % 2 == 1)
    total += 1;
  else if (square[f.back()])
    total += 2;
  return total;
}

mpz_class lefschetz_t1(const mpz_class& count, const mpz_class& q) { return q + 1 - count; }

mpz_class recover_t1(const mpz_class& count, const mpz_class& q, std::uint32_t genus) {
  const mpz_class g(genus);
  if (sgn(q) <= 0 || q <= 16 * g * g)
    throw DomainError("E_PRECONDITION", "recovery needs q > 16 g^2, got q = " + q.get_str() + ", g = " +
                                            std::to_string(genus));
  mpz_class t;
  mpz_fdiv_r(t.get_mpz_t(), mpz_class(1 - count).get_mpz_t(), q.get_mpz_t());
  if (2 * t > q) t -= q;
  if (t * t > 4 * g * g * q)
    throw DomainError("E_NO_T1", "no t1 = " + t.get_str() + " mod " + q.get_str() + " with |t1| <= 2g sqrt(q)");
  return t;
}

}  // namespace frobtrace
