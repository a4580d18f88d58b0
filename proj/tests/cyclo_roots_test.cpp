#include <gtest/gtest.h>

#include <random>

#include "frobtrace/cyclo_roots.hpp"
#include "frobtrace/error.hpp"
#include "frobtrace/lll.hpp"

using namespace frobtrace;

namespace {

CycloPoly from_roots(const std::vector<CycloNum>& roots) {
  CycloPoly p{CycloNum(1L)};
  for (const auto& r : roots) {
    CycloPoly next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * r;
    }
    p = std::move(next);
  }
  return p;
}

CycloNum small_cyclo(std::mt19937_64& rng, std::uint32_t n) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<mpq_class> c(euler_phi(n));
  for (auto& x : c) x = coeff(rng);
  return CycloNum::from_power_basis(n, c);
}

}  // namespace

TEST(LllTest, ReducesKnownLattice) {
  IntMatrix b{{1, 1, 1}, {-1, 0, 2}, {3, 5, 6}};
  ASSERT_TRUE(lll_reduce(b));
  mpz_class shortest = b[0][0] * b[0][0] + b[0][1] * b[0][1] + b[0][2] * b[0][2];
  EXPECT_LE(shortest, 3);
  IntMatrix dep{{1, 2}, {2, 4}};
  EXPECT_FALSE(lll_reduce(dep));
}

TEST(CycloRootsTest, SquareRootOfMinusSeven) {
  const CycloPoly p{CycloNum(7L), CycloNum(0L), CycloNum(1L)};
  const auto roots = roots_in_field(p, {7});
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0] + roots[1], CycloNum(0L));
  EXPECT_EQ(roots[0] * roots[0], CycloNum(-7L));
}

TEST(CycloRootsTest, NonSplitIsReported) {
  // x^2 - 2 has no root in Q(zeta_3)
  const CycloPoly p{CycloNum(-2L), CycloNum(0L), CycloNum(1L)};
  try {
    roots_in_field(p, {3});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "E_NONSPLIT");
  }
  RootSearch lenient{3, false};
  EXPECT_TRUE(roots_in_field(p, lenient).empty());
  // but sqrt 2 lies in Q(zeta_8)
  EXPECT_EQ(roots_in_field(p, {8}).size(), 2u);
}

TEST(CycloRootsTest, CubeRootsInQZeta21) {
  const CycloNum s = gauss_sum(7);
  const CycloNum lambda = s.scaled(7);
  const CycloPoly p{-lambda, CycloNum(0L), CycloNum(0L), CycloNum(1L)};
  const auto roots = roots_in_field(p, {21});
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots.front(), -s);
  for (const auto& r : roots) EXPECT_EQ(r.pow(3), lambda);
}

TEST(CycloRootsTest, ZeroRootsAndMultiplicity) {
  const CycloNum z = CycloNum::zeta(5);
  const auto roots = roots_in_field(from_roots({0L, z, z, z, CycloNum(2L)}), {5});
  EXPECT_EQ(roots, (std::vector<CycloNum>{0L, 2L, z, z, z}));
}

TEST(CycloRootsProperty, RecoversRandomRootMultisets) {
  std::mt19937_64 rng(21);
  const std::uint32_t fields[] = {1, 3, 4, 5, 8, 12, 24};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<CycloNum> roots;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      CycloNum r;
      while (r.is_zero()) r = small_cyclo(rng, fields[rng() % std::size(fields)]);
      roots.push_back(r);
      if (rng() % 4 == 0) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    EXPECT_EQ(roots_in_field(from_roots(roots), {24}), roots) << "trial " << trial;
  }
}
