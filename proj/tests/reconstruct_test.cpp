#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "frobtrace/error.hpp"
#include "frobtrace/reconstruct.hpp"
#include "test_support.hpp"

using namespace frobtrace;
using namespace frobtrace::testing;

namespace {

struct Fixture {
  LocalShape shape = c7c3_shape();
  CharTable table = ingest_chartable(shape.group, c7c3_table_columns(), c7c3_table_rows());
  std::vector<TwistOrbit> orbits = twist_orbits(table, shape.group);
};

std::vector<Scalar> scalars(std::initializer_list<long> xs) {
  std::vector<Scalar> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}


}  // namespace

TEST(TwistOrbitTest, C7C3Group) {
  Fixture fx;
  ASSERT_EQ(fx.orbits.size(), 3u);
  EXPECT_EQ(fx.orbits[0].members, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(fx.orbits[0].m, 1u);
  EXPECT_EQ(fx.orbits[1].members, (std::vector<std::size_t>{3}));
  EXPECT_EQ(fx.orbits[1].m, 3u);
  EXPECT_EQ(fx.orbits[2].members, (std::vector<std::size_t>{4}));
  EXPECT_EQ(fx.orbits[2].m, 3u);
}

TEST(TwistOrbitTest, SmallShapes) {
  {
    const Group g(library::named_shape("c2_unramified"));
    const auto orbits = twist_orbits(compute_chartable(g), g);
    ASSERT_EQ(orbits.size(), 1u);
    EXPECT_EQ(orbits[0].m, 1u);
    EXPECT_EQ(orbits[0].members.size(), 2u);
  }
  {
    const Group g(library::cyclic(5));  // I = G, f = 1
    const auto orbits = twist_orbits(compute_chartable(g), g);
    ASSERT_EQ(orbits.size(), 5u);
    for (const auto& o : orbits) EXPECT_EQ(o.m, 1u);
  }
}

TEST(TwistOrbitProperty, InnerProductMatchesStabilizer) {
  for (const auto& name : library::named_shapes()) {
    const Group g(library::named_shape(name));
    const auto table = compute_chartable(g);
    for (std::size_t i = 0; i < table.size(); ++i)
      EXPECT_EQ(inertia_norm(table, g, i), mpq_class(twist_stabilizer(table, g, i))) << name << " row " << i;
    const auto orbits = twist_orbits(table, g);
    std::size_t total = 0;
    for (const auto& o : orbits) {
      total += o.members.size();
      EXPECT_EQ(o.members.size() * o.m, g.residue_degree());
    }
    EXPECT_EQ(total, table.size());
  }
}

TEST(PowerSumTest, CurveXValue) {
  Fixture fx;
  const auto data = dataset_from_counts(curve_x_counts(false), fx.shape, 3);
  const auto& orbit = fx.orbits[orbit_of(fx.orbits, rho1_row(fx.table, fx.shape.group))];
  const CycloNum p1 = psi_power_sum(orbit, 1, data, fx.table, fx.shape.group).cyclo();
  EXPECT_EQ(p1 * p1, CycloNum(-343L));
  // under this labelling the sum is 7 sqrt(-7)
  EXPECT_EQ(p1, sqrt_m7().scaled(7));
}

TEST(PowerSumTest, DegreeThreeOnlySevenEntries) {
  Fixture fx;
  std::vector<CountEntry> seven{{{0, 3}, 344}, {{1, 3}, 295}, {{2, 3}, 295}, {{4, 3}, 295},
                                {{3, 3}, 393}, {{5, 3}, 393}, {{6, 3}, 393}};
  const auto data = dataset_from_counts(seven, fx.shape, 3);
  EXPECT_EQ(data.size(), 7u);
  const CycloNum p1 = psi_power_sum(fx.orbits[1], 1, data, fx.table, fx.shape.group).cyclo();
  const CycloNum p2 = psi_power_sum(fx.orbits[2], 1, data, fx.table, fx.shape.group).cyclo();
  EXPECT_EQ(p1, -p2);
  EXPECT_EQ(p1 * p1, CycloNum(-343L));
}

TEST(PowerSumTest, TrivialRep) {
  Fixture fx;
  const WeilRep triv{{{0, {CycloNum(1L)}}}};
  const auto data = dataset_from_rep(triv, fx.table, fx.shape, {1, 2, 3});
  for (std::uint32_t d = 1; d <= 3; ++d)
    EXPECT_EQ(psi_power_sum(fx.orbits[0], d, data, fx.table, fx.shape.group), Scalar(1L));
}

TEST(PowerSumTest, MissingEntryIsNamed) {
  Fixture fx;
  auto counts = curve_x_counts(false);
  counts.erase(std::remove_if(counts.begin(), counts.end(),
                              [](const CountEntry& e) { return e.slot.g == 5 && e.slot.r == 3; }),
               counts.end());
  const auto data = dataset_from_counts(counts, fx.shape, 3);
  try {
    psi_power_sum(fx.orbits[1], 1, data, fx.table, fx.shape.group);
    FAIL();
  } catch (const MissingDataError& e) {
    ASSERT_EQ(e.missing.size(), 1u);
    EXPECT_EQ(e.missing[0].g, 5u);
    EXPECT_NE(std::string(e.what()).find("g=5"), std::string::npos);
  }
}

TEST(NewtonTest, KnownValues) {
  EXPECT_TRUE(eigenvalues_from_power_sums(scalars({0, 0, 0})).empty());
  EXPECT_EQ(eigenvalues_from_power_sums(scalars({1, 1, 1})), scalars({1}));
  EXPECT_EQ(eigenvalues_from_power_sums(scalars({5, 13, 35})), scalars({2, 3}));
}

TEST(NewtonTest, NumericKnownValues) {
  std::vector<Scalar> p;
  for (double v : {5.0, 13.0, 35.0}) p.emplace_back(Complex(v, 0));
  const auto roots = eigenvalues_from_power_sums(p);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].complex().real(), 2.0, 1e-9);
  EXPECT_NEAR(roots[1].complex().real(), 3.0, 1e-9);
  // double root 2 and a zero root
  std::vector<Scalar> q;
  for (double v : {4.0, 8.0, 16.0}) q.emplace_back(Complex(v, 0));
  const auto r2 = eigenvalues_from_power_sums(q);
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_NEAR(std::abs(r2[0].complex() - 2.0), 0.0, 1e-6);
}

TEST(NewtonTest, NumericAmbiguityIsReported) {
  // roots 1 and 1 + 1e-5: apart by more than the cluster tolerance but close
  const Complex a = 1.0, b = 1.0 + 1e-5;
  std::vector<Scalar> p{Scalar(a + b), Scalar(a * a + b * b)};
  EXPECT_THROW(eigenvalues_from_power_sums(p), DomainError);
}

TEST(NewtonProperty, ExactRoundTrip) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<Scalar> values;
    for (std::size_t i = 0; i < n; ++i) values.emplace_back(random_cyclo(rng));
    const std::size_t N = n + rng() % 3;
    auto roots = eigenvalues_from_power_sums(power_sums_of(values, N), {24});
    std::sort(values.begin(), values.end(), [](const Scalar& a, const Scalar& b) { return a.cyclo() < b.cyclo(); });
    EXPECT_EQ(roots, values) << "trial " << trial;
  }
}

TEST(ReconstructTest, TrivialRep) {
  Fixture fx;
  const WeilRep triv{{{0, {CycloNum(1L)}}}};
  const auto data = dataset_from_rep(triv, fx.table, fx.shape, {1, 2, 3});
  ReconstructOptions opts;
  opts.dim_bound = 1;
  const auto rec = reconstruct(data, fx.table, fx.shape, fx.orbits, opts);
  ASSERT_EQ(rec.orbits.size(), 1u);
  EXPECT_EQ(rec.canonical.lambda.at(0), scalars({1}));
  EXPECT_EQ(rec.skipped.size(), 2u);
  ASSERT_TRUE(rec.rep.has_value());
}

TEST(ReconstructTest, CurvesXAndXPrime) {
  Fixture fx;
  ReconstructOptions opts;
  opts.dim_bound = 6;
  const auto x = reconstruct(dataset_from_counts(curve_x_counts(false), fx.shape, 3), fx.table, fx.shape, fx.orbits, opts);
  const auto xp = reconstruct(dataset_from_counts(curve_x_counts(true), fx.shape, 3), fx.table, fx.shape, fx.orbits, opts);
  ASSERT_EQ(x.orbits.size(), 2u);
  EXPECT_EQ(x.orbits[0].rep_char, 3u);
  EXPECT_EQ(x.orbits[1].rep_char, 4u);
  const CycloNum l1 = x.orbits[0].lambda.at(0).cyclo(), l2 = x.orbits[1].lambda.at(0).cyclo();
  ASSERT_EQ(x.orbits[0].lambda.size(), 1u);
  ASSERT_EQ(x.orbits[1].lambda.size(), 1u);
  EXPECT_EQ(l1, -l2);
  EXPECT_EQ(l1 * l1, CycloNum(-343L));
  ASSERT_TRUE(x.orbits[0].mu.has_value());
  EXPECT_EQ(x.orbits[0].mu->at(0).cyclo().pow(2), CycloNum(-7L));
  EXPECT_EQ(x.orbits[1].mu->at(0).cyclo().pow(2), CycloNum(-7L));
  EXPECT_EQ(x.dim, 6u);
  // X' swaps
  EXPECT_EQ(xp.orbits[0].lambda.at(0).cyclo(), l2);
  EXPECT_EQ(xp.orbits[1].lambda.at(0).cyclo(), l1);
  EXPECT_FALSE(rep_equal(x.canonical, xp.canonical));
  EXPECT_TRUE(rep_equal(x.canonical, x.canonical));
}

TEST(ReconstructTest, MuChoiceDoesNotMatter) {
  Fixture fx;
  const CycloNum s = sqrt_m7();
  const WeilRep a{{{3, {s}}}}, b{{{3, {s * CycloNum::zeta(3)}}}};
  EXPECT_TRUE(rep_equal(canonical_form(a, fx.table, fx.shape.group, fx.orbits),
                        canonical_form(b, fx.table, fx.shape.group, fx.orbits)));
}

TEST(ReconstructTest, MissingDegreeIsConfigError) {
  Fixture fx;
  const WeilRep triv{{{0, {CycloNum(1L)}}}};
  const auto data = dataset_from_rep(triv, fx.table, fx.shape, {1, 2, 3});
  ReconstructOptions opts;
  opts.dim_bound = 6;
  EXPECT_THROW(reconstruct(data, fx.table, fx.shape, fx.orbits, opts), ConfigError);
}

TEST(ReconstructTest, DimensionExceeded) {
  Fixture fx;
  // each orbit fits under D = 3 on its own, together they give 2 + 3
  const WeilRep rep{{{0, {CycloNum(2L), CycloNum(5L)}}, {3, {CycloNum(7L)}}}};
  const auto data = dataset_from_rep(rep, fx.table, fx.shape, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  ReconstructOptions opts;
  opts.dim_bound = 3;
  try {
    reconstruct(data, fx.table, fx.shape, fx.orbits, opts);
    FAIL() << "expected E_DIM_EXCEEDED";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "E_DIM_EXCEEDED");
  }
}

TEST(ReconstructTest, TruncatedPowerSumsDoNotSplit) {
  Fixture fx;
  // p1 = 6, p2 = 14 give x^2 - 6x + 11 with roots 3 +- sqrt(-2), outside Q(zeta_21)
  const WeilRep big{{{0, {CycloNum(1L), CycloNum(2L), CycloNum(3L)}}}};
  const auto data = dataset_from_rep(big, fx.table, fx.shape, {1, 2});
  ReconstructOptions opts;
  opts.dim_bound = 2;
  try {
    reconstruct(data, fx.table, fx.shape, fx.orbits, opts);
    FAIL() << "expected E_NONSPLIT";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "E_NONSPLIT");
  }
}

TEST(ReconstructTest, NumericModeMatchesExact) {
  Fixture fx;
  ReconstructOptions opts;
  opts.dim_bound = 6;
  const auto data = dataset_from_counts(curve_x_counts(false), fx.shape, 3);
  const auto exact = reconstruct(data, fx.table, fx.shape, fx.orbits, opts);
  opts.mode = Mode::numeric;
  const auto num = reconstruct(data, fx.table, fx.shape, fx.orbits, opts);
  EXPECT_TRUE(rep_equal(exact.canonical, num.canonical, 1e-9));
  ASSERT_TRUE(num.orbits[0].mu.has_value());
  EXPECT_NEAR(std::abs(num.orbits[0].mu->at(0).complex()), std::sqrt(7.0), 1e-9);
}

TEST(ReconstructProperty, LinearityAndOrthogonality) {
  Fixture fx;
  std::mt19937_64 rng(8);
  const auto& g = fx.shape.group;
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = sample_weil_rep(fx.table, rng), b = sample_weil_rep(fx.table, rng);
    WeilRep sum = a;
    sum.components.insert(sum.components.end(), b.components.begin(), b.components.end());
    const auto da = dataset_from_rep(a, fx.table, fx.shape, {1, 2, 3, 6});
    const auto db = dataset_from_rep(b, fx.table, fx.shape, {1, 2, 3, 6});
    const auto ds = dataset_from_rep(sum, fx.table, fx.shape, {1, 2, 3, 6});
    for (const auto& orbit : fx.orbits)
      for (std::uint32_t d = 1; d * orbit.m <= 3; ++d)
        EXPECT_EQ(psi_power_sum(orbit, d, ds, fx.table, g),
                  psi_power_sum(orbit, d, da, fx.table, g) + psi_power_sum(orbit, d, db, fx.table, g));
    // a single component evaluated on a foreign orbit gives zero
    const auto& comp = a.components.front();
    const auto home = orbit_of(fx.orbits, comp.character);
    const auto single = dataset_from_rep(WeilRep{{comp}}, fx.table, fx.shape, {1, 2, 3, 6});
    for (std::size_t o = 0; o < fx.orbits.size(); ++o) {
      if (o == home) continue;
      for (std::uint32_t d = 1; d * fx.orbits[o].m <= 6; ++d)
        if (6 % (d * fx.orbits[o].m) == 0 || d * fx.orbits[o].m <= 3)
          EXPECT_TRUE(psi_power_sum(fx.orbits[o], d, single, fx.table, g).is_zero());
    }
  }
}

TEST(ReconstructProperty, RoundTripSmall) {
  for (const std::string name : {"c7c3", "d4_i4", "c6_i2", "s3_i3"}) {
    const LocalShape shape(Group(library::named_shape(name)), 7);
    const auto table = compute_chartable(shape.group);
    const auto orbits = twist_orbits(table, shape.group);
    std::mt19937_64 rng(99);
    ReconstructOptions opts;
    opts.dim_bound = 12;
    opts.conductor = 24;
    std::vector<std::uint32_t> degrees;
    for (std::uint32_t r = 1; r <= 12 * shape.group.residue_degree(); ++r) degrees.push_back(r);
    for (int trial = 0; trial < 10; ++trial) {
      const auto rep = sample_weil_rep(table, rng);
      const auto data = dataset_from_rep(rep, table, shape, degrees);
      const auto rec = reconstruct(data, table, shape, orbits, opts);
      EXPECT_TRUE(rep_equal(rec.canonical, canonical_form(rep, table, shape.group, orbits))) << name << " " << trial;
    }
  }
}
