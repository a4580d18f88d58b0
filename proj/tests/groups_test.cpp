#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "frobtrace/error.hpp"
#include "frobtrace/group_library.hpp"
#include "frobtrace/groups.hpp"

using namespace frobtrace;

TEST(GroupsTest, C7C3ShapeIsValid) {
  const auto data = library::named_shape("c7c3");
  const auto report = validate_group(data);
  EXPECT_TRUE(report.ok()) << report.summary();
  const Group g(data);
  EXPECT_EQ(g.order(), 21u);
  EXPECT_EQ(g.inertia_order(), 7u);
  EXPECT_EQ(g.residue_degree(), 3u);
  EXPECT_EQ(g.degree(g.frob()), 1u);
}

TEST(GroupsTest, FrobInsideInertiaIsRejected) {
  auto data = library::named_shape("c7c3");
  data.frob = 3;
  const auto report = validate_group(data);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.summary().find("does not generate G/I"), std::string::npos) << report.summary();
  EXPECT_THROW(Group{data}, DomainError);
}

TEST(GroupsTest, NonPermutationRowIsRejected) {
  auto data = library::cyclic(4);
  data.mul[1 * 4 + 2] = data.mul[1 * 4 + 3];
  const auto report = validate_group(data);
  ASSERT_FALSE(report.ok());
  EXPECT_NE(report.summary().find("not a permutation"), std::string::npos);
}

TEST(GroupsTest, NonNormalInertiaIsRejected) {
  // reflection subgroup of S3 is not normal
  auto data = library::with_inertia(library::dihedral(3), {3}, 1);
  EXPECT_FALSE(validate_group(data).ok());
}

TEST(GroupsTest, ClassSizes) {
  const Group g(library::named_shape("c7c3"));
  auto sizes = g.classes().sizes;
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint32_t>{1, 3, 3, 7, 7}));
  EXPECT_EQ(g.classes().count(), 5u);
  EXPECT_EQ(Group(library::cyclic(6)).classes().count(), 6u);
  EXPECT_EQ(Group(library::cyclic(1)).classes().count(), 1u);
  EXPECT_EQ(Group(library::quaternion()).classes().count(), 5u);
  EXPECT_EQ(Group(library::symmetric(4)).classes().count(), 5u);
}

TEST(GroupsTest, DegreeMap) {
  const Group g(library::named_shape("c7c3"));
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    EXPECT_EQ(g.degree(x) == 0, g.in_inertia(x));
    EXPECT_EQ(g.degree(x), x / 7);
  }
  EXPECT_EQ(g.coset(3), g.coset(0));
  EXPECT_EQ(g.coset(0), (std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6}));
}

// Brute-force oracle: classes from a fresh conjugation pass must partition G.
TEST(GroupsProperty, ClassesPartitionAndAreConjugationClosed) {
  for (const auto& name : library::named_shapes()) {
    const Group g(library::named_shape(name));
    const auto& cls = g.classes();
    EXPECT_EQ(std::accumulate(cls.sizes.begin(), cls.sizes.end(), 0u), g.order()) << name;
    for (std::uint32_t c = 0; c < cls.count(); ++c) EXPECT_EQ(g.class_of(cls.reps[c]), c);
    for (std::uint32_t x = 0; x < g.order(); ++x)
      for (std::uint32_t y = 0; y < g.order(); ++y)
        EXPECT_EQ(g.class_of(g.mul(g.mul(y, x), g.inverse(y))), g.class_of(x));
  }
}

TEST(GroupsProperty, LibraryTablesAreAssociative) {
  std::mt19937 rng(3);
  for (const auto& data : {library::dihedral(5), library::metacyclic(7, 3, 2), library::quaternion(),
                           library::symmetric(4), library::metacyclic(13, 4, 5)}) {
    EXPECT_TRUE(validate_group(data).ok());
    std::uniform_int_distribution<std::uint32_t> pick(0, data.order - 1);
    const Group g(data);
    for (int t = 0; t < 500; ++t) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
    }
  }
}

TEST(GroupsTest, UnknownShapeIsConfigError) { EXPECT_THROW(library::named_shape("nope"), ConfigError); }
