#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "frobtrace/chartable.hpp"
#include "frobtrace/error.hpp"
#include "test_support.hpp"

using namespace frobtrace;
using frobtrace::testing::c7c3_table_columns;
using frobtrace::testing::c7c3_table_rows;

namespace {

std::vector<GroupData> test_groups() {
  return {library::cyclic(2), library::cyclic(6), library::dihedral(3), library::dihedral(4),
          library::metacyclic(7, 3, 2), library::quaternion()};
}

// Rows as sorted multiset, for comparison up to row permutation.
std::vector<std::vector<CycloNum>> sorted_rows(std::vector<std::vector<CycloNum>> rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

TEST(CharTableTest, CyclicTwo) {
  const Group g(library::cyclic(2));
  const auto t = compute_chartable(g);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.rows[0], (std::vector<CycloNum>{1L, 1L}));
  EXPECT_EQ(t.rows[1], (std::vector<CycloNum>{1L, -1L}));
}

TEST(CharTableTest, SymmetricThreeDegrees) {
  const auto t = compute_chartable(Group(library::dihedral(3)));
  EXPECT_EQ(t.degrees(), (std::vector<std::uint32_t>{1, 1, 2}));
  EXPECT_EQ(compute_chartable(Group(library::symmetric(4))).degrees(),
            (std::vector<std::uint32_t>{1, 1, 2, 3, 3}));
}

TEST(CharTableTest, AllTestGroupsAreOrthogonal) {
  for (const auto& data : test_groups()) {
    const Group g(data);
    const auto t = compute_chartable(g);
    EXPECT_EQ(t.size(), g.classes().count());
    EXPECT_TRUE(check_orthogonality(g, t).ok()) << "order " << g.order();
    const auto d = t.degrees();
    EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
    EXPECT_EQ(std::inner_product(d.begin(), d.end(), d.begin(), 0u), g.order());
  }
}

TEST(CharTableTest, QuaternionValues) {
  const Group g(library::quaternion());
  const auto t = compute_chartable(g);
  EXPECT_EQ(t.degrees(), (std::vector<std::uint32_t>{1, 1, 1, 1, 2}));
  // the 2-dim character is -2 at the central involution and 0 elsewhere
  EXPECT_EQ(t.at(g, 4, 4), CycloNum(-2L));
  EXPECT_EQ(t.at(g, 4, 1), CycloNum(0L));
}

TEST(CharTableTest, ComputedMatchesTableOneUpToGalois) {
  const Group g = frobtrace::testing::c7c3();
  const auto computed = compute_chartable(g);
  const auto fixture = ingest_chartable(g, c7c3_table_columns(), c7c3_table_rows());
  const auto target = sorted_rows(fixture.rows);
  bool matched = false;
  for (std::int64_t k = 1; k < 21 && !matched; ++k) {
    if (std::gcd<std::int64_t>(k, 21) != 1) continue;
    auto rows = computed.rows;
    for (auto& row : rows)
      for (auto& v : row) v = v.galois(k);
    matched = sorted_rows(rows) == target;
  }
  EXPECT_TRUE(matched);
}

TEST(CharTableTest, IngestAcceptsTableOne) {
  const Group g = frobtrace::testing::c7c3();
  const auto t = ingest_chartable(g, c7c3_table_columns(), c7c3_table_rows());
  EXPECT_EQ(t.degrees(), (std::vector<std::uint32_t>{1, 1, 1, 3, 3}));
  EXPECT_TRUE(check_orthogonality(g, t).ok());
}

TEST(CharTableTest, IngestRejectsSwappedEntry) {
  const Group g = frobtrace::testing::c7c3();
  auto rows = c7c3_table_rows();
  std::swap(rows[1][1], rows[2][1]);
  try {
    ingest_chartable(g, c7c3_table_columns(), rows);
    FAIL() << "expected rejection";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "E_CHARTAB_ORTHO");
  }
}

TEST(CharTableTest, IngestRejectsWrongRowCount) {
  const Group g = frobtrace::testing::c7c3();
  auto rows = c7c3_table_rows();
  rows.pop_back();
  try {
    ingest_chartable(g, c7c3_table_columns(), rows);
    FAIL() << "expected rejection";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.code(), "E_CHARTAB_SHAPE");
  }
}

TEST(CharTableTest, IngestRejectsClassSizeMismatch) {
  const Group g = frobtrace::testing::c7c3();
  auto cols = c7c3_table_columns();
  cols[1].size = 3;
  EXPECT_THROW(ingest_chartable(g, cols, c7c3_table_rows()), DomainError);
}

TEST(CharTableTest, OrderBound) {
  DixonOptions opts;
  opts.max_order = 10;
  EXPECT_THROW(compute_chartable(Group(library::cyclic(12)), opts), DomainError);
}

TEST(CharTableProperty, LargerGroupsAreOrthogonal) {
  for (const auto& data : {library::symmetric(4), library::metacyclic(13, 4, 5), library::dihedral(12),
                           library::metacyclic(31, 5, 2)}) {
    const Group g(data);
    const auto t = compute_chartable(g);
    EXPECT_TRUE(check_orthogonality(g, t).ok());
  }
}
