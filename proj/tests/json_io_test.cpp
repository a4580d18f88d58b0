#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "frobtrace/error.hpp"
#include "frobtrace/json_io.hpp"
#include "test_support.hpp"

using namespace frobtrace;
using namespace frobtrace::testing;
using json_io::json;

namespace {

std::string fixture(const std::string& name) { return std::string(FROBTRACE_FIXTURE_DIR) + "/" + name; }

template <class F>
std::string error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

}  // namespace

TEST(JsonCyclo, RoundTripAndFormat) {
  const CycloNum x = sqrt_m7().scaled(mpq_class(-3, 4)) + CycloNum(mpq_class(1, 2));
  const json j = json_io::to_json(x);
  EXPECT_EQ(j["n"], 7);
  EXPECT_EQ(j["c"].size(), 6u);
  EXPECT_EQ(j["c"][0], "-1/4");
  EXPECT_EQ(json_io::cyclo_from_json(j), x);
  EXPECT_EQ(json_io::cyclo_from_json(json(5)), CycloNum(5L));
  EXPECT_EQ(json_io::cyclo_from_json(json("-2/6")), CycloNum(mpq_class(-1, 3)));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 30);
    std::vector<mpq_class> c(euler_phi(n));
    for (auto& v : c) v = mpq_class(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5));
    for (auto& v : c) v.canonicalize();
    const CycloNum y = CycloNum::from_power_basis(n, c);
    EXPECT_EQ(json_io::cyclo_from_json(json::parse(json_io::to_json(y).dump())), y);
  }
}

TEST(JsonCyclo, RejectsMalformed) {
  EXPECT_EQ(error_code([] { json_io::cyclo_from_json(json::parse(R"({"n": 7, "c": ["1"]})")); }), "E_PARSE");
  EXPECT_EQ(error_code([] { json_io::cyclo_from_json(json::parse(R"({"n": 3, "c": ["1.5", "0"]})")); }), "E_PARSE");
  EXPECT_EQ(error_code([] { json_io::cyclo_from_json(json::parse(R"({"n": 3, "c": ["1/0", "0"]})")); }), "E_PARSE");
  EXPECT_EQ(error_code([] { json_io::cyclo_from_json(json::parse(R"({"c": []})")); }), "E_PARSE");
  EXPECT_EQ(error_code([] { json_io::cyclo_from_json(json(1.5)); }), "E_PARSE");
}

TEST(JsonFiles, ReadErrors) {
  EXPECT_EQ(error_code([] { json_io::read_file(fixture("does_not_exist.json")); }), "E_IO");
  const auto bad = std::filesystem::temp_directory_path() / "frobtrace_bad.json";
  std::ofstream(bad) << "{ not json";
  EXPECT_EQ(error_code([&] { json_io::read_file(bad); }), "E_PARSE");
  std::filesystem::remove(bad);
}

TEST(Fixtures, GroupMatchesBuilder) {
  const GroupData g = json_io::group_from_json(json_io::read_file(fixture("c7c3_group.json")));
  const GroupData b = library::named_shape("c7c3");
  EXPECT_EQ(g.order, b.order);
  EXPECT_EQ(g.mul, b.mul);
  EXPECT_EQ(g.inertia, b.inertia);
  EXPECT_EQ(g.frob, b.frob);
}

TEST(Fixtures, TableMatchesBuilder) {
  const Group g = c7c3();
  const CharTable t = json_io::chartable_from_json(json_io::read_file(fixture("c7c3_chartab.json")), g);
  const CharTable b = ingest_chartable(g, c7c3_table_columns(), c7c3_table_rows());
  EXPECT_EQ(t.rows, b.rows);
  EXPECT_TRUE(check_orthogonality(g, t).ok());
}

TEST(Fixtures, CountsMatchBuilder) {
  for (bool swapped : {false, true}) {
    const auto file = json_io::counts_from_json(json_io::read_file(fixture(swapped ? "xprime_counts.json" : "x_counts.json")));
    EXPECT_EQ(file.genus, 3u);
    ASSERT_TRUE(file.q.has_value());
    EXPECT_EQ(*file.q, 7u);
    const auto expected = curve_x_counts(swapped);
    ASSERT_EQ(file.entries.size(), expected.size());
    EXPECT_EQ(file.entries.size(), 42u);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(file.entries[i].slot, expected[i].slot);
      EXPECT_EQ(file.entries[i].count, expected[i].count);
    }
  }
  const auto seven = json_io::counts_from_json(json_io::read_file(fixture("x_degree3_counts.json")));
  EXPECT_EQ(seven.entries.size(), 7u);
  const auto full = json_io::counts_from_json(json_io::read_file(fixture("x_counts.json")));
  for (const auto& e : seven.entries) {
    const auto it = std::find_if(full.entries.begin(), full.entries.end(),
                                 [&](const CountEntry& f) { return f.slot == e.slot; });
    ASSERT_NE(it, full.entries.end());
    EXPECT_EQ(it->count, e.count);
  }
}

TEST(JsonTraces, RoundTripExactAndNumeric) {
  const LocalShape shape = c7c3_shape();
  const auto data = dataset_from_counts(curve_x_counts(false), shape, 3);
  const auto back = json_io::traces_from_json(json::parse(json_io::to_json(data).dump()), shape);
  EXPECT_EQ(back.size(), data.size());
  for (const auto& [slot, e] : data.entries) EXPECT_EQ(*back.find(slot.g, slot.r), e.trace);

  const json numeric = json::parse(R"({"entries": [{"g": 0, "r": 3, "trace": {"re": 1.5, "im": 0}},
                                                   {"g": 1, "r": 3, "trace": 2}], "frobenius": "geometric"})");
  const auto nd = json_io::traces_from_json(numeric, shape);
  EXPECT_EQ(nd.mode, Mode::numeric);
  EXPECT_EQ(nd.frobenius, FrobeniusConvention::geometric);
  EXPECT_EQ(error_code([&] { json_io::traces_from_json(json::parse(R"({"entries": [{"g": 0, "trace": 1}]})"), shape); }),
            "E_PARSE");
  EXPECT_EQ(error_code([&] {
              json_io::traces_from_json(json::parse(R"({"entries": [{"g": 1, "r": 1, "trace": 1}]})"), shape);
            }),
            "E_SLOT");
}

TEST(JsonWd, RoundTrip) {
  const WDData wd{9, {{1, {Complex(1, 0)}}, {2, {Complex(0, 3), Complex(0, -3)}}}};
  const WDData back = json_io::wd_from_json(json::parse(json_io::to_json(wd).dump()));
  EXPECT_EQ(back.q, 9u);
  ASSERT_EQ(back.parts.size(), 2u);
  EXPECT_EQ(back.parts[1].eigs, wd.parts[1].eigs);
}

TEST(JsonReconstruction, CurveXOutputShape) {
  const LocalShape shape = c7c3_shape();
  const CharTable table = ingest_chartable(shape.group, c7c3_table_columns(), c7c3_table_rows());
  const auto orbits = twist_orbits(table, shape.group);
  ReconstructOptions opts;
  opts.dim_bound = 6;
  const auto rec = reconstruct(dataset_from_counts(curve_x_counts(false), shape, 3), table, shape, orbits, opts);
  const json j = json_io::to_json(rec);
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["mode"], "exact");
  ASSERT_EQ(j["orbits"].size(), 2u);
  EXPECT_EQ(j["orbits"][0]["m"], 3);
  EXPECT_EQ(json_io::cyclo_from_json(j["orbits"][0]["lambda"][0]), sqrt_m7().scaled(7));
  EXPECT_EQ(json_io::cyclo_from_json(j["orbits"][1]["lambda"][0]), sqrt_m7().scaled(-7));
}
