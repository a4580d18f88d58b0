#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "frobtrace/chartable.hpp"
#include "frobtrace/curves.hpp"
#include "frobtrace/reconstruct.hpp"
#include "frobtrace/wdrep.hpp"
#include "frobtrace/weilmodel.hpp"

namespace frobtrace::json_io {

using json = nlohmann::ordered_json;

// Throws IoError: E_IO when the file cannot be read, E_PARSE on malformed JSON.
json read_file(const std::filesystem::path& path);

// Schema violations throw IoError (E_PARSE) naming the offending path.

mpq_class rational_from_json(const json& j, const std::string& where);
std::string rational_string(const mpq_class& x);

// {"n": n, "c": [phi(n) rational strings]}; readers also accept a bare integer
// or rational string.
json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const json& j, const std::string& where = "value");

// exact -> CycloNum JSON, numeric -> {"re": .., "im": ..}
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& where = "value");

json to_json(const GroupData& g);
GroupData group_from_json(const json& j);

json to_json(const CharTable& t);
// Parses and validates through ingest_chartable.
CharTable chartable_from_json(const json& j, const Group& group);

json to_json(const TraceDataset& d);
// Optional "frobenius": "arithmetic" | "geometric".
TraceDataset traces_from_json(const json& j, const LocalShape& shape);

struct CountFile {
  std::uint32_t genus = 0;
  std::optional<std::uint64_t> q;
  FrobeniusConvention frobenius = FrobeniusConvention::arithmetic;
  std::vector<CountEntry> entries;
};
CountFile counts_from_json(const json& j);
json to_json(const CountFile& c);

json to_json(const WDData& wd);
WDData wd_from_json(const json& j);
json to_json(const WMReport& r);

json to_json(const std::vector<TwistOrbit>& orbits, const CharTable& table);
json to_json(const Reconstruction& rec);

std::string dump(const json& j, bool pretty);

}  // namespace frobtrace::json_io
