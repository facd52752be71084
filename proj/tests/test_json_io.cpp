#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "mono/construction.hpp"
#include "mono/errors.hpp"
#include "mono/json_io.hpp"

using namespace mono;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mono_test_" + name);
}

AnchorTable sample_table() {
  return build_anchor_table({1, {}}, {CappedWeightedL1{{Rational(1)}}}, 50);
}

}  // namespace

TEST_CASE("table round trip") {
  const AnchorTable t = sample_table();
  const auto path = temp_path("roundtrip.json");
  save_table(t, path);
  const AnchorTable back = load_table(path);
  CHECK(back.depth() == 50);
  CHECK(back.descriptor() == t.descriptor());
  CHECK(to_json(back) == to_json(t));
  CHECK(to_string(back.anchor(50).k) == "620032166737800025029518121518371781111");
  std::filesystem::remove(path);
}

TEST_CASE("table document layout") {
  const json j = to_json(sample_table());
  CHECK(j["version"] == kFileVersion);
  CHECK(j["N"] == 50);
  CHECK(j["anchors"][4]["k"] == "34");
  CHECK(j["anchors"][4]["m"] == 2);
  CHECK(j["anchors"][4]["j"] == 2);
  CHECK(j["deltas"][2] == "1/2");
  CHECK(j["spec"]["type"] == "capped_l1");
  CHECK(j["spec"]["weights"][0] == "1/1");
}

TEST_CASE("edited tables are rejected") {
  json j = to_json(sample_table());
  SUBCASE("k") {
    j["anchors"][2]["k"] = "6";
    CHECK_THROWS_AS(table_from_json(j), CorruptedTableError);
  }
  SUBCASE("pairing") {
    j["anchors"][3]["j"] = 2;
    CHECK_THROWS_AS(table_from_json(j), CorruptedTableError);
  }
  SUBCASE("delta") {
    j["deltas"][5] = "1/2";
    CHECK_THROWS_AS(table_from_json(j), CorruptedTableError);
  }
  SUBCASE("count") {
    j["N"] = 49;
    CHECK_THROWS_AS(table_from_json(j), CorruptedTableError);
  }
  SUBCASE("message") {
    j["anchors"][2]["k"] = "6";
    try {
      table_from_json(j);
    } catch (const CorruptedTableError& e) {
      CHECK(std::string(e.what()).rfind("corrupted table: ", 0) == 0);
    }
  }
}

TEST_CASE("malformed documents") {
  json j = to_json(sample_table());
  j["version"] = 2;
  CHECK_THROWS_AS(table_from_json(j), ParseError);
  json extra = to_json(sample_table());
  extra["note"] = "x";
  CHECK_THROWS_AS(table_from_json(extra), ParseError);
  CHECK_THROWS_AS(load_table(temp_path("does_not_exist.json")), ParseError);

  const auto path = temp_path("garbage.json");
  std::ofstream(path) << "{not json";
  CHECK_THROWS_AS(load_table(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("descriptor and spec parsing") {
  const GroupDescriptor g = descriptor_from_json(json::parse(R"({"free_rank":2,"torsion_moduli":[3]})"));
  CHECK(g.free_rank == 2);
  CHECK(g.torsion_moduli == std::vector<std::int64_t>{3});
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"free_rank":1,"rank":2})")), ParseError);
  CHECK_THROWS_AS(descriptor_from_json(json::parse(R"({"torsion_moduli":[1]})")), ShapeError);

  const NormSpec s = spec_from_json(json::parse(R"({"type":"capped_l1","weights":["1/2",3]})"));
  CHECK(to_json(s).dump() == R"({"type":"capped_l1","weights":["1/2","3/1"]})");
  CHECK(spec_from_json(json::parse(R"({"type":"rational_rotation","alpha":"1/3"})")).type_name() ==
        "rational_rotation");
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"type":"l7"})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"type":"capped_linf","scale":"1/0"})")), ParseError);
}

TEST_CASE("element parsing") {
  const GroupDescriptor g{1, {5}};
  const ExtElement x = element_from_json(g, json::parse(R"({"h":[-2,7],"k":"123456789012345678901"})"));
  CHECK(x.h.free == std::vector<std::int64_t>{-2});
  CHECK(x.h.torsion == std::vector<std::int64_t>{2});
  CHECK(to_string(x.k) == "123456789012345678901");
  CHECK(to_json(x).dump() == R"({"h":[-2,2],"k":"123456789012345678901"})");
  CHECK(element_from_json(g, json::parse(R"({"h":[1,1],"k":-4})")).k == -4);
  CHECK_THROWS_AS(element_from_json(g, json::parse(R"({"h":[1]})")), ShapeError);
  CHECK_THROWS_AS(element_from_json(g, json::parse(R"({"h":[1,1],"z":1})")), ParseError);
}

TEST_CASE("result serialization") {
  const AnchorTable t = sample_table();
  const EvalResult exact = evaluate(t, {{{0}, {}}, BigInt(2)});
  CHECK(to_json(exact).dump() ==
        R"({"kind":"exact","value":"1/2","witness":{"coeffs":{"2":1},"residual":[0],"cost":"1/2"},"truncation_level":9})");
  const EvalResult interval = evaluate(t, {{{0}, {}}, BigInt(1)});
  CHECK(to_json(interval).dump() ==
        R"({"kind":"interval","lower":"1023/1024","upper":"1/1","truncation_level":8})");
  const EvalResult h_only = evaluate(t, {{{0}, {}}, BigInt(0)});
  CHECK(to_json(h_only)["witness"] == "H-only");
}

TEST_CASE("shared block") {
  const json s = shared_block(sample_table());
  CHECK(s["pi"][2] == json::array({2, 1}));
  CHECK(s["k"][3] == "11");
  CHECK(s["delta"].size() == 50);
}
