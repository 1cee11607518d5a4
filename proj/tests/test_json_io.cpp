#include <doctest.h>

#include <string>

#include "pries/json_io.hpp"

using namespace pries;
using pries::io::json;

TEST_CASE("poset JSON round trip") {
  auto j = io::parse(R"({"n": 3, "le": [[0, 1], [1, 2], [0, 2], [1, 1]], "labels": ["a", "b", "c"]})");
  auto p = io::poset_from_json(j);
  CHECK(p.size() == 3);
  CHECK(p.le(0, 2));
  CHECK(p.label(1) == "b");
  auto back = io::poset_to_json(p);
  CHECK(back["le"] == json::parse("[[0,1],[0,2],[1,2]]"));
  CHECK(io::poset_from_json(back) == p);
}

TEST_CASE("no transitive closure is applied") {
  auto j = io::parse(R"({"n": 3, "le": [[0, 1], [1, 2]]})");
  try {
    io::poset_from_json(j);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTransitive);
  }
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    io::parse("{\n  \"n\": 3,\n  \"le\": [[0, 1],, ]\n}");
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadInput);
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("column 17") != std::string::npos);
  }
}

TEST_CASE("schema errors are BadInput") {
  CHECK_THROWS_AS(io::poset_from_json(io::parse(R"({"le": []})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(io::parse(R"({"n": 2, "le": [[0, 5]]})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(io::parse(R"({"n": -1, "le": []})")), Error);
  CHECK_THROWS_AS(io::poset_from_json(io::parse(R"([1, 2])")), Error);
}

TEST_CASE("lattice map and spectrum JSON") {
  auto j = io::parse(R"({
    "source": {"n": 3, "le": [[0, 1], [1, 2], [0, 2]]},
    "target": {"n": 2, "le": [[0, 1]]},
    "table": [0, 0, 1]})");
  auto h = io::lattice_map_from_json(j);
  CHECK(h.table() == std::vector<Elem>{0, 0, 1});
  CHECK(io::lattice_map_to_json(h)["table"] == j["table"]);
  auto x = prime_filters(h.source_ptr());
  auto sj = io::spectrum_to_json(x);
  CHECK(sj["filters"] == json::parse("[[2],[1,2]]"));
  CHECK(sj["le"] == json::parse("[[0,1]]"));
}

TEST_CASE("witness pairs and sublocales") {
  CHECK(io::witness_pairs_to_json({{0, 1}, {2, 2}}) == json::parse(R"([{"a":0,"b":1},{"a":2,"b":2}])"));
  auto c3 = share(chain_frame(3));
  CHECK(io::sublocale_to_json(Sublocale{c3, Bits(3, {0, 2})}) == json::parse("[0,2]"));
}

TEST_CASE("JT report JSON") {
  auto reps = verify_jt(share(chain_frame(3)), share(chain_frame(2)));
  REQUIRE_FALSE(reps.empty());
  auto j = io::report_to_json(reps[0]);
  CHECK(j["finite-degenerate"] == true);
  CHECK(j["conditions"].size() == 6);
  CHECK(j.contains("witnesses"));
}
