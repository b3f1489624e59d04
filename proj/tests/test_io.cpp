#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fockcanon/io.hpp"
#include "json.hpp"

using namespace fockcanon;
namespace fs = std::filesystem;

namespace {

Multipartition mp(const char* s) { return parse_multipartition(s); }

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("fockcanon-io-" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("json layout") {
    const auto d = canonical_basis(2, FockContext(Characteristic(2), parse_charge("0")));
    const auto j = nlohmann::json::parse(to_json(d));
    CHECK(j["e"] == 2);
    CHECK(j["charge"] == nlohmann::json::array({0}));
    CHECK(j["n"] == 2);
    CHECK(j["rows"] == nlohmann::json::array({"2", "1,1"}));
    CHECK(j["cols"] == nlohmann::json::array({"1,1"}));
    REQUIRE(j["entries"].size() == 2);
    CHECK(j["entries"][0]["row"] == 0);
    CHECK(j["entries"][0]["poly"]["min_deg"] == 1);
    CHECK(j["entries"][0]["poly"]["coeffs"] == nlohmann::json::array({1}));
    CHECK_FALSE(j.contains("fingerprint"));
    const auto inf = canonical_basis(1, FockContext(Characteristic::infinite(), parse_charge("0,1")));
    CHECK(nlohmann::json::parse(to_json(inf))["e"] == "inf");
  }

  TEST_CASE("json round trip") {
    for (const char* e : {"2", "3", "inf"})
      for (const char* k : {"0", "0,1"}) {
        const auto d = canonical_basis(3, FockContext(Characteristic::parse(e), parse_charge(k)));
        const auto back = matrix_from_json(to_json(d, true));
        CHECK(back == d);
        CHECK(back.intermediate_degrees() == d.intermediate_degrees());
        CHECK(to_json(back) == to_json(d));
      }
  }

  TEST_CASE("big coefficients survive as strings") {
    const FockContext ctx(Characteristic(2), parse_charge("0"));
    DecompositionMatrix d(ctx, 1, {mp("1")}, {mp("1")});
    const BigInt big("123456789012345678901234567890");
    d.set_entry(0, 0, LaurentPoly::from_coeffs(-1, {big, -big}));
    const auto text = to_json(d);
    CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
    CHECK(matrix_from_json(text) == d);
  }

  TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(matrix_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(R"({"e": 2})"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(R"({"e":2,"charge":[0],"n":1,"rows":["1"],"cols":["1"],
      "entries":[{"row":3,"col":0,"poly":{"min_deg":0,"coeffs":[1]}}]})"),
                    std::invalid_argument);
  }

  TEST_CASE("csv and table") {
    const auto d = canonical_basis(2, FockContext(Characteristic(2), parse_charge("0")));
    std::ostringstream csv;
    write_csv(csv, d);
    CHECK(csv.str() == "\"2\",\"1,1\",q\n\"1,1\",\"1,1\",1\n");
    std::ostringstream table;
    write_table(table, d);
    CHECK(table.str() == "e=2 charge=0 n=2\n     1,1\n2    q\n1,1  1\n");
  }

  TEST_CASE("cache keys") {
    const FockContext a(Characteristic(3), parse_charge("0,1"));
    const FockContext b(Characteristic(3), parse_charge("1,0"));
    CHECK(cache_key(a, 4) == cache_key(a, 4));
    CHECK(cache_key(a, 4) != cache_key(a, 3));
    CHECK(cache_key(a, 4) != cache_key(b, 4));
    const auto key = cache_key(a, 4);
    CHECK(key.rfind("canon-", 0) == 0);
    CHECK(key.find_first_not_of("canon-0123456789abcdef") == std::string::npos);
  }

  TEST_CASE("cache round trip") {
    const auto dir = scratch_dir("cache");
    const FockContext ctx(Characteristic(3), parse_charge("0,1"));
    CHECK_FALSE(load_cached(dir, ctx, 3).has_value());
    const auto d = canonical_basis(3, ctx);
    store_cached(dir, d);
    const auto hit = load_cached(dir, ctx, 3);
    REQUIRE(hit.has_value());
    CHECK(*hit == d);
    for (std::size_t c = 0; c < d.cols().size(); ++c)
      for (std::size_t r = 0; r < d.rows().size(); ++r) CHECK(hit->entry(r, c) == d.entry(r, c));
    CHECK_FALSE(load_cached(dir, ctx, 2).has_value());
    // A corrupted file is a miss, not an error.
    std::ofstream(dir / (cache_key(ctx, 3) + ".json")) << "{ not json";
    CHECK_FALSE(load_cached(dir, ctx, 3).has_value());
    fs::remove_all(dir);
  }

  TEST_CASE("cache directory resolution") {
    CHECK(resolve_cache_dir(std::string("/x")) == fs::path("/x"));
    ::setenv("FOCKCANON_CACHE", "/from-env", 1);
    CHECK(resolve_cache_dir(std::nullopt) == fs::path("/from-env"));
    ::unsetenv("FOCKCANON_CACHE");
    CHECK_FALSE(resolve_cache_dir(std::nullopt).has_value());
  }

  TEST_CASE("atomic writes create directories and leave no temporaries") {
    const auto dir = scratch_dir("atomic");
    const auto path = dir / "a" / "b" / "out.txt";
    write_file_atomic(path, "one");
    write_file_atomic(path, "two");
    std::ifstream f(path);
    std::string s;
    f >> s;
    CHECK(s == "two");
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(path.parent_path())) files += entry.is_regular_file();
    CHECK(files == 1);
    fs::remove_all(dir);
  }
}
