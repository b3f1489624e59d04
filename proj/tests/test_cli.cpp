#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fockcanon/cli.hpp"
#include "fockcanon/io.hpp"
#include "json.hpp"

using namespace fockcanon;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("canon json") {
    const auto r = invoke({"canon", "--e", "2", "--charge", "0", "--n", "2", "--format", "json"});
    REQUIRE(r.code == cli::kOk);
    const auto d = matrix_from_json(r.out);
    CHECK(d.entry(parse_multipartition("1,1"), parse_multipartition("1,1")) == LaurentPoly(1));
    CHECK(d.entry(parse_multipartition("2"), parse_multipartition("1,1")) == LaurentPoly::q_power(1));
  }

  TEST_CASE("kleshchev, defect, mullineux") {
    CHECK(invoke({"kleshchev", "--e", "2", "--charge", "0", "--n", "3"}).out == "2,1\n1,1,1\n");
    CHECK(invoke({"kleshchev", "--e", "2", "--charge", "0", "--n", "3", "--format", "json"}).out ==
          "[\n  \"2,1\",\n  \"1,1,1\"\n]\n");
    CHECK(invoke({"defect", "--e", "2", "--charge", "0", "--la", "2"}).out == "1\n");
    CHECK(invoke({"mullineux", "--e", "3", "--charge", "0", "--mu", "1,1"}).out == "2\n");
    const auto j = nlohmann::json::parse(
        invoke({"mullineux", "--e", "3", "--charge", "0", "--mu", "1,1", "--format", "json"}).out);
    CHECK(j["path"] == nlohmann::json::array({0, 2}));
  }

  TEST_CASE("blocks and dims") {
    const auto b = invoke({"blocks", "--e", "3", "--charge", "0", "--n", "3"});
    CHECK(b.code == cli::kOk);
    CHECK(b.out.find("defect 1") != std::string::npos);
    const auto d = invoke({"dims", "--e", "2", "--charge", "0", "--n", "3"});
    CHECK(d.out == "2,1  2\n1,1,1  1\n");
  }

  TEST_CASE("argument errors exit 2") {
    CHECK(invoke({}).code == cli::kUsage);
    CHECK(invoke({"canon", "--e", "1", "--charge", "0", "--n", "2"}).code == cli::kUsage);
    CHECK(invoke({"canon", "--e", "x", "--charge", "0", "--n", "2"}).code == cli::kUsage);
    CHECK(invoke({"canon", "--e", "2", "--charge", "0"}).code == cli::kUsage);
    CHECK(invoke({"canon", "--e", "2", "--charge", "0", "--n", "-1"}).code == cli::kUsage);
    CHECK(invoke({"canon", "--e", "2", "--charge", "0", "--n", "2", "--format", "xml"}).code == cli::kUsage);
    CHECK(invoke({"mullineux", "--e", "2", "--charge", "0", "--mu", "2"}).code == cli::kUsage);
    CHECK(invoke({"defect", "--e", "2", "--charge", "0,1", "--la", "2"}).code == cli::kUsage);
    CHECK(invoke({"frobnicate"}).code == cli::kUsage);
    CHECK(invoke({"--help"}).code == cli::kOk);
  }

  TEST_CASE("verify exit status") {
    const auto r = invoke({"verify", "--e", "3", "--charge", "0,1", "--n", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }

  TEST_CASE("out and cache") {
    const auto dir = fs::temp_directory_path() / "fockcanon-cli-test";
    fs::remove_all(dir);
    const std::vector<std::string> base = {"canon", "--e", "3", "--charge", "0,1", "--n", "3", "--format", "json"};
    auto with = [&](std::vector<std::string> extra) {
      auto args = base;
      args.insert(args.end(), extra.begin(), extra.end());
      return args;
    };
    REQUIRE(invoke(with({"--out", (dir / "x" / "a.json").string()})).code == cli::kOk);
    REQUIRE(invoke(with({"--out", (dir / "x" / "b.json").string(), "--cache-dir", (dir / "cache").string()})).code ==
            cli::kOk);
    const FockContext ctx(Characteristic(3), parse_charge("0,1"));
    CHECK(fs::exists(dir / "cache" / (cache_key(ctx, 3) + ".json")));
    // Served from the cache the second time.
    REQUIRE(invoke(with({"--out", (dir / "x" / "c.json").string(), "--cache-dir", (dir / "cache").string()})).code ==
            cli::kOk);
    CHECK(slurp(dir / "x" / "a.json") == slurp(dir / "x" / "b.json"));
    CHECK(slurp(dir / "x" / "a.json") == slurp(dir / "x" / "c.json"));
    CHECK(invoke(base).out == slurp(dir / "x" / "a.json"));
    fs::remove_all(dir);
  }
}
