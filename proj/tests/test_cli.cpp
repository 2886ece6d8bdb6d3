#include <doctest.h>

#include <filesystem>

#include "algtype/cli.hpp"
#include "golden_cases.hpp"

using algtype::cli::run;
using algtype::testing::read_file;

namespace {

// Paths in the cases are relative to the golden directory.
struct InGoldenDir {
  InGoldenDir() : saved(std::filesystem::current_path()) { std::filesystem::current_path(ALGTYPE_GOLDEN_DIR); }
  ~InGoldenDir() { std::filesystem::current_path(saved); }
  std::filesystem::path saved;
};

}  // namespace

TEST_CASE("golden cases") {
  InGoldenDir here;
  const auto cases = algtype::testing::read_golden_cases("cases.txt");
  REQUIRE(cases.size() >= 20);
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto first = run(c.args);
    const auto second = run(c.args);
    CHECK(first.exit_code == c.exit_code);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == read_file("expected/" + c.name + ".out"));
  }
}

TEST_CASE("every subcommand has a golden case") {
  const auto cases = algtype::testing::read_golden_cases(std::string(ALGTYPE_GOLDEN_DIR) + "/cases.txt");
  for (const std::string sub : {"equiv", "recover", "rank", "support", "clone", "homs", "probe-free", "eval"}) {
    CAPTURE(sub);
    bool found = false;
    for (const auto& c : cases) found = found || (!c.args.empty() && c.args[0] == sub && c.exit_code == 0);
    CHECK(found);
  }
}

TEST_CASE("documented payloads") {
  InGoldenDir here;
  CHECK(run({"equiv", "fgc.sig", "pqr.sig"}).out == "{\"equivalent\":true}\n");
  CHECK(run({"support", "xor.json", "--op", "f"}).out == "{\"minimal_support\":[0,1],\"essential_rank\":2}\n");
  const auto rec = run({"recover", "fgc.sig", "--depth", "2"});
  CHECK(rec.exit_code == 0);
  CHECK(rec.out.rfind("{\"arities\":[0,1,2],", 0) == 0);
  CHECK(run({"rank", "f2.sig"}).out == "{\"rank\":\"countably_infinite\"}\n");
  CHECK(run({}).exit_code == 2);
}

TEST_CASE("errors name the offending field") {
  InGoldenDir here;
  const auto bad = run({"homs", "bad_table.json", "xor.json"});
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("tables.f") != std::string::npos);
  const auto cap = run({"recover", "t3.sig"});
  CHECK(cap.exit_code == 3);
  CHECK(cap.out.find("\"required\":314436") != std::string::npos);
}
