#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tauenum/cli.hpp"

using namespace tauenum;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args,
           std::span<const ReferenceRow> table = reference_table()) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, table);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count csv") {
  auto r = run({"count", "--max-level", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "level,tau_count,spine_count,class_count\n"
        "1,1,1,1\n2,2,2,2\n3,4,4,4\n4,8,8,8\n5,16,18,19\n");

  r = run({"count", "--max-level", "1"});
  CHECK(r.out.find("\n1,1,1,1\n") != std::string::npos);

  r = run({"count", "--max-level", "10", "--threads", "3"});
  CHECK(r.out.find("\n10,641,1939,2480\n") != std::string::npos);
}

TEST_CASE("count json") {
  const auto r = run({"count", "--max-level", "5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 5);
  CHECK(doc[4]["level"] == 5);
  CHECK(doc[4]["tau_count"] == 16);
  CHECK(doc[4]["spine_count"] == 18);
  CHECK(doc[4]["class_count"] == 19);
}

TEST_CASE("output is byte-stable across thread counts") {
  const auto a = run({"count", "--max-level", "12", "--threads", "1"});
  const auto b = run({"count", "--max-level", "12", "--threads", "4"});
  const auto c = run({"count", "--max-level", "12", "--format", "json",
                      "--threads", "1"});
  const auto d = run({"count", "--max-level", "12", "--format", "json",
                      "--threads", "4"});
  CHECK(a.out == b.out);
  CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--max-level", "0"}).code == 2);
  CHECK(run({"count", "--max-level", "3", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--max-level", "22"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"tau", "info", "0,x"}).code == 2);
  CHECK(run({"tau", "info", "0,2"}).code == 2);
  CHECK(run({"tau", "validate", "a"}).code == 2);
  CHECK(run({"oracle", "--max-level", "11"}).code == 2);
  CHECK(run({"tree", "--level", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify against the embedded table") {
  const auto r = run({"verify", "--max-level", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("level 12: PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify flags a corrupted cell") {
  std::vector<ReferenceRow> table(reference_table().begin(),
                                  reference_table().end());
  table[6].spine_count += 1;  // level 7
  const auto r = run({"verify", "--max-level", "9"}, table);
  CHECK(r.code == 1);
  CHECK(r.out.find("level 6: PASS") != std::string::npos);
  CHECK(r.out.find("level 7: FAIL spine_count expected 106 got 105") !=
        std::string::npos);
  CHECK(r.out.find("first mismatch: level 7 spine_count") != std::string::npos);
}

TEST_CASE("tau subcommands") {
  auto r = run({"tau", "info", "0,1,0,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Spines=2\n") != std::string::npos);
  CHECK(r.out.find("TF=1\n") != std::string::npos);
  CHECK(r.out.find("Top=2\n") != std::string::npos);
  CHECK(r.out.find("markers=2,4\n") != std::string::npos);
  CHECK(r.out.find("marked_levels=0,1\n") != std::string::npos);

  r = run({"tau", "extend", "0,0,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "tau(4)=2 index=0 SF=1\ntau(4)=1 index=1 SF=1\n");

  r = run({"tau", "validate", "0,2"});
  CHECK(r.code == 1);
  CHECK(r.out == "INADMISSIBLE property B at n=1\n");
  r = run({"tau", "validate", "0,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "ADMISSIBLE\n");

  r = run({"tau", "grid", "0,1,0"});
  CHECK(r.code == 0);
  CHECK(r.out == "1111\n110\n10\n1\n");
}

TEST_CASE("ratios, tree and oracle commands") {
  auto r = run({"ratios", "--max-level", "6", "--from", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "Levels 5 / 4 | Levels 6 / 5\n"
        "2.375        | 2.421       \n");

  const auto path =
      (std::filesystem::temp_directory_path() / "tauenum_tree_test.dot")
          .string();
  r = run({"tree", "--level", "2", "--out", path});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const std::string doc((std::istreambuf_iterator<char>(in)), {});
  CHECK(doc.find("n2 [label") != std::string::npos);
  CHECK(doc.find("n3") == std::string::npos);
  std::filesystem::remove(path);

  r = run({"oracle", "--max-level", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\nAGREE\n") != std::string::npos);
}
