#include "doctest.h"

#include "cli/commands.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace weylarr;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "weylarr");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count rows") {
  Outcome r = invoke({"count", "--faces", "-n", "7", "--method", "all", "--format", "json"});
  REQUIRE(r.status == cli::kExitOk);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["agree"] == true);
  for (const auto& row : doc["rows"])
    CHECK(row["values"] == nlohmann::json({"1", "35", "259", "833", "1408", "1312", "640", "128"}));
  CHECK(doc["skipped"].size() == 1);

  r = invoke({"count", "--flats", "-n", "8", "--method", "all", "--format", "json"});
  REQUIRE(r.status == cli::kExitOk);
  doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 4);
  for (const auto& row : doc["rows"])
    CHECK(row["values"] == nlohmann::json({"1", "30", "151", "352", "471", "380", "175", "36", "1"}));

  r = invoke({"count", "--faces", "-n", "0"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out.find("[1]") != std::string::npos);

  r = invoke({"count", "--faces", "-n", "4", "-k", "2", "--method", "oracle", "--format", "csv"});
  CHECK(r.status == cli::kExitOk);
  CHECK(r.out == "kind,n,k,value,method,provenance\nfaces,4,2,41,oracle,oracle\n");
}

TEST_CASE("count usage errors") {
  CHECK(invoke({"count", "--faces", "-n", "-1"}).status == cli::kExitUsage);
  CHECK(invoke({"count", "--faces", "-n", "3", "-k", "4"}).status == cli::kExitUsage);
  CHECK(invoke({"count", "-n", "3"}).status == cli::kExitUsage);
  CHECK(invoke({"count", "--faces", "--flats", "-n", "3"}).status == cli::kExitUsage);
  CHECK(invoke({"count", "--faces", "-n", "3", "--method", "bogus"}).status == cli::kExitUsage);
  const Outcome refused = invoke({"count", "--faces", "-n", "5", "--method", "oracle"});
  CHECK(refused.status == cli::kExitUsage);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("3^15 * 2^4") != std::string::npos);
  CHECK(invoke({"count", "--faces", "-n", "5", "--method", "oracle", "--oracle-cap-cells", "3"}).status ==
        cli::kExitUsage);
  CHECK(invoke({"nonsense"}).status == cli::kExitUsage);
  CHECK(invoke({"--help"}).status == cli::kExitOk);
}

TEST_CASE("enumerate records") {
  Outcome r = invoke({"enumerate", "chambers", "-n", "2"});
  REQUIRE(r.status == cli::kExitOk);
  const std::vector<std::string> chambers = lines(r.out);
  REQUIRE(chambers.size() == 4);
  std::vector<std::string> labels;
  for (const std::string& line : chambers) {
    const nlohmann::json rec = nlohmann::json::parse(line);
    labels.push_back(rec["label"]);
    CHECK(rec["rays"].size() == 2);
    CHECK(rec["tableau"].size() == 2);
  }
  CHECK(labels == std::vector<std::string>{"--", "-+", "+-", "++"});

  r = invoke({"enumerate", "flats", "-n", "2", "-k", "1"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(lines(r.out).size() == 3);
  for (const std::string& line : lines(r.out)) CHECK(nlohmann::json::parse(line)["generators"].size() == 1);

  r = invoke({"enumerate", "faces", "-n", "3", "-k", "0"});
  CHECK(lines(r.out) == std::vector<std::string>{R"({"chain":[],"k":0,"n":3,"rays":[]})"});

  r = invoke({"enumerate", "faces", "-n", "4"});
  CHECK(lines(r.out).size() == 1 + 14 + 41 + 44 + 16);

  r = invoke({"enumerate", "faces", "-n", "12", "--max-records", "100"});
  CHECK(r.status == cli::kExitUsage);
  CHECK(r.out.empty());
  CHECK(r.err.find("refused") != std::string::npos);
}

TEST_CASE("graph export") {
  Outcome r = invoke({"graph", "-n", "2"});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out ==
        "graph chambers_gl2 {\n  \"--\";\n  \"-+\";\n  \"+-\";\n  \"++\";\n  \"--\" -- \"+-\";\n"
        "  \"-+\" -- \"+-\";\n  \"-+\" -- \"++\";\n}\n");
  r = invoke({"graph", "-n", "1"});
  CHECK(r.out.find("\"-\" -- \"+\"") != std::string::npos);
  CHECK(invoke({"graph", "-n", "13"}).status == cli::kExitUsage);
  CHECK(invoke({"graph", "-n", "2", "--out", "/nonexistent-dir/g.dot"}).status == cli::kExitIo);
  CHECK(invoke({"graph", "-n", "5"}).out == invoke({"graph", "-n", "5", "--threads", "3"}).out);
}

TEST_CASE("output file") {
  const std::string path = "weylarr_cli_test_output.csv";
  Outcome r = invoke({"count", "--flats", "-n", "3", "--format", "csv", "--out", path});
  REQUIRE(r.status == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("flats,3,2,6,recurrence,recurrence") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("verify oracle at n = 3") {
  const Outcome r = invoke({"verify", "--oracle", "-n", "3", "--errata", WEYLARR_ERRATA_PATH});
  REQUIRE(r.status == cli::kExitOk);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"] == "pass");
  CHECK(doc["checks"][0]["name"] == "oracle-cells");
  CHECK(doc["checks"][0]["detail"][0]["oracle"] == nlohmann::json({"1", "9", "16", "8"}));
}

TEST_CASE("verify reports the gl_1 row as printed") {
  const Outcome r = invoke({"verify", "--oracle", "-n", "1", "--errata", WEYLARR_ERRATA_PATH});
  const nlohmann::json row = nlohmann::json::parse(r.out)["checks"][0]["detail"][0];
  CHECK(row["oracle"] == nlohmann::json({"1", "2"}));
  CHECK(row["printed"] == nlohmann::json({"1", "1"}));
  CHECK(row["errata"] == nlohmann::json({"g-table-1-1"}));
}

TEST_CASE("verify non-simply-laced") {
  const Outcome r = invoke({"verify", "--non-simply-laced", "--errata", WEYLARR_ERRATA_PATH});
  REQUIRE(r.status == cli::kExitOk);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["checks"][0]["detail"]["certificates"].size() == 6);
  for (const auto& c : doc["checks"][0]["detail"]["certificates"]) CHECK(c["proportional"] == true);
  CHECK(doc["checks"][1]["detail"][0]["faces"] == nlohmann::json({1, 2, 1}));
  CHECK(doc["checks"][1]["detail"][1]["faces"] == nlohmann::json({1, 2, 1}));
}

TEST_CASE("verify default run flags the two table misprints") {
  const Outcome r = invoke({"verify", "--errata", WEYLARR_ERRATA_PATH});
  REQUIRE(r.status == cli::kExitOk);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["result"] == "pass");
  int table_flags = 0;
  for (const auto& f : doc["known_typo_flags"])
    if (f["table"] == "g-table") table_flags += static_cast<int>(f["cells"].size());
  CHECK(table_flags == 2);
  for (const auto& c : doc["checks"]) CHECK(c["status"] != "fail");
  CHECK(r.out == invoke({"verify", "--errata", WEYLARR_ERRATA_PATH, "--threads", "2"}).out);
}

TEST_CASE("verify with a stripped errata file fails") {
  const std::string path = "weylarr_cli_test_errata.json";
  {
    std::ofstream out(path);
    out << R"({"version": 1, "entries": []})";
  }
  const Outcome r = invoke({"verify", "--errata", path, "--format", "text"});
  CHECK(r.status == cli::kExitDisagreement);
  CHECK(r.out.find("FAIL g-table") != std::string::npos);
  CHECK(r.out.find("result: fail") != std::string::npos);
  std::remove(path.c_str());
  CHECK(invoke({"verify", "--errata", "/nonexistent/errata.json"}).status == cli::kExitIo);
}
