#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "betacert/errors.hpp"
#include "betacert/realnum.hpp"
#include "cli.hpp"

using namespace betacert;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("precision resolution") {
  CHECK(cli::resolve_precision(std::nullopt, nullptr) == 256);
  CHECK(cli::resolve_precision(std::nullopt, "512") == 512);
  CHECK(cli::resolve_precision(128, "512") == 128);
  CHECK_THROWS_AS(cli::resolve_precision(32, nullptr), DomainError);
  CHECK_THROWS_AS(cli::resolve_precision(std::nullopt, "12x"), MalformedInput);
}

TEST_CASE("point parsing") {
  const Enclosure q = Enclosure::parse("1.5");
  CHECK(cli::parse_point("iq", q).contains(2));
  CHECK(cli::parse_point("1/3", q).overlaps(Enclosure::rational(1, 3)));
  CHECK(cli::parse_point("pi:(10)^inf", q).overlaps(q / (q * q - 1)));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"certify", "--m", "0"}).code == cli::kUsage);
  CHECK(run({"certify"}).code == cli::kUsage);
  CHECK(run({"certify", "--k", "10", "--q", "1.99", "--interval"}).code == cli::kUsage);
  CHECK(run({"tables", "--precision", "32"}).code == cli::kUsage);
  CHECK(run({"tables", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"thickness"}).code == cli::kUsage);
  CHECK(run({"count", "--q", "1.5"}).code == cli::kUsage);
  CHECK(run({"count", "--q", "1.5", "--x", "7"}).code == cli::kUsage);
  CHECK(run({"witness", "--k", "8"}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
}

TEST_CASE("precision errors exit with 3") {
  const Run r = run({"tables", "--precision", "64"});
  CHECK(r.code == cli::kPrecision);
  CHECK(r.err.find("precision") != std::string::npos);
}

TEST_CASE("tables report") {
  const Run r = run({"tables", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["total_rows"] == 10);
  CHECK(r.code == (j["matched_rows"] == 10 ? cli::kOk : cli::kUncertified));
  const std::string prefix = "unit_cli_tables";
  CHECK(run({"tables", "--format", "csv", "--out", prefix}).code == r.code);
  for (const char* part : {"_table1.csv", "_table2.csv"}) {
    std::ifstream f(prefix + part);
    std::string header;
    CHECK(std::getline(f, header));
    CHECK(header.find("radius_lo") != std::string::npos);
    std::remove((prefix + part).c_str());
  }
}

TEST_CASE("certify emits a JSON certificate") {
  const Run r = run({"certify", "--m", "1", "--k", "31", "--interval"});
  CHECK(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["claim"] == "theorem-A");
  CHECK(j["certified"] == true);
  CHECK(j["checks"].size() > 10);
  CHECK(!r.err.empty());  // summary
  const Run b = run({"certify", "--m", "1", "--k", "9", "--q", "qk:9+1e-8", "--no-count", "--format", "text"});
  CHECK(b.code == cli::kOk);
  CHECK(b.out.find("theorem-B") != std::string::npos);
}

TEST_CASE("certificate JSON is deterministic apart from the timing field") {
  auto strip = [](std::string s) {
    auto j = nlohmann::ordered_json::parse(s);
    j.erase("wall_time_ms");
    return j.dump();
  };
  const Run a = run({"certify", "--m", "2", "--k", "32", "--interval"});
  const Run b = run({"certify", "--m", "2", "--k", "32", "--interval"});
  CHECK(strip(a.out) == strip(b.out));
}

TEST_CASE("data commands") {
  const Run t = run({"thickness", "--k", "10", "--depth", "24"});
  CHECK(t.code == cli::kOk);
  CHECK(t.out.find("certified") != std::string::npos);
  const Run g = run({"gaps", "--s", "4", "--q", "1.95", "--depth", "4"});
  CHECK(g.code == cli::kOk);
  CHECK(g.out.rfind("index,delta_length,", 0) == 0);
  const Run c = run({"count", "--q", "golden", "--x", "1", "--depth", "30"});
  CHECK(c.code == cli::kOk);
  CHECK(c.out.rfind("depth,certified_min,possible_max", 0) == 0);
  const Run w = run({"witness", "--k", "9", "--format", "json"});
  CHECK(w.code == cli::kOk);
  CHECK(nlohmann::json::parse(w.out)["certified"] == true);
}
