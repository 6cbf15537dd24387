#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "qkz/suites.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

fs::path tmpdir() {
  fs::path d = fs::temp_directory_path() / ("qkz_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

int run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + QKZ_BINARY + std::string(" ") + args + " 2>/dev/null";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json strip_times(json r) {
  for (auto& c : r["checks"]) c.erase("time_ms");
  return r;
}

}  // namespace

TEST_CASE("unknown suite is a configuration error with no output") {
  fs::path out = tmpdir() / "unknown.json";
  fs::remove(out);
  CHECK(run("verify NOT_A_SUITE --out " + out.string()) == 2);
  CHECK_FALSE(fs::exists(out));
  qkz::SuiteConfig cfg;
  cfg.suite = "NOT_A_SUITE";
  CHECK_THROWS_AS(qkz::validate(cfg), qkz::ConfigError);
}

TEST_CASE("invalid orders are rejected before computing") {
  qkz::SuiteConfig cfg;
  cfg.suite = "BAILEY";
  cfg.points = 0;
  CHECK_THROWS_AS(qkz::validate(cfg), qkz::ConfigError);
  cfg.points = 1;
  cfg.seeds.clear();
  CHECK_THROWS_AS(qkz::validate(cfg), qkz::ConfigError);
}

TEST_CASE("report schema") {
  fs::path out = tmpdir() / "bailey.json";
  CHECK(run("verify BAILEY --seed 4 --out " + out.string()) == 0);
  json r = json::parse(slurp(out));
  for (const char* k : {"suite", "version", "config", "checks"}) CHECK(r.contains(k));
  CHECK(r["suite"] == "BAILEY");
  CHECK(r["version"] == qkz::kVersion);
  CHECK(r["config"]["seeds"] == json::array({4}));
  REQUIRE(!r["checks"].empty());
  for (const auto& c : r["checks"]) {
    for (const char* k : {"name", "status", "point", "orders", "mismatch", "time_ms"}) CHECK(c.contains(k));
    CHECK(c["status"] == "pass");
    CHECK(c["mismatch"].is_null());
  }
}

TEST_CASE("identical configs give identical reports modulo timing") {
  fs::path d = tmpdir();
  CHECK(run("verify SHUFFLE --seed 1 --seed 9 --points 2 --out " + (d / "a.json").string()) == 0);
  CHECK(run("verify SHUFFLE --seed 1 --seed 9 --points 2 --out " + (d / "b.json").string(), "QKZ_THREADS=1") ==
        0);
  json a = json::parse(slurp(d / "a.json")), b = json::parse(slurp(d / "b.json"));
  CHECK(strip_times(a) == strip_times(b));
  CHECK(a["checks"].size() == 2 * 2 * 8);
}

TEST_CASE("csv format") {
  fs::path out = tmpdir() / "r.csv";
  CHECK(run("verify PENTAGON --seed 2 --format csv --out " + out.string()) == 0);
  std::string s = slurp(out);
  CHECK(s.rfind("suite,name,status,point,orders,mismatch,time_ms\n", 0) == 0);
  CHECK(s.find(",fail,") == std::string::npos);
}

TEST_CASE("overrides reach the suite") {
  fs::path out = tmpdir() / "qkz.json";
  CHECK(run("verify QKZ_MATRIX --seed 5 --m 1 --n 0 --lmax 2 --out " + out.string()) == 0);
  json r = json::parse(slurp(out));
  REQUIRE(r["checks"].size() == 1);
  CHECK(r["checks"][0]["orders"]["lmax"] == 2);
  CHECK(r["checks"][0]["orders"]["m"] == 1);
}

TEST_CASE("dump subcommands") {
  fs::path d = tmpdir();
  CHECK(run("solve --kmax 2 --lmax 2 --seed 3 --out " + (d / "s.csv").string()) == 0);
  CHECK(run("laumon --kmax 2 --lmax 2 --seed 3 --out " + (d / "l.csv").string()) == 0);
  // the solver and the Laumon sum print the same table
  CHECK(slurp(d / "s.csv") == slurp(d / "l.csv"));
  CHECK(slurp(d / "s.csv").rfind("k,l,numerator,denominator\n0,0,1,1\n", 0) == 0);
  CHECK(run("laumon --lmax 2 --seed 3 --m 1 --n 1 --out " + (d / "t.csv").string()) == 0);
  CHECK(slurp(d / "t.csv").rfind("a,l,numerator,denominator\n", 0) == 0);

  CHECK(run("rmatrix --m 1 --n 0 --seed 2 --lambda 3/7 --out " + (d / "r.json").string()) == 0);
  json r = json::parse(slurp(d / "r.json"));
  CHECK(r["Lambda"] == "3/7");
  CHECK(r["r"].size() == 2);
  CHECK(run("rmatrix --m 2 --n 1 --seed 2 --fourd --out " + (d / "f.json").string()) == 0);
  CHECK(json::parse(slurp(d / "f.json"))["r1"].size() == 4);

  CHECK(run("jackson --m 1 --n 0 --lmax 2 --seed 2 --out " + (d / "j.json").string()) == 0);
  json j = json::parse(slurp(d / "j.json"));
  CHECK(j["components"].size() == 2);
  CHECK(j["laumon_equal"] == true);
  fs::remove_all(d);
}

TEST_CASE("report matches the golden file") {
  fs::path out = tmpdir() / "golden.json";
  CHECK(run("verify BAILEY --seed 4 --out " + out.string()) == 0);
  json r = json::parse(slurp(out));
  for (auto& c : r["checks"]) c["time_ms"] = 0;
  json golden = json::parse(slurp(fs::path(QKZ_GOLDEN_DIR) / "bailey_seed4.json"));
  CHECK(r == golden);
}

TEST_CASE("failing records serialize their mismatch") {
  std::vector<std::function<qkz::CheckRecord()>> tasks;
  for (int i = 0; i < 5; ++i)
    tasks.push_back([i] {
      qkz::CheckRecord c{"t" + std::to_string(i), i != 3, json{{"i", i}}, json::object(), std::nullopt, 0};
      if (i == 3) c.mismatch = qkz::Mismatch{json{{"k", 2}, {"l", 1}}, "1/2", "1/3"};
      return c;
    });
  auto recs = qkz::run_tasks(tasks);
  REQUIRE(recs.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(recs[i].name == "t" + std::to_string(i));
  qkz::Report r{"X", qkz::kVersion, json::object(), recs};
  CHECK_FALSE(r.all_pass());
  json j = qkz::to_json(r);
  CHECK(j["checks"][3]["status"] == "fail");
  CHECK(j["checks"][3]["mismatch"]["location"]["k"] == 2);
  CHECK(j["checks"][3]["mismatch"]["expected"] == "1/2");
  CHECK(j["checks"][3]["mismatch"]["actual"] == "1/3");
  CHECK(qkz::to_csv(r).find(",fail,") != std::string::npos);
}

TEST_CASE("worker count honours QKZ_THREADS") {
  ::setenv("QKZ_THREADS", "1", 1);
  CHECK(qkz::worker_count(100) == 1);
  ::unsetenv("QKZ_THREADS");
  CHECK(qkz::worker_count(1) == 1);
  CHECK(qkz::worker_count(100) >= 1);
  CHECK(qkz::point_seed(7, 0) == 7);
  CHECK(qkz::point_seed(7, 1) != 7);
}
