#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tropid/cli.hpp"
#include "tropid/decide.hpp"

using namespace tropid;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  fs::path scratch_dir() {
    static fs::path dir = [] {
      auto d = fs::temp_directory_path() / ("tropid-cli-test-" + std::to_string(::getpid()));
      fs::remove_all(d);
      fs::create_directories(d);
      ::setenv("TROPID_CACHE_DIR", (d / "cache").c_str(), 1);
      return d;
    }();
    return dir;
  }

  Outcome run(std::vector<std::string> const& args) {
    scratch_dir();
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  int run_binary(std::string const& args) {
    scratch_dir();
    std::string cmd    = std::string("\"") + TROPID_BINARY + "\" " + args + " >/dev/null 2>&1";
    int         status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

}  // namespace

TEST_CASE("exit codes of run") {
  auto holds = run({"check", "--monoid", "bicyclic", "--identity", "xyyxxyxyyx == xyyxyxxyyx"});
  CHECK(holds.code == 0);
  auto fails = run({"check", "--identity", "xy == yx"});
  CHECK(fails.code == 0);
  CHECK(fails.out.find("fails") != std::string::npos);

  auto parse = run({"check", "--identity", "xy = yx"});
  CHECK(parse.code == 1);
  CHECK(parse.err.find("position 3") != std::string::npos);
  CHECK(run({"check", "--identity", "x1y == yx"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"check"}).code == 1);
  CHECK(run({"check", "--monoid", "free", "--identity", "x == x"}).code == 1);
  CHECK(run({"eval", "--word", "xy", "--assign", "x=A"}).code == 1);
  CHECK(run({"conditions", "--tag", "iv"}).code == 1);

  auto refused = run({"replay", "--n", "40"});
  CHECK(refused.code == 2);
  CHECK(refused.err.rfind("refused:", 0) == 0);
  auto long_word = run({"partners", "--word", "xyxyxyxyxyxyxy"});
  CHECK(long_word.code == 2);
  CHECK(long_word.err.rfind("refused:", 0) == 0);

  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("verify-paper") != std::string::npos);
}

TEST_CASE("exit codes of the installed binary") {
  CHECK(run_binary("check --identity 'xy == yx'") == 0);
  CHECK(run_binary("check --identity 'xy = yx'") == 1);
  CHECK(run_binary("replay --n 40") == 2);
  CHECK(run_binary("--help") == 0);
  CHECK(run_binary("") == 1);
}

TEST_CASE("JSON output follows the documented shapes") {
  auto check = run({"--json", "check", "--monoid", "u2t", "--identity", "xy == yx"});
  REQUIRE(check.code == 0);
  auto v = json::parse(check.out);
  CHECK(decide::valid_verdict_json(v));
  CHECK(v["status"] == "fails");
  auto verdict = decide::verdict_from_json(v);
  REQUIRE(verdict.witness);
  CHECK(decide::witness_separates(words::parse_identity("xy == yx"), *verdict.witness));

  auto partners = json::parse(run({"--json", "partners", "--word", "xyyxxyxyyx"}).out);
  CHECK(partners["partners"] == json{"xyyxxyxyyx", "xyyxyxxyyx"});
  CHECK(partners["isoterm"] == false);

  auto adjan = json::parse(run({"--json", "adjan", "--n", "3", "--check", "bicyclic"}).out);
  CHECK(decide::valid_verdict_json(adjan["verdict"]));
  CHECK(adjan["verdict"]["status"] == "holds");

  auto ev = json::parse(run({"--json", "eval", "--word", "xy", "--assign", "x=[0,1;-inf,2]", "--assign",
                             "y=[1,-inf;-inf,0]"})
                            .out);
  CHECK(ev["monoid"] == "matrix");
  CHECK(ev["value"] == "[1,1;-inf,2]");

  auto embed = json::parse(run({"--json", "embed", "--bound", "4"}).out);
  CHECK(embed["passed"] == true);
  CHECK(embed["distinct"] == 25);
  CHECK_FALSE(embed.contains("runtime_s"));
  auto timed = json::parse(run({"--json", "--timings", "embed", "--bound", "4"}).out);
  CHECK(timed.contains("runtime_s"));
}

TEST_CASE("output is byte-identical across runs and cache states") {
  std::vector<std::vector<std::string>> commands{
      {"--json", "check", "--identity", "xyzyxxyxyzyx == xyzyxyxxyzyx"},
      {"--json", "check", "--monoid", "u2t", "--identity", "ABAAB == ABBAB"},
      {"--json", "partners", "--word", "xyxyyx"},
      {"--json", "conditions", "--tag", "i"},
      {"check", "--identity", "xy == yx"},
  };
  for (auto const& c : commands) {
    auto fresh = c;
    fresh.insert(fresh.begin(), "--no-cache");
    auto a = run(fresh);
    auto b = run(fresh);
    auto miss = run(c);
    auto hit  = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(miss.out == a.out);
    CHECK(hit.out == a.out);
  }
}

TEST_CASE("the cache stores results under stable keys") {
  auto dir = scratch_dir() / "unit-cache";
  fs::remove_all(dir);
  json args{{"word", "xy"}, {"seed", 1}};
  {
    cli::Cache cache(dir);
    CHECK_FALSE(cache.lookup("partners", args));
    cache.store("partners", args, json{{"answer", 42}});
    REQUIRE(cache.lookup("partners", args));
  }
  {
    std::ofstream junk(dir / "records.jsonl", std::ios::app);
    junk << "{not json\n";
  }
  cli::Cache reopened(dir);
  auto       hit = reopened.lookup("partners", args);
  REQUIRE(hit);
  CHECK((*hit)["answer"] == 42);
  CHECK_FALSE(reopened.lookup("check", args));
  CHECK(cli::Cache::key("partners", args) == cli::Cache::key("partners", json::parse(args.dump())));
  CHECK(cli::Cache::key("partners", args) != cli::Cache::key("check", args));
  CHECK(cli::Cache::key("partners", args).size() == 64);

  std::ifstream in(dir / "records.jsonl");
  std::string   first;
  std::getline(in, first);
  auto record = json::parse(first);
  for (auto const* field : {"op", "key", "args", "result", "timestamp"}) {
    CHECK(record.contains(field));
  }
}

TEST_CASE("human tables") {
  auto out = run({"check", "--identity", "xyyxxyxyyx == xyyxyxxyyx"}).out;
  CHECK(out.find("status") != std::string::npos);
  CHECK(out.find("holds") != std::string::npos);
  CHECK(out.find('{') == std::string::npos);
}

TEST_CASE("manifest verification") {
  auto manifest = cli::load_manifest(cli::default_manifest_path());
  REQUIRE(manifest["claims"].size() == 22);

  json custom{{"claims",
               json::array({
                   {{"id", "holds"},
                    {"description", "Adjan"},
                    {"args", {"check", "--identity", "xyyxxyxyyx == xyyxyxxyyx"}},
                    {"expect", {{"/status", "holds"}}}},
                   {{"id", "wrong"},
                    {"description", "deliberately wrong expectation"},
                    {"args", {"check", "--identity", "xy == yx"}},
                    {"expect", {{"/status", "holds"}}}},
                   {{"id", "capped"},
                    {"description", "over the replay cap"},
                    {"args", {"replay", "--n", "40"}},
                    {"expect", {{"/passed", true}}}},
               })}};
  auto report = cli::verify_manifest(custom, false, {}, false);
  REQUIRE(report["claims"].size() == 3);
  CHECK(report["claims"][0]["status"] == "reproduced");
  CHECK(report["claims"][1]["status"] == "failed");
  CHECK(report["claims"][1].contains("mismatches"));
  CHECK(report["claims"][2]["status"] == "skipped(bound)");
  CHECK(report["summary"]["total"] == 3);

  auto full = cli::verify_manifest(manifest, true, {}, false);
  std::set<std::string> ids;
  for (auto const& c : full["claims"]) {
    CAPTURE(c.dump());
    CHECK(c["status"] == "reproduced");
    ids.insert(c["id"].get<std::string>());
  }
  CHECK(ids.size() == 22);
  CHECK(full["summary"]["reproduced"] == 22);
}
