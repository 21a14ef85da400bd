#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tfbn/cli.hpp"

using namespace tfbn;

namespace {

struct Result {
  int code;
  std::string out, err;
};

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

Result run(const std::string& line) {
  std::ostringstream out, err;
  const int code = cli::run(words(line), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path golden_dir() { return std::filesystem::path(TFBN_SOURCE_DIR) / "tests" / "golden"; }

std::vector<std::pair<std::string, std::string>> golden_cases() {
  std::ifstream in(golden_dir() / "cases.txt");
  std::vector<std::pair<std::string, std::string>> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(' '));
      s.erase(s.find_last_not_of(' ') + 1);
      return s;
    };
    out.emplace_back(trim(line.substr(0, bar)), trim(line.substr(bar + 1)));
  }
  return out;
}

}  // namespace

TEST_CASE("golden files") {
  const auto cases = golden_cases();
  REQUIRE(cases.size() >= 8);
  for (const auto& [file, args] : cases) {
    CAPTURE(file);
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == slurp(golden_dir() / file));
  }
}

TEST_CASE("the installed binary produces the same bytes") {
  const auto path = std::filesystem::temp_directory_path() / "tfbn_cli_subprocess.json";
  const std::string cmd = std::string(TFBN_CLI) + " bn --surface quadric --e 2,1 --N 4 --check --format json > " +
                          path.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(path) == slurp(golden_dir() / "bn_quadric_check.json"));
  std::filesystem::remove(path);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const char* line : {"tf --surface quadric --c1 -1,2 --c2 3 --window -3..1 --format json",
                           "bn --surface p2 --e 5 --N 14 --check --format json",
                           "chi --surface product:g=2 --rank 3 --c1 1,4 --c2 2 --format json",
                           "cohom --surface product:g=2 --D 1,2 --format json",
                           "tf --surface ruled:g=1,e=-1,assert-no-negative-curves --c1 0,1 --c2 2 --window -3..0 --format json"}) {
    CAPTURE(line);
    const auto r = run(line);
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
    // integers, strings and booleans only
    std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& v) {
      CHECK_FALSE(v.is_number_float());
      CHECK_FALSE(v.is_null());
      if (v.is_structured())
        for (const auto& x : v) walk(x);
    };
    walk(j);
  }
  const auto survey = run("survey bn --surface quadric --e 2,3 --N 1..12");
  REQUIRE(survey.code == 0);
  std::istringstream lines(survey.out);
  int n = 0;
  for (std::string l; std::getline(lines, l); ++n) CHECK(nlohmann::json::parse(l).dump() == l);
  CHECK(n == 12);
}

TEST_CASE("acceptance-style CLI examples") {
  auto j = nlohmann::json::parse(run("tf --surface p2 --c1 0 --c2 2 --window -4..-1 --format json").out);
  CHECK(j["prioritary_exists"] == true);
  CHECK(j["nonprioritary_count"] == 19);
  j = nlohmann::json::parse(run("bn --surface p2 --e 2 --N 4 --format json").out);
  REQUIRE(j["components"].size() == 1);
  CHECK(j["components"][0]["codim"] == 2);
  j = nlohmann::json::parse(run("tf --surface quadric --c1 0,0 --c2 -1 --format json").out);
  CHECK(j["prioritary_exists"] == false);
  CHECK(j["window_default"] == true);
  CHECK(j["prioritary_failure"].get<std::string>().find("2r*c2") != std::string::npos);
  const auto survey = run("survey bn --surface p2 --e 4 --N 1..15 --format json");
  std::istringstream lines(survey.out);
  int n = 0;
  for (std::string l; std::getline(lines, l);) {
    const auto r = nlohmann::json::parse(l);
    ++n;
    const bool prior = !r["components"].empty() && r["components"].back()["kind"] == "prioritary";
    CHECK(prior == (r["N"].get<int>() >= 12));
    if (r["N"] == 12) CHECK(r["components"].back()["codim"] == 4);
  }
  CHECK(n == 15);
}

TEST_CASE("exit codes") {
  CHECK(run("bn --surface p2 --e 2 --N 7").code == 2);
  CHECK(run("bn --surface p2 --e 2 --N 7").err.find("NOutOfRange") != std::string::npos);
  CHECK(run("bn --surface product:g=1 --e 1,1 --N 1").code == 2);
  CHECK(run("bn --surface quadric --e -1,2 --N 1").code == 2);
  CHECK(run("tf --surface cubic --c1 0 --c2 1").code == 2);
  CHECK(run("tf --surface p2 --c1 0,1 --c2 1").code == 2);
  CHECK(run("tf --surface p2 --c1 zero --c2 1").code == 2);
  CHECK(run("tf --surface p2 --c1 0").code == 2);
  CHECK(run("tf --surface p2 --c1 0 --c2 1 --bogus").code == 2);
  CHECK(run("tf --surface p2 --c1 0 --c2 1 --format xml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("cohom --surface ruled:g=1,e=0,assert-no-negative-curves --D 1,1").code == 2);
  CHECK(run("chi --surface p2 --rank 2 --c1 9999999999 --c2 0").code == 3);
  CHECK(run("tf --surface p2 --c1 0 --c2 4611686018427387904").code == 3);
  CHECK(run("--help").code == 0);
  CHECK_FALSE(run("tf --help").out.empty());
  CHECK(cli::exit_code_for(ErrorKind::Overflow) == 3);
  CHECK(cli::exit_code_for(ErrorKind::AdmissibilityViolation) == 4);
  CHECK(cli::exit_code_for(ErrorKind::SamplingFailure) == 4);
  CHECK(cli::exit_code_for(ErrorKind::NOutOfRange) == 2);
  CHECK(cli::exit_code_for(ErrorKind::InvalidInput) == 2);
}

TEST_CASE("survey ranges") {
  const auto empty = run("survey bn --surface p2 --e 4 --N 5..4");
  CHECK(empty.code == 0);
  CHECK(empty.out.empty());
  const auto bad = run("survey bn --surface p2 --e 4 --N 13..16");
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  const auto one = run("survey tf --surface quadric --c1 1,1 --c2 0..5 --window -3..3");
  const auto four = run("survey tf --surface quadric --c1 1,1 --c2 0..5 --window -3..3 --jobs 4");
  CHECK(one.out == four.out);
  const auto csv = run("survey bn --surface p2 --e 4 --N 10..12 --format csv");
  CHECK(csv.out.rfind("N,kind,", 0) == 0);
  CHECK(csv.out.find("N,kind", 1) == std::string::npos);
  const auto defaulted = run("survey tf --surface p2 --c1 0 --c2 0..1");
  CHECK(defaulted.err.find("warning") != std::string::npos);
  CHECK(run("survey tf --surface p2 --c1 0 --c2 0..1 --check").code == 0);
  CHECK(run("survey bn --surface p2 --e 4 --N 1..15 --check").code == 0);
}

TEST_CASE("default window warning") {
  const auto r = run("tf --surface p2 --c1 0 --c2 1 --format json");
  CHECK(r.err.find("warning") != std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["window"] == nlohmann::json::parse("[[-9,9]]"));
  CHECK(run("tf --surface p2 --c1 0 --c2 1 --window -9..9 --format json").err.empty());
}

TEST_CASE("config files and --out") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto cfg = dir / "tfbn_test.ini";
  {
    std::ofstream f(cfg);
    f << "# defaults\n[tf]\nsurface = quadric\nc1 = \"1,1\"\nc2 = 3 ; overridden below\nwindow = -3..3\nformat = json\ncheck = true\n";
  }
  const auto viaconfig = run("tf --config " + cfg.string() + " --c2 0");
  const auto direct = run("tf --surface quadric --c1 1,1 --c2 0 --window -3..3 --format json --check");
  CHECK(viaconfig.code == 0);
  CHECK(viaconfig.out == direct.out);
  CHECK(nlohmann::json::parse(viaconfig.out)["consistent"] == true);
  CHECK(run("tf --config " + (dir / "missing.ini").string()).code == 2);

  const auto out = dir / "tfbn_test_out.json";
  const auto r = run("cohom --surface quadric --D -2,3 --format json --out " + out.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out) == slurp(golden_dir() / "cohom_quadric.json"));
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}

TEST_CASE("config parser") {
  const auto kv = cli::parse_config("a = 1\n\n# c\n[x]\nb='2,3' # trailing\n--c=4\n");
  CHECK(kv == std::vector<std::pair<std::string, std::string>>{{"a", "1"}, {"b", "2,3"}, {"c", "4"}});
  CHECK_THROWS_AS(cli::parse_config("novalue\n"), Error);
}

TEST_CASE("class, range and window parsing") {
  CHECK(cli::parse_class("-1,2", 2, "x") == DivisorClass{-1, 2});
  CHECK_THROWS_AS(cli::parse_class("1", 2, "x"), Error);
  CHECK_THROWS_AS(cli::parse_class("1,", 2, "x"), Error);
  CHECK(cli::parse_range("-4..-1", "x") == std::pair<std::int64_t, std::int64_t>{-4, -1});
  CHECK(cli::parse_range("7", "x") == std::pair<std::int64_t, std::int64_t>{7, 7});
  CHECK_THROWS_AS(cli::parse_range("1...3", "x"), Error);
  CHECK(cli::parse_window("-2..2", 2).ranges.size() == 2);
  const auto w = cli::parse_window("-2..2,0..1", 2);
  CHECK(w.ranges[1] == std::pair<std::int64_t, std::int64_t>{0, 1});
  CHECK_THROWS_AS(cli::parse_window("-2..2,0..1", 1), Error);
  CHECK(cli::default_window(2, -3).ranges[0] == std::pair<std::int64_t, std::int64_t>{-11, 11});
}

TEST_CASE("table and csv renderings") {
  CHECK(run("bn --surface quadric --e 2,1 --N 4").out.find("prioritary") != std::string::npos);
  CHECK(run("verify --surface p2 --e 2 --N 4").out.find("20/20") != std::string::npos);
  CHECK(run("verify --surface quadric --cross-ruling --c1 0,0 --c2 0 --window -3..3").code == 0);
  CHECK(run("verify --surface p2 --cross-ruling --c1 0 --c2 0").code == 2);
  CHECK(run("chi --surface p2 --c1 1 --format csv").out == "rank,c1,c2,chi,chi_self_pair\n1,\"1\",0,3,1\n");
  CHECK(run("tf --surface p2 --c1 0 --c2 2 --window -4..-1 --format csv").out.find("2,prioritary,,,,4,0,true,0") !=
        std::string::npos);
}
