#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "boolfn/rational.hpp"
#include "cli.hpp"

using namespace boolfn;
using nlohmann::json;

namespace {
struct CliResult {
  int code;
  json out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  json parsed;
  if (!out.str().empty() && (out.str()[0] == '{' || out.str()[0] == '['))
    parsed = json::parse(out.str());
  return {code, parsed, err.str()};
}
}  // namespace

TEST_CASE("analyze reports the NAE_3 pipeline") {
  CliResult r = run({"analyze", "--tt", "n=3 tt=7e", "--with-approx"});
  CHECK(r.code == 0);
  CHECK(r.out["d"] == 2);
  CHECK(r.out["s"] == 3);
  CHECK(r.out["bs"] == 3);
  CHECK(r.out["D"] == 3);
  CHECK(r.out["deg13"] == 2);
  CHECK(r.out["symmetrization"]["poly"] == "deg=2 coeffs=0,3/2,-1/2");
  CHECK(r.out["bs_witness"]["x"] == 0);
  CHECK(r.out["bs_witness"]["blocks"] == json::array({1, 2, 4}));
  for (const auto& item : r.out["verdicts"].items()) {
    const std::string verdict_name = item.key();
    CAPTURE(verdict_name);
    CHECK(item.value().get<bool>());
  }
  // Exact rationals round-trip through the report.
  CHECK(parse_rational(r.out["ratios"]["d2_over_bs"].get<std::string>()) == Rational(4, 3));
}

TEST_CASE("threshold command emits the closed form") {
  CliResult r = run({"threshold", "--k", "1", "--c", "3/2"});
  CHECK(r.code == 0);
  CHECK(r.out["closed_form"] == "sqrt(10)-2");
  CHECK(r.out["x_star"].get<double>() == doctest::Approx(1.16227766).epsilon(1e-8));

  CliResult approx = run({"threshold", "--k", "2", "--c", "1/15", "--variant", "approximate"});
  CHECK(approx.out["closed_form"] == "sqrt(6/101)");
}

TEST_CASE("lp-uniqueness command") {
  CliResult r = run({"lp-uniqueness"});
  CHECK(r.code == 0);
  CHECK(r.out["min_c4"] == "-1/144");
  CHECK(r.out["positive_c4"] == "infeasible");
  CHECK(r.out["consistent"] == true);
  CHECK(parse_rational(r.out["min_c4"].get<std::string>()) == Rational(-1, 144));
}

TEST_CASE("sweep command finishes quickly and clean on n = 2") {
  auto start = std::chrono::steady_clock::now();
  CliResult r = run({"sweep", "-n", "2"});
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r.code == 0);
  CHECK(r.out["functions"] == 16);
  CHECK(r.out["violations"].empty());
  CHECK(elapsed < 1.0);
}

TEST_CASE("sweep over all 4-variable functions stays under a minute") {
  auto start = std::chrono::steady_clock::now();
  CliResult r = run({"sweep", "-n", "4"});
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(r.code == 0);
  CHECK(r.out["functions"] == 65536);
  CHECK(r.out["violations"].empty());
  CHECK(elapsed < 60.0);
}

TEST_CASE("BOOLFN_THREADS caps sweep parallelism") {
  setenv("BOOLFN_THREADS", "1", 1);
  CliResult capped = run({"sweep", "-n", "2"});
  unsetenv("BOOLFN_THREADS");
  CHECK(capped.out["threads"] == 1);

  CliResult explicit_threads = run({"sweep", "-n", "2", "--threads", "2"});
  CHECK(explicit_threads.out["threads"] == 2);
}

TEST_CASE("compose and reduce commands") {
  CliResult composed = run({"compose", "--outer", "n=2 tt=e", "--inner", "n=2 tt=8"});
  CHECK(composed.code == 0);
  CHECK(composed.out["n"] == 4);

  CliResult reduced = run({"reduce", "--tt", "n=2 tt=8"});
  CHECK(reduced.code == 0);
  CHECK(reduced.out["complemented"] == true);
  CHECK(reduced.out["reduced"]["tt"] == "e");  // AND_2 reduces to OR_2
  CHECK(reduced.out["s_at_zero"] == reduced.out["bs"]);
}

TEST_CASE("batch input from a file") {
  std::string path = "cli_test_tables.txt";
  {
    std::ofstream f(path);
    f << "# two tables\n";
    f << "n=2 tt=e\n";
    f << "n=3 tt=7e\n";
  }
  CliResult r = run({"analyze", "--tt-file", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  REQUIRE(r.out.is_array());
  CHECK(r.out.size() == 2);
  CHECK(r.out[1]["tt"] == "7e");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"analyze", "--tt", "n=3 tt=zz"}).code == 2);
  CHECK(run({"analyze"}).code == 2);  // no table given
  CHECK(run({"sweep", "-n", "9"}).code == 2);
  CHECK(run({"threshold", "--k", "0", "--c", "1"}).code == 2);
  CHECK(run({"approx-degree", "--tt", "n=2 tt=8", "--eps", "2/3"}).code == 2);
  CHECK(run({"nae", "-n", "10", "--c", "1/10"}).code == 2);
}

TEST_CASE("extremal-quartic and symmetrize commands") {
  CliResult quartic = run({"extremal-quartic"});
  CHECK(quartic.code == 0);
  CHECK(quartic.out["all_ok"] == true);
  CHECK(quartic.out["derivative_at_zero"] == "125/72");
  CHECK(quartic.out["binomial"] == "deg=4 coeffs=0,1,-1,7/12,-1/6 basis=binomial");

  CliResult sym = run({"symmetrize", "--tt", "n=2 tt=e"});
  CHECK(sym.code == 0);
  CHECK(sym.out["poly"] == "deg=2 coeffs=0,3/2,-1/2");
  CHECK(sym.out["values"] == json::array({"0", "1", "1"}));
}

TEST_CASE("approx-degree command routes") {
  CliResult general = run({"approx-degree", "--tt", "n=3 tt=96"});  // XOR_3
  CHECK(general.code == 0);
  CHECK(general.out["degree"] == 3);

  CliResult symmetric = run({"approx-degree", "--tt", "n=3 tt=96", "--symmetric"});
  CHECK(symmetric.out["degree"] == 3);
}
