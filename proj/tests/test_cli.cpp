#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "unc/cli.hpp"
#include "unc/quantum.hpp"

using namespace unc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("measure") {
  CHECK(run({"measure", "--id", "shannon", "--dist", "0.75,0.25"}).out == "0.811278124459\n");
  CHECK(run({"measure", "--id", "absolute", "--dist", "0.5,0.5"}).out == "0.5\n");
  CHECK(run({"measure", "--id", "renyi", "--alpha", "2", "--dist", "1,0"}).out == "0\n");
  CHECK(run({"measure", "--id", "down-renyi", "--gamma", "0.5", "--dist", "0.75,0.25"}).out == "0.899968626953\n");
  CHECK(run({"measure", "--id", "tsallis", "--beta", "2", "--dist", "0.75,0.25"}).out == "0.75\n");
}

TEST_CASE("measure reads files") {
  const std::string dist = "cli_test_dist.txt";
  std::ofstream(dist) << "0.75\n0.25\n";
  CHECK(run({"measure", "--id", "shannon", "--dist-file", dist}).out == "0.811278124459\n");
  std::remove(dist.c_str());

  const std::string dm = "cli_test_dm.txt";
  {
    std::ofstream f(dm);
    write_density_matrix(f, diagonal_state(make_distribution({0.75, 0.25})));
  }
  CHECK(run({"measure", "--id", "hs", "--dm-file", dm}).out == "0.375\n");
  CHECK(run({"measure", "--id", "bures", "--dm-file", dm}).out == "0.517638090205\n");
  CHECK(run({"measure", "--id", "von-neumann", "--dm-file", dm}).out == "0.811278124459\n");
  std::remove(dm.c_str());
}

TEST_CASE("usage and validation errors exit with 2 and one line") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"measure", "--id", "shannon", "--dist", "0.5,0.6"},
           {"measure", "--id", "nope", "--dist", "0.5,0.5"},
           {"measure", "--id", "shannon"},
           {"measure", "--id", "renyi", "--alpha", "-1", "--dist", "0.5,0.5"},
           {"measure", "--id", "bures", "--dm-file", "/nonexistent"},
           {"sweep-classical", "--grid-step", "0.6"},
           {"sweep-classical", "--grid-step", "0"},
           {"sweep-quantum", "--grid-step", "1.5"},
           {"sweep-classical", "--normalize", "some"},
           {"verify", "--suite", "nothing"},
           {"frobnicate"},
           {}}) {
    const auto r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(lines(r.err).size() == 1);
  }
}

TEST_CASE("grid") {
  const auto g = cli::make_grid(0.01, 0.5);
  CHECK(g.size() == 101);
  CHECK(g[50] == 0.5);
  CHECK(g.back() == 1.0);
  CHECK(cli::make_grid(0.3).back() == 1.0);
  CHECK(cli::make_grid(0.3).size() == 5);
  CHECK(cli::make_grid(1.0).size() == 2);
}

TEST_CASE("classical sweep") {
  const auto r = run({"sweep-classical", "--normalize", "all"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == "p,shannon,js,absolute,hellinger");
  CHECK(rows[1] == "0,0,0,0,0");
  CHECK(rows[51] == "0.5,1,1,1,1");
  CHECK(rows[101] == "1,0,0,0,0");
  CHECK(rows[76].rfind("0.75,0.811278124459,", 0) == 0);
  CHECK(r.out.find("\r") == std::string::npos);
  CHECK(r.out.find(",\n") == std::string::npos);

  const auto partial = cli::sweep_classical({"shannon", "js", "absolute", "hellinger"}, 0.25, cli::Normalize::Paper);
  CHECK(partial.columns[1].divisor == 1.0);
  CHECK(partial.columns[2].divisor == doctest::Approx(0.5));
  CHECK(partial.columns[3].divisor == doctest::Approx(2.0 - std::sqrt(2.0)));
}

TEST_CASE("sweeps are byte-stable") {
  CHECK(run({"sweep-classical"}).out == run({"sweep-classical"}).out);
  CHECK(run({"sweep-quantum", "--normalize", "paper"}).out == run({"sweep-quantum", "--normalize", "paper"}).out);
}

TEST_CASE("quantum sweep") {
  const auto r = run({"sweep-quantum"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows[0] == "p,bures,l1,hs,shannon");
  CHECK(rows[51] == "0.5,0.517638090205,0.5,0.375,0.811278124459");
  CHECK(rows[101] == "1,0,0,0,0");
  const auto custom = run({"sweep-quantum", "--measures", "gen-renyi,schatten", "--alpha", "2", "--p", "2",
                           "--grid-step", "0.5"});
  CHECK(lines(custom.out)[0] == "p,gen-renyi,schatten");
  CHECK(lines(custom.out).size() == 4);
}

TEST_CASE("verify") {
  const auto errata = run({"verify", "--suite", "errata"});
  CHECK(errata.code == 0);
  CHECK(errata.out.find("PROPERTY errata js_constant") != std::string::npos);
  CHECK(errata.out.find("PROPERTY errata hellinger_closed_form") != std::string::npos);
  CHECK(errata.out.find("PROPERTY errata down_tsallis_constant") != std::string::npos);
  const auto small = run({"verify", "--suite", "classical", "--seed", "3", "--trials", "20"});
  CHECK(small.code == 0);
  CHECK(small.out.find("SUMMARY reports=420 failed=0") != std::string::npos);
}

TEST_CASE("a failing report gives exit code 1") {
  verify::PropertyReport good{"good", 1};
  verify::PropertyReport bad{"bad", 1};
  bad.failures.push_back({"x", 1.0, 0.0});
  std::ostringstream out;
  CHECK(cli::print_reports({good}, out) == 0);
  CHECK(cli::print_reports({good, bad}, out) == 1);
  CHECK(out.str().find("SUMMARY reports=2 failed=1") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sweep-classical") != std::string::npos);
}
