#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "braid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = braidinv::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("invariants of the trefoil") {
  const auto r = run({"invariants", "1 1 1", "--fiedler", "--q", "0,1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "fiedler: 3\n"));
  CHECK(has(r.out, "q0: -2 + x^2\n"));
  CHECK(has(r.out, "q1: 6 + 3x^2\n"));
  CHECK(has(r.out, "writhe: 3\n"));

  const auto j = run({"invariants", "1 1 1", "--fiedler", "--q", "0,1", "--json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("fiedler") == nlohmann::json::parse(R"({"0":3})"));
  CHECK(doc.at("q").at("0") == nlohmann::json::parse(R"({"0":-2,"2":1})"));
  CHECK(doc.at("q").at("1") == nlohmann::json::parse(R"({"0":6,"2":3})"));
}

TEST_CASE("invariants of a longer knot") {
  const auto r = run({"invariants", "n=5; 3 2 1 -4 2 1 3 4", "--fiedler", "--json"});
  REQUIRE(r.code == 0);
  const auto f = nlohmann::json::parse(r.out).at("fiedler");
  CHECK(f.contains("-3"));
  CHECK(f.contains("-1"));
  for (const auto& [e, c] : f.items()) CHECK(std::abs(std::stoi(e)) <= 3);
}

TEST_CASE("invariants errors") {
  const auto link = run({"invariants", "n=4; 1", "--fiedler"});
  CHECK(link.code == 3);
  CHECK(has(link.err, "[2,1,1]"));
  CHECK(run({"invariants", "1 x"}).code == 2);
  CHECK(run({"invariants", "n=2; 2"}).code == 2);
  CHECK(run({"invariants"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  // Non-knots still have a trace.
  const auto t = run({"invariants", "n=4; 1", "--trace"});
  CHECK(t.code == 0);
  CHECK(has(t.out, "trace: "));
}

TEST_CASE("exchange report for the distinguished pair") {
  const auto r = run({"exchange", "n=4; 3 2 1", "n=4; 2 1 3", "--q", "1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "m1: 4\n"));
  CHECK(has(r.out, "m2: 2\n"));
  CHECK(has(r.out, "fiedler diff: -x^-3 + x^-1 + x - x^3\n"));
  CHECK(has(r.out, "verdict: distinguished: not conjugate\n"));
}

TEST_CASE("exchange report for the twisted family") {
  const auto r = run({"exchange", "3 2 1", "3 2 2 2 1", "--n", "4", "--q", "1,2", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("fiedler_diff").empty());
  CHECK(doc.at("q_diff").at("1").empty());
  CHECK(doc.at("q_diff").at("2") == nlohmann::json::parse(R"({"1":64,"3":-16})"));
  CHECK(doc.at("l") == 3);
  CHECK(doc.at("verdict") == "distinguished by Q_2: not conjugate");
}

TEST_CASE("exchange report for the third family") {
  for (int i = 1; i <= 5; ++i) {
    const auto fam = run({"family", "ex3", "--n", "6", "--i", std::to_string(i), "--json"});
    REQUIRE(fam.code == 0);
    const auto pair = nlohmann::json::parse(fam.out);
    CHECK(pair.at("X").at("n") == 6);
  }
  const auto r = run({"exchange", "n=6; 5 4 3 2 1", "n=6; 5 4 3 -4 -5", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("m1") == 4);
  CHECK(doc.at("m2") == 4);
  CHECK(doc.at("balanced") == true);
  CHECK(doc.at("verdict") == "not distinguished");
}

TEST_CASE("exchange errors") {
  CHECK(run({"exchange", "n=4; 3 2 1", "n=5; 4 1", "--n", "4"}).code == 2);
  // A shorter Y is embedded; this pair then closes to a link.
  CHECK(run({"exchange", "n=4; 3 2 1", "n=3; 2 1"}).code == 3);
  CHECK(run({"exchange", "n=4; 3 2 1", "n=4; 2 1 x"}).code == 2);
  // beta1 closes to a link.
  CHECK(run({"exchange", "n=4; 1", "n=4; 1"}).code == 3);
}

TEST_CASE("families") {
  const auto ex1 = run({"family", "ex1", "--k", "1"});
  CHECK(ex1.code == 0);
  CHECK(has(ex1.out, "beta1: n=5; 3 2 1 -4 3 2 2 2 1 4\n"));
  CHECK(has(run({"family", "ex2"}).out, "Y: n=4; 2 1 3\n"));
  const auto ex3 = run({"family", "ex3", "--n", "4", "--i", "2"});
  CHECK(ex3.code == 0);
  CHECK(has(ex3.out, "Y: n=4; 3 2 -3\n"));
  CHECK(run({"family", "ex3", "--n", "5", "--i", "2"}).code == 2);
  CHECK(run({"family", "ex1", "--k", "-1"}).code == 2);
  CHECK(run({"family", "ex9"}).code == 2);
}

TEST_CASE("unknot replay") {
  const auto r = run({"morton-replay"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "reached n=1; after 15 steps"));
  const auto bad = run({"morton-replay", "--skip-step", "2"});
  CHECK(bad.code == 4);
  CHECK(has(bad.err + bad.out, "step 2"));
  const auto j = run({"morton-replay", "--json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("ok") == true);
  CHECK(doc.at("steps").size() == 15);
  CHECK(doc.at("final").at("n") == 1);
}

TEST_CASE("scan output is byte-identical across runs") {
  const std::vector<std::string> args{"scan", "--n", "4", "--samples", "30", "--seed", "7", "--json"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto ls = lines(a.out);
  REQUIRE(ls.size() == 31);
  for (const auto& l : ls) CHECK(nlohmann::json::parse(l).at("schema") == 1);
  CHECK(nlohmann::json::parse(ls.back()).at("summary").at("records") == 30);

  auto threads = args;
  threads.insert(threads.end(), {"--threads", "3"});
  CHECK(run(threads).out == a.out);
}

TEST_CASE("scan with no samples") {
  const auto r = run({"scan", "--samples", "0", "--json"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 1);
  CHECK(nlohmann::json::parse(ls[0]).at("summary").at("records") == 0);
  CHECK(has(run({"scan", "--samples", "0"}).out, "summary: records=0"));
}

TEST_CASE("scan with injected pairs") {
  const auto path = std::filesystem::temp_directory_path() / "braidinv_include_test.txt";
  {
    std::ofstream f(path);
    f << "# twisted family\n";
    for (int k = 1; k <= 3; ++k) {
      f << "n=4; 3 2 1 | n=4; 3 2";
      for (int e = 0; e < 2 * k; ++e) f << " 2";
      f << " 1\n";
    }
    f << "\n3 2 1 | 2 1 3\n";
  }
  const auto r = run({"scan", "--samples", "2", "--include-file", path.string(), "--json"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  for (int k = 0; k < 4; ++k) {
    const auto rec = nlohmann::json::parse(ls[static_cast<std::size_t>(k)]);
    CHECK(rec.at("source") == "include");
    CHECK(rec.at("agreement") == true);
  }
  CHECK(nlohmann::json::parse(ls[3]).at("fiedler_diff_zero") == false);

  std::ofstream(path) << "3 2 1 2 1 3\n";
  CHECK(run({"scan", "--samples", "0", "--include-file", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"scan", "--include-file", path.string()}).code == 2);
}

TEST_CASE("truncation order override") {
  ::setenv("BRAID_TRUNC_ORDER", "6", 1);
  const auto hi = run({"invariants", "1 1 1", "--q", "1"});
  ::setenv("BRAID_TRUNC_ORDER", "junk", 1);
  const auto bad = run({"invariants", "1 1 1", "--q", "1"});
  ::unsetenv("BRAID_TRUNC_ORDER");
  const auto def = run({"invariants", "1 1 1", "--q", "1"});
  CHECK(hi.code == 0);
  CHECK(hi.out == def.out);
  CHECK(bad.code == 2);
}
