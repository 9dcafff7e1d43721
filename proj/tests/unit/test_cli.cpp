#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = knotoid::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixtures = KNOTOID_DATA_DIR "/paper_fixtures.gko";

}  // namespace

TEST_CASE("compute") {
  CHECK(run({"compute", "--code", "O1+ O2- U1 U2"}).out == "0\n");
  CHECK(run({"compute", "--code", ""}).out == "0\n");
  CHECK(run({"compute", "--code", std::string(fixtures::k5_1_28), "--mode", "literal"}).out ==
        "(-t^-1 - t + t^(z^-1) + t^(-z))*y + (t^-1 + t - 2)*y^2\n");
  const Run file = run({"compute", "--file", kFixtures, "--mode", "literal"});
  CHECK(file.code == 0);
  CHECK(file.out ==
        "trivial: 0\n"
        "2_2: 0\n"
        "5.1.28: (-t^-1 - t + t^(z^-1) + t^(-z))*y + (t^-1 + t - 2)*y^2\n"
        "5.1.28-reverse: (-t^-1 - t + t^(-z^-1) + t^(z))*y + (t^-1 + t - 2)*y^2\n"
        "singular-kc: (t^(z^-1) + t^(-z) - 2)*y + (t^-1 + t - 2)*y^2\n");
  const Run json = run({"compute", "--code", "O1+ O2- U1 U2", "--format", "json"});
  CHECK(json.out == R"({"policy":"quotient","terms":[],"consts":[]})" "\n");
  const Run json_file = run({"compute", "--file", kFixtures, "--format", "json"});
  CHECK(json_file.out.rfind(R"({"name":"trivial","H":{"policy":"quotient")", 0) == 0);
  CHECK(run({"compute", "--code", "O1+ U1", "--format", "latex"}).out == "0\n");
  CHECK(run({"compute", "--code", "O1+ U1", "--include-n0"}).code == 0);
}

TEST_CASE("compute errors exit 2 with diagnostics") {
  const Run bad = run({"compute", "--code", "O1+ X2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("token 2") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "knotoid_bad.gko";
  std::ofstream(path) << "ok: O1+ U1\nbad: O1+ U1 U2\n";
  const Run bad_file = run({"compute", "--file", path.string()});
  CHECK(bad_file.code == 2);
  CHECK(bad_file.err.find("line 2") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(run({"compute"}).code == 2);
  CHECK(run({"compute", "--code", "O1+ U1", "--mode", "mod"}).code == 2);
  CHECK(run({"compute", "--file", "/nonexistent.gko"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("compare") {
  const std::string d(fixtures::k5_1_28), r(fixtures::k5_1_28_reverse);
  CHECK(run({"compare", d, r, "--mode", "literal"}).out == "distinct\n");
  CHECK(run({"compare", d, r, "--mode", "quotient"}).out == "equal\n");
  CHECK(run({"compare", d, d}).out == "equal\n");
  const std::string m = knotoid::serialize(knotoid::mirror(fixtures::parse(d)));
  const Run mirror = run({"compare", d, m, "--check", "mirror", "--mode", "literal"});
  CHECK(mirror.code == 0);
  CHECK(mirror.out == "distinct\nidentity holds\n");
  CHECK(run({"compare", d, r, "--check", "reverse", "--mode", "literal"}).out == "distinct\nidentity holds\n");
  const Run fails = run({"compare", d, d, "--check", "mirror"});
  CHECK(fails.code == 1);
  CHECK(fails.out == "equal\nidentity fails\n");
  CHECK(run({"compare", d}).code == 2);
  CHECK(run({"compare", d, "O1+"}).code == 2);
}

TEST_CASE("gordian") {
  const std::string d(fixtures::k5_1_28);
  CHECK(run({"gordian", d, ""}).out == "bound: 2\n");
  CHECK(run({"gordian", d, "", "--mode", "literal"}).out == "bound: 2\n");
  CHECK(run({"gordian", d, d}).out == "bound: 0\n");
  // t^-1 and t occur with coefficients 1 and -1.
  const Run nf = run({"gordian", "O3+ U2- O1+ O2- U3+ U1+", ""});
  CHECK(nf.code == 0);
  CHECK(nf.out == "not_homotopy_form\n");
  CHECK(nf.err.find("coefficients 1 and -1") != std::string::npos);
  CHECK(run({"gordian", "O3+ U2- O1+ O2- U3+ U1+", "", "--json"}).out ==
        R"({"bound":null,"per_n":{},"pairs":[],"status":"not_homotopy_form"})" "\n");
  const Run json = run({"gordian", d, "", "--json"});
  CHECK(json.out.rfind(R"({"bound":2,"per_n":{"1":2,"2":1},)", 0) == 0);
}

TEST_CASE("selftest") {
  const Run a = run({"selftest", "--samples", "50", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out.find(R"({"status":"pass"})") != std::string::npos);
  CHECK(a.out == run({"selftest", "--samples", "50", "--seed", "7"}).out);
  const Run empty = run({"selftest", "--samples", "0"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find(R"("failures":1)") == std::string::npos);
}

TEST_CASE("walk and replay") {
  const std::string d(fixtures::k2_2);
  const Run w = run({"walk", d, "--steps", "6", "--seed", "3"});
  CHECK(w.code == 0);
  const auto result_at = w.out.rfind("result: ");
  REQUIRE(result_at != std::string::npos);
  const std::string result = w.out.substr(result_at + 8, w.out.size() - result_at - 9);

  const auto path = std::filesystem::temp_directory_path() / "knotoid_trace.jsonl";
  std::ofstream(path) << w.out.substr(0, result_at);
  CHECK(run({"replay", d, path.string()}).out == result + "\n");
  std::ofstream(path) << "{broken\n";
  CHECK(run({"replay", d, path.string()}).code == 2);
  std::filesystem::remove(path);
}
