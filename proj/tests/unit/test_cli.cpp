#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bilattice/cli.hpp"
#include "bilattice/json_io.hpp"

using namespace bilattice;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("recurrence on the H fixture") {
  const Result r = run({"recurrence", "--phi", "z-2", "--psi", "z", "--gamma", "1/3", "-N", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  const RecurrenceTable t = table_from_json(Json::parse(r.out));
  CHECK(t.checked_to() == 6);
  for (int n = 0; n <= 6; ++n) CHECK(t.B()[n] == ExactScalar(-2 * n));
  for (int n = 0; n < 6; ++n) CHECK(t.C_at(n + 1) == ExactScalar(2 * (n + 1)));
}

TEST_CASE("verify-identity exit status") {
  const Result r = run({"verify-identity", "para-krawtchouk", "--mu", "1/2", "--N", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified") != std::string::npos);
}

TEST_CASE("mathematical failures exit with 2") {
  const Result r = run({"regularity", "--phi", "z", "--psi", "z", "--gamma", "0", "-N", "3"});
  CHECK(r.code == 2);
  CHECK(r.out.find("condition 2 fails at n=0") != std::string::npos);
  const Result s = run({"recurrence", "--phi", "2z+8", "--psi", "z+1", "-N", "4"});
  CHECK(s.code == 2);
  CHECK(s.err.find("at n=2") != std::string::npos);
}

TEST_CASE("usage errors exit with 1 and report the position") {
  const Result r = run({"recurrence", "--phi", "z-", "--psi", "z"});
  CHECK(r.code == 1);
  CHECK(r.err.find("position 2") != std::string::npos);
  CHECK(run({"recurrence", "--phi", "z", "--psi", "z", "--format", "xml"}).code == 1);
  CHECK(run({"nonsense"}).code == 1);
  CHECK(run({"recurrence", "--phi", "z^3", "--psi", "z"}).code != 0);
}

TEST_CASE("csv moments have a sigma residue column") {
  const Result r = run({"moments", "--phi", "z-2", "--psi", "z", "--gamma", "i/2", "-N", "4", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("k,moment,sigma_residue\n", 0) == 0);
  CHECK(r.out.find("2,2,0\n") != std::string::npos);
}

TEST_CASE("family tables and classification") {
  const Result f = run({"family", "charlier", "--a", "2", "--order", "3", "--format", "csv"});
  REQUIRE(f.code == 0);
  CHECK(f.out == "n,B,C,h\n0,2,,1\n1,3,2,2\n2,4,4,8\n3,5,6,48\n");
  const Result c = run({"classify", "--phi", "z^2 + 89/900", "--psi", "z - 2/15", "--format", "json"});
  REQUIRE(c.code == 0);
  CHECK(Json::parse(c.out).at("case") == "DegPhi2");
}

TEST_CASE("config file fills options that were not given") {
  const std::string path = "bilattice_cli_test_config.json";
  {
    std::ofstream cfg(path);
    cfg << R"({"command": "recurrence", "phi": "z-2", "psi": "z", "gamma": "1/3", "N": 2, "format": "csv"})";
  }
  const Result r = run({"--config", path});
  // --config belongs to the subcommands; the bare form is a usage error.
  CHECK(r.code == 1);
  const Result s = run({"recurrence", "--config", path, "-N", "1"});
  CHECK(s.code == 0);
  CHECK(s.out == "n,B,C,h\n0,0,,1\n1,-2,2,2\n");
  std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"rodrigues", "--phi", "z^2 + 89/900", "--psi", "z - 2/15", "--gamma", "i/2",
                                         "-N", "3", "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out).at("check").at("ok") == true);
}

TEST_CASE("selftest runs a single criterion and honours the seed variable") {
  setenv("BILATTICE_SEED", "7", 1);
  const Result r = run({"selftest", "--criterion", "7", "--format", "json"});
  unsetenv("BILATTICE_SEED");
  CHECK(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("seed") == 7);
  CHECK(j.at("criteria").size() == 1);
  CHECK(j.at("criteria")[0].at("passed") == true);
}
