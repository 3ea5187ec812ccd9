#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "../tools/cli.hpp"
#include "fgdyn/autofile.hpp"
#include "fgdyn/errors.hpp"
#include "fgdyn/families.hpp"
#include "fgdyn/repro.hpp"
#include "oracles.hpp"

using namespace fgdyn;
using oracle::word;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(FGDYN_TEST_DATA_DIR) + "/" + name; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

// Sets an environment variable for the lifetime of the object.
struct ScopedEnv {
  std::string name;
  ScopedEnv(std::string n, const std::string& value) : name(std::move(n)) { ::setenv(name.c_str(), value.c_str(), 1); }
  ~ScopedEnv() { ::unsetenv(name.c_str()); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("iterate") {
    auto r = run({"iterate", "phi_k:k=1", "b d^-1", "2"});
    CHECK(r.code == kSuccess);
    CHECK(r.out == "b c^-1 c^-1 d^-1\n");
    r = run({"iterate", "phi_k:k=1", "b d^-1", "0"});
    CHECK(r.out == "b d^-1\n");
    r = run({"iterate", "phi_k:k=1", "b d^-1", "-3", "--compact"});
    CHECK(r.out == "b a^-3 c a^-6 c a^-4 c a^-2 d^-1\n");
    r = run({"iterate", data("phi1.aut"), "b d^-1", "3"});
    CHECK(r.out == "b a^-1 c^-1 a^-1 a^-1 c^-1 c^-1 d^-1\n");
    r = run({"iterate", "theta:i=1", "a", "40", "--max-len", "1000"});
    CHECK(r.code == kInconclusive);
    CHECK(r.err.find("iteration 8") != std::string::npos);
  }

  TEST_CASE("omega") {
    auto r = run({"omega", "phi_k:k=2", "c"});
    CHECK(r.code == kSuccess);
    auto j = json_of(r);
    CHECK(j["kind"] == "boundary");
    CHECK(j["point"]["type"] == "rational");
    CHECK(j["point"]["head"] == "c");
    CHECK(j["point"]["period"] == "a");
    j = json_of(run({"omega", "phi_k:k=2", "a"}));
    CHECK(j["kind"] == "fixed-element");
    j = json_of(run({"omega", "phi_k:k=2", "d"}));
    CHECK(j["point"]["type"] == "prefix");
    CHECK(j["point"]["prefix"].get<std::string>().rfind("d c c a a a", 0) == 0);
    j = json_of(run({"omega", "phi_k:k=2", "c", "--backward"}));
    CHECK(j["point"]["period"] == "a^-1");
    r = run({"omega", "phi_k:k=1", "d", "--max-iter", "4"});
    CHECK(r.code == kInconclusive);
    CHECK(json_of(r)["kind"] == "not-converged");
  }

  TEST_CASE("parabolic") {
    auto r = run({"parabolic", "phi_k:k=1", "b d^-1"});
    CHECK(r.code == kSuccess);
    auto j = json_of(r);
    CHECK(j["verdict"] == "parabolic");
    CHECK(j["certification"] == "exact");
    CHECK(j["point"]["head"] == "b");
    CHECK(j["point"]["period"] == "a^-1");
    CHECK(run({"parabolic", "phi_k:k=1", "d"}).code == kNegative);
    r = run({"parabolic", "phi_k:k=1", "a"});
    CHECK(r.code == kNegative);
    CHECK(json_of(r)["forward"]["kind"] == "fixed-element");
  }

  TEST_CASE("graph") {
    auto r = run({"graph", "phi_k:k=1"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(r.out == run({"graph", "phi_k:k=1"}).out);

    const auto tmp = std::filesystem::temp_directory_path() / "fgdyn_cli_test.dot";
    r = run({"graph", data("phi1.aut"), "--dot", tmp.string()});
    CHECK(r.code == kSuccess);
    auto j = json_of(r);
    CHECK(j["vertices"].size() == 8);
    CHECK(j["edges"].size() == 7);
    CHECK(j["components"] == 3);
    CHECK(j["loops"] == 1);
    CHECK(std::filesystem::exists(tmp));
    std::filesystem::remove(tmp);

    j = json_of(run({"graph", "twist:n=3,k=1", "--dot", "/dev/null"}));
    CHECK(j["vertices"].size() == 2);
    CHECK(j["edges"].size() == 2);
    j = json_of(run({"graph", "inner:u=a", "--dot", "/dev/null"}));
    CHECK(j["vertices"].size() == 2);
    CHECK(j["edges"].size() == 1);
    CHECK(run({"graph", "phi_k:k=1", "--seeds", "b d^-1; x"}).code == kInputError);
  }

  TEST_CASE("abelianize") {
    auto j = json_of(run({"abelianize", "phi_k:k=1", "--power", "2"}));
    CHECK(j["matrix"][0][3] == 2);  // (k+1)p(p-1)/2 at k = 1, p = 2
    j = json_of(run({"abelianize", "identity:N=3"}));
    CHECK(j["matrix"] == nlohmann::json::parse("[[1,0,0],[0,1,0],[0,0,1]]"));
    // Functoriality spot check: Ab(phi^3) = Ab(phi)^3.
    const auto via_power = json_of(run({"abelianize", "phi_k:k=2", "--power", "3"}));
    CHECK(via_power["matrix"][0][3] == 9);
    CHECK(run({"abelianize", "phi_k:k=1", "--power", "-1"}).code == kInputError);
  }

  TEST_CASE("growth, period, twists") {
    auto j = json_of(run({"growth", "phi_k:k=1", "d"}));
    CHECK(j["kind"] == "polynomial");
    auto r = run({"period", "sigma", "b"});
    CHECK(r.code == kNegative);
    CHECK(json_of(r)["period"] == 2);
    CHECK(run({"period", "phi_k:k=1", "b", "--bound", "3"}).code == kSuccess);
    CHECK(run({"twist-classify", "3", "1"}).out == "semi-north-south\n");
    CHECK(run({"twist-classify", "2", "5"}).out == "north-south\n");
    CHECK(run({"twist-classify", "3", "0"}).out == "two-component\n");
    r = run({"twist-reduce", "b a^2 b^-1", "1"});
    CHECK(r.code == kSuccess);
    CHECK(r.out == "w = b, k = 3\n");
    r = run({"twist-reduce", "b", "1", "--bound", "3"});
    CHECK(r.code == kInconclusive);
    CHECK(r.out.rfind("unresolved", 0) == 0);
  }

  TEST_CASE("input errors exit with 3") {
    CHECK(run({"iterate", "phi_k:k=1", "b x", "1"}).code == kInputError);
    CHECK(run({"iterate", "nonsense_family", "b", "1"}).code == kInputError);
    CHECK(run({"iterate", data("not_inverse.aut"), "b", "1"}).code == kInputError);
    CHECK(run({"iterate", data("bad_fix.aut"), "b", "1"}).code == kInputError);
    CHECK(run({"frobnicate"}).code == kInputError);
    CHECK(run({"iterate", "phi_k:k=1"}).code == kInputError);
    CHECK(run({"omega", "phi_k:k=1", "d", "--window", "0"}).code == kInputError);
    CHECK(run({"repro", "fig9"}).code == kInputError);
  }

  TEST_CASE("autofile round trip") {
    const AutoFile f = load_automorphism(data("phi1.aut"));
    CHECK(f.pair == make_phi_k(1));
    CHECK(f.fixed.size() == 3);
    CHECK(f.seeds.size() == 8);
    const AutoFile g = parse_autofile(write_autofile(f));
    CHECK(g.pair == f.pair);
    CHECK(g.fixed == f.fixed);
    CHECK(g.seeds == f.seeds);
    try {
      parse_autofile("alphabet: a b\nmap a -> a\nmap b -> b q\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_autofile("alphabet: a b\nmap a -> a\nmap b -> b a\ninv a -> a\n"), ParseError);
    CHECK(parse_autofile("alphabet: a\nmap a -> a\ninv a -> a\n").pair.rank() == 1);
  }

  TEST_CASE("repro matches the golden files") {
    for (const auto& id : repro_ids()) {
      const auto check = repro_check(id, FGDYN_TEST_GOLDEN_DIR);
      INFO(id << ": " << check.difference);
      CHECK_FALSE(check.golden_missing);
      CHECK(check.matches);
      CHECK(repro_output(id) == check.actual);
    }
    auto r = run({"repro", "sec2", "--golden-dir", FGDYN_TEST_GOLDEN_DIR});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("p=-2: b a^-2 c a^-4 c a^-2 d^-1") != std::string::npos);
    CHECK(r.out.find("matches golden") != std::string::npos);

    // A tampered golden file is reported with the first differing line.
    const auto dir = std::filesystem::temp_directory_path() / "fgdyn_golden_test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "sec2.txt") << "phi_1 iterates of b d^-1\np=1: b d^-1\n";
    const auto bad = repro_check("sec2", dir.string());
    CHECK_FALSE(bad.matches);
    CHECK(bad.difference.find("line 2") != std::string::npos);
    CHECK(run({"repro", "sec2", "--golden-dir", dir.string()}).code == kNegative);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("FGDYN_CONFIG supplies defaults that flags override") {
    const auto path = std::filesystem::temp_directory_path() / "fgdyn_config_test.json";
    std::ofstream(path) << R"({"max_iterations": 4})";
    {
      ScopedEnv env("FGDYN_CONFIG", path.string());
      CHECK(run({"omega", "phi_k:k=1", "d"}).code == kInconclusive);
      CHECK(run({"omega", "phi_k:k=1", "d", "--max-iter", "300"}).code == kSuccess);
    }
    CHECK(run({"omega", "phi_k:k=1", "d"}).code == kSuccess);
    std::ofstream(path) << "{not json";
    {
      ScopedEnv env("FGDYN_CONFIG", path.string());
      CHECK(run({"omega", "phi_k:k=1", "d"}).code == kInputError);
    }
    std::filesystem::remove(path);
  }

  TEST_CASE("families and explore") {
    const auto r = run({"families"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("phi_k:k=K") != std::string::npos);
    const auto e1 = run({"explore", "--samples", "2", "--seed", "5"});
    const auto e2 = run({"explore", "--samples", "2", "--seed", "5"});
    CHECK(e1.out == e2.out);
    CHECK(e1.out.find("samples") != std::string::npos);
  }
}
