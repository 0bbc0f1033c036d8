#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gpdrep/cli.hpp"
#include "gpdrep/textio.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gpdrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(GPDREP_FIXTURE_DIR) + "/" + name;
}

// A scratch file under the system temp directory, removed on destruction.
struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& text)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("info on P2") {
    const Outcome r = run({"info", fixture("p2.gpd")});
    CHECK(r.code == 0);
    CHECK(r.out.find("|Bis|: 2") != std::string::npos);
    CHECK(r.out.find("enough bisections: true") != std::string::npos);
    CHECK(r.out.find("|S_G(alpha)|: 4") != std::string::npos);
  }

  TEST_CASE("info as JSON") {
    const Outcome r = run({"--json", "info", fixture("pair3.gpd")});
    REQUIRE(r.code == 0);
    const auto j = gpdrep::parse_json(r.out);
    CHECK(j["bisections"] == 6);
    CHECK(j["selfmap_units"] == 216);
  }

  TEST_CASE("info when S_G is too large") {
    TempFile f("gpdrep_cli_pair4.gpd", "BUILD pair 4\n");
    const Outcome r = run({"info", f.path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("|Bis|: 24") != std::string::npos);
    CHECK(r.out.find("not computed") != std::string::npos);
  }

  TEST_CASE("validate") {
    CHECK(run({"validate", fixture("p2.gpd")}).code == 0);
    CHECK(run({"validate", fixture("p2.gpd"), "--rep", fixture("r.grep")}).code == 0);
    const Outcome bad = run({"validate", fixture("corrupted.gpd")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("associativity") != std::string::npos);
    const Outcome j = run({"--json", "validate", fixture("corrupted.gpd")});
    CHECK(j.code == 1);
    CHECK(gpdrep::parse_json(j.out)["ok"] == false);
  }

  TEST_CASE("validate a broken rep") {
    TempFile f("gpdrep_cli_bad.grep", "BUNDLE\n a 1\n b 1\nARROWMAT\n (a,b) 2\n (b,a) 1\n");
    const Outcome r = run({"validate", fixture("p2.gpd"), "--rep", f.path.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("homomorphism") != std::string::npos);
  }

  TEST_CASE("input errors exit with 2") {
    CHECK(run({"info", "/nonexistent/file.gpd"}).code == 2);
    TempFile f("gpdrep_cli_syntax.gpd", "BUILD pair x\n");
    const Outcome r = run({"info", f.path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 1, column 12") != std::string::npos);
    TempFile g("gpdrep_cli_syntax.grep", "BUNDLE\n a 1\n b 1\nARROWMAT\n (a,b) 2/0\n");
    CHECK(run({"validate", fixture("p2.gpd"), "--rep", g.path.string()}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
  }

  TEST_CASE("group tables") {
    const Outcome b = run({"bisections", fixture("p2.gpd")});
    CHECK(b.code == 0);
    CHECK(b.out.find("# 2 elements") != std::string::npos);
    const Outcome s = run({"--json", "selfmaps", fixture("z2.gpd")});
    REQUIRE(s.code == 0);
    CHECK(gpdrep::parse_json(s.out)["elements"].size() == 2);
  }

  TEST_CASE("induce then recover on both sides") {
    for (const std::string side : {"bis", "sg"}) {
      const Outcome ind = run({"induce", fixture("p2.gpd"), fixture("r.grep"), "--side", side});
      REQUIRE(ind.code == 0);
      TempFile table("gpdrep_cli_table_" + side + ".json", ind.out);
      const Outcome rec = run({"recover", fixture("p2.gpd"), table.path.string(), "--side", side});
      CHECK(rec.code == 0);
      CHECK(rec.out.find("(a,b) 2") != std::string::npos);
      CHECK(rec.out.find("(b,a) 1/2") != std::string::npos);
    }
  }

  TEST_CASE("a rep written for another groupoid is an input error") {
    const Outcome ind = run({"induce", fixture("gb2.gpd"), fixture("r.grep")});
    CHECK(ind.code == 2);
  }

  TEST_CASE("roundtrip") {
    const Outcome r = run({"roundtrip", fixture("p2.gpd"), fixture("r.grep")});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }

  TEST_CASE("export") {
    const Outcome dot = run({"export", fixture("p2.gpd"), "--rep", fixture("r.grep"), "--format",
                             "dot"});
    CHECK(dot.code == 0);
    CHECK(dot.out.find("(a,b) | 2") != std::string::npos);
    const Outcome js = run({"export", fixture("p2.gpd")});
    CHECK(js.code == 0);
    CHECK(gpdrep::groupoid_from_json(gpdrep::parse_json(js.out)).num_arrows() == 4);
    CHECK(run({"export", fixture("p2.gpd"), "--format", "grep"}).code == 2);
    CHECK(run({"export", fixture("p2.gpd"), "--format", "svg"}).code == 2);
  }

  TEST_CASE("check on Fixture R") {
    const Outcome r = run({"check", fixture("p2.gpd"), fixture("r.grep")});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("PASS AC9") != std::string::npos);
  }
}
