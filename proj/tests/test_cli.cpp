#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

const std::string kBin = LIECENT_BIN;
const std::string kFixtures = LIECENT_FIXTURE_DIR;

struct RunResult {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

/// Run the CLI with the given argument string against a fixture directory.
RunResult run(const std::string& args, const std::string& fixtures = kFixtures) {
  std::string cmd = "LIECENT_FIXTURES='" + fixtures + "' '" + kBin + "' " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("info command") {
  RunResult g2 = run("info G2");
  CHECK(g2.code == 0);
  CHECK(contains(g2.out, "algebra: G2"));
  CHECK(contains(g2.out, "dimension: 14"));
  CHECK(contains(g2.out, "weyl order: 12"));
  CHECK(contains(g2.out, "marks: 0:1 1:2 2:3"));
  CHECK(contains(g2.out, "mark-1 nodes: none"));

  RunResult b2 = run("info B2");
  CHECK(b2.code == 0);
  CHECK(contains(b2.out, "interchanged"));
  RunResult b3 = run("info B3");
  CHECK_FALSE(contains(b3.out, "interchanged"));
  CHECK(contains(b3.out, "mark-1 nodes: 1"));

  RunResult bad = run("info H7");
  CHECK(bad.code == 2);
  CHECK(contains(bad.out, "error:"));
  CHECK(run("info E9").code == 3);  // well-formed name, invalid rank
  CHECK(run("info").code == 2);     // missing required argument
}

TEST_CASE("center command") {
  RunResult e7 = run("center E7");
  CHECK(e7.code == 0);
  CHECK(contains(e7.out, "center: Z_2"));
  CHECK(contains(e7.out, "node 6: m_4+m_6+m_7 mod 2"));

  RunResult f4 = run("center F4");
  CHECK(f4.code == 0);
  CHECK(contains(f4.out, "center: trivial"));
  CHECK_FALSE(contains(f4.out, "node"));

  RunResult d5 = run("center D5");
  CHECK(d5.code == 0);
  CHECK(contains(d5.out, "center: Z_4"));
  CHECK(contains(d5.out, "node 1: m_4+m_5 mod 2"));

  RunResult d4 = run("center D4");
  CHECK(contains(d4.out, "center: Z_2 × Z_2"));
}

TEST_CASE("centralizer command, semisimple") {
  RunResult r = run("centralizer F4 2 --projection f4_a2a2.proj");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "subalgebra: A2+A2"));
  CHECK(contains(r.out, "centralizer: Z_3"));
  CHECK(contains(r.out, "quotient by center: Z_3"));
  CHECK(contains(r.out, "relative: m_2+m_4 mod 3"));
  CHECK(contains(r.out, "factor 1 center form: m_2+m_4 mod 3"));
  CHECK(contains(r.out, "factor 2 center form: m_2+m_4 mod 3"));

  RunResult j = run("--json centralizer F4 2 --projection f4_a2a2.proj");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["format_version"] == 1);
  CHECK(doc["algebra"]["name"] == "F4");
  CHECK(doc["payload"]["kind"] == "semisimple");
  CHECK(doc["payload"]["sigma_coweight"] ==
        nlohmann::json::parse(R"(["0","-2","-3","-2"])"));
  CHECK(doc["payload"]["centralizer"]["invariant_factors"] == nlohmann::json::parse("[3]"));
  CHECK(doc["payload"]["relative_form"]["modulus"] == 3);

  RunResult b3 = run("centralizer B3 3 --projection b3_a3.proj");
  CHECK(b3.code == 0);
  CHECK(contains(b3.out, "centralizer: Z_4"));
  CHECK(contains(b3.out, "quotient by center: Z_2"));
  CHECK(contains(b3.out, "relative: 2m_1+3m_3 mod 4"));
}

TEST_CASE("centralizer command, reductive") {
  RunResult r = run("centralizer D4 4 --projection d4_a3.proj");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "subalgebra: A3"));
  CHECK(contains(r.out, "centralizer: U_1 × Z_2"));
  CHECK(contains(r.out, "quotient by U_1: Z_2"));
  CHECK(contains(r.out, "center within U_1: order 2"));
  CHECK(contains(r.out, "relative: m_1+m_3"));

  RunResult e6 = run("centralizer E6 1");
  CHECK(e6.code == 0);
  CHECK(contains(e6.out, "subalgebra: D5"));
  CHECK(contains(e6.out, "centralizer: U_1"));
  CHECK(contains(e6.out, "quotient by U_1: trivial"));
  CHECK(contains(e6.out, "center within U_1: order 3"));

  RunResult e8 = run("centralizer E8 1 --kind reductive");
  CHECK(e8.code == 3);
  CHECK(contains(e8.out, "no mark-1 node"));

  RunResult f4 = run("centralizer F4 3");
  CHECK(f4.code == 3);
  CHECK(contains(f4.out, "mark 4"));

  CHECK(run("centralizer F4 9").code == 2);  // node out of range is a usage error
}

TEST_CASE("branch command") {
  RunResult b3 = run("branch B3 3 \"(1,0,0)\" --projection b3_a3.proj");
  CHECK(b3.code == 0);
  CHECK(contains(b3.out, "(1,0,0) > (0,1,0)[2] + (0,0,0)[0]"));
  CHECK(contains(b3.out, "dimension: 7"));
  CHECK(contains(b3.out, "label modulus: 4"));
  CHECK(contains(b3.out, "table:"));
  CHECK(contains(b3.out, "(1,0,0)|2|(0,1,0)"));

  RunResult canon = run("branch B3 3 \"(1,0,0)\"");
  CHECK(canon.code == 0);
  CHECK(contains(canon.out, "(0,1,0)[2]"));
  CHECK(contains(canon.out, "(0,0,0)[0]"));
  CHECK(contains(canon.out, "dimension: 7"));

  RunResult e6 = run("branch E6 1 \"(1,0,0,0,0,0)\" --projection e6_d5.proj");
  CHECK(e6.code == 0);
  CHECK(contains(e6.out,
                 "(1,0,0,0,0,0) > (0,0,0,0,1)[1] + (1,0,0,0,0)[-2] + (0,0,0,0,0)[4]"));
  CHECK(contains(e6.out, "dimension: 27"));
  CHECK_FALSE(contains(e6.out, "label modulus"));

  RunResult j = run("--json branch D4 4 \"(1,0,0,0)\" --projection d4_a3.proj");
  REQUIRE(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["payload"]["label_modulus"].is_null());
  REQUIRE(doc["payload"]["summands"].size() == 2);
  CHECK(doc["payload"]["summands"][0]["label"] == 1);
  CHECK(doc["payload"]["summands"][1]["label"] == -1);
  CHECK(doc["payload"]["dimension"] == 8);
  CHECK(doc["payload"]["table"].size() == 8);

  CHECK(run("branch B3 3 \"(1,0)\"").code == 2);           // wrong arity
  CHECK(run("branch B3 3 \"(0,0,-1)\"").code == 3);        // not dominant
  CHECK(run("branch B3 3 \"(1,0,0)\" --max-weights 3").code == 3);
  CHECK(run("branch B3 3 \"(1,0,0)\" --max-weights 0").code == 2);
  CHECK(run("branch A3 1 \"(1,0,0)\" --kind semisimple").code == 3);
}

TEST_CASE("verify-paper command") {
  RunResult all = run("verify-paper");
  CHECK(all.code == 0);
  for (const char* name : {"table1", "lemma41", "table23", "table4", "examples"})
    CHECK(contains(all.out, std::string("PASS ") + name));
  CHECK(contains(all.out, "all checks passed"));

  RunResult one = run("verify-paper --only table1");
  CHECK(one.code == 0);
  CHECK(contains(one.out, "PASS table1"));
  CHECK_FALSE(contains(one.out, "lemma41"));

  RunResult bogus = run("verify-paper --only bogus");
  CHECK(bogus.code == 2);
  CHECK(contains(bogus.out, "unknown check"));
}

TEST_CASE("verify-paper detects fixture drift") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "liecent_drift_fixtures";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  for (const auto& entry : fs::directory_iterator(kFixtures))
    fs::copy_file(entry.path(), tmp / entry.path().filename());

  // corrupt one pinned value in the center table
  fs::path table = tmp / "table_center.txt";
  std::ifstream in(table);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();
  auto pos = text.find("center E7 factors=2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 19, "center E7 factors=3");
  std::ofstream(table) << text;

  RunResult drift = run("verify-paper --only table1", tmp.string());
  CHECK(drift.code == 1);
  CHECK(contains(drift.out, "FAIL table1"));
  CHECK(contains(drift.out, "E7"));
  CHECK(contains(drift.out, "verification failed"));

  // untouched checks still pass against the copied directory
  CHECK(run("verify-paper --only table4", tmp.string()).code == 0);

  RunResult missing = run("verify-paper", (tmp / "not_there").string());
  CHECK(missing.code == 4);
  CHECK(contains(missing.out, "error:"));
  fs::remove_all(tmp);
}

TEST_CASE("json envelope and determinism") {
  RunResult a = run("--json center E6");
  REQUIRE(a.code == 0);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["format_version"] == 1);
  CHECK(doc["command"] == "center E6");
  CHECK(doc["algebra"]["series"] == "E");
  CHECK(doc["algebra"]["rank"] == 6);
  CHECK(doc["payload"]["center"]["name"] == "Z_3");
  REQUIRE(doc["payload"]["forms"].size() == 2);
  CHECK(doc["payload"]["forms"][0]["node"] == 1);
  CHECK(doc["payload"]["forms"][0]["modulus"] == 3);

  // the --json flag is accepted after the subcommand as well
  RunResult b = run("center E6 --json");
  CHECK(b.code == 0);
  CHECK(nlohmann::json::parse(b.out) == doc);

  RunResult r1 = run("branch F4 2 \"(1,0,0,0)\" --projection f4_a2a2.proj");
  RunResult r2 = run("branch F4 2 \"(1,0,0,0)\" --projection f4_a2a2.proj");
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);

  CHECK(run("").code == 2);         // a subcommand is required
  CHECK(run("--help").code == 0);   // help exits cleanly
  CHECK(run("nonsense").code == 2);
}
