#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TERMPRED_BIN) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string program(const char* name) {
  return std::string(TERMPRED_PROGRAMS_DIR) + "/" + name;
}

std::string tmp_file(const char* name, const char* content) {
  std::string path = std::string(TERMPRED_TEST_TMP) + "/" + name;
  FILE* f = fopen(path.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs(content, f);
  fclose(f);
  return path;
}

}  // namespace

TEST_CASE("analyze prints a verdict and exits 0") {
  RunResult r = run_cli("analyze " + program("p4.pl") +
                        " --query \"subset1(o,i)\"");
  CHECK(r.status == 0);
  CHECK(r.out.find("predicted-non-terminating") != std::string::npos);

  RunResult r2 = run_cli("analyze " + program("p0.pl") + " --goal \"p\"");
  CHECK(r2.status == 0);
  CHECK(r2.out.find("verdict:  terminating") != std::string::npos);
}

TEST_CASE("json output reports the same verdict as text") {
  RunResult text = run_cli("analyze " + program("p2.pl") +
                           " --query \"append(i,o,o)\"");
  RunResult json = run_cli("analyze " + program("p2.pl") +
                           " --query \"append(i,o,o)\" --format json");
  CHECK(text.status == 0);
  CHECK(json.status == 0);
  auto j = nlohmann::json::parse(json.out);
  CHECK(j["verdict"] == "predicted-terminating");
  CHECK(text.out.find("predicted-terminating") != std::string::npos);
  CHECK(j["r"] == 3);
  CHECK(j["pruning"] == "variants");
}

TEST_CASE("floundering and parse errors exit 2") {
  std::string flounder =
      tmp_file("flounder.pl", "p(X) :- \\+ q(X).\nq(a).\n");
  RunResult r = run_cli("analyze " + flounder + " --query \"p(i)\"");
  CHECK(r.status == 2);
  CHECK(r.out.find("floundering") != std::string::npos);

  std::string broken = tmp_file("broken.pl", "p(X) :-\n");
  RunResult r2 = run_cli("analyze " + broken + " --query \"p(i)\"");
  CHECK(r2.status == 2);
  CHECK(r2.out.find("parse error") != std::string::npos);
}

TEST_CASE("resource exhaustion exits 3") {
  RunResult r = run_cli("analyze " + program("p4.pl") +
                        " --query \"subset1(o,i)\" --max-nodes 4");
  CHECK(r.status == 3);
  CHECK(r.out.find("resource-exceeded") != std::string::npos);
}

TEST_CASE("--all-modes prints one row per moded query") {
  RunResult r = run_cli("analyze " + program("p3.pl") + " --all-modes");
  CHECK(r.status == 0);
  CHECK(r.out.find("mult(i,i,V3)") != std::string::npos);
  CHECK(r.out.find("add(i,i,i)") != std::string::npos);
  CHECK(r.out.find("(inferred)") != std::string::npos);
}

TEST_CASE("--trace writes a DOT rendering") {
  std::string dot = std::string(TERMPRED_TEST_TMP) + "/p1.dot";
  RunResult r = run_cli("analyze " + program("p1.pl") +
                        " --query \"p(i)\" --trace " + dot);
  CHECK(r.status == 0);
  FILE* f = fopen(dot.c_str(), "r");
  REQUIRE(f != nullptr);
  std::string content;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
    content.append(buf.data(), n);
  fclose(f);
  CHECK(content.find("digraph") != std::string::npos);
  CHECK(content.find("cut C_2") != std::string::npos);
  std::remove(dot.c_str());
}

TEST_CASE("defaults: r=3, pruning=variants") {
  RunResult r = run_cli("analyze " + program("p1.pl") + " --query \"p(i)\"");
  CHECK(r.out.find("r:        3") != std::string::npos);
  CHECK(r.out.find("pruning:  variants") != std::string::npos);
}
