#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "rqnn/csv.hpp"

namespace {

int run_cli(const std::string& args) {
  const std::string cmd = std::string(RQNN_CLI_PATH) + " " + args +
                          " > cli_test_stdout.txt 2> cli_test_stderr.txt";
  const int status = std::system(cmd.c_str());
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

// CSV body without the timestamped '#' metadata line.
std::string csv_without_meta(const std::string& path) {
  const std::string text = rqnn::read_text_file(path);
  std::string out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string::npos) nl = text.size() - 1;
    const std::string line = text.substr(pos, nl - pos + 1);
    if (line.empty() || line[0] != '#') out += line;
    pos = nl + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("soundness experiment passes and writes the requested csv") {
  const int code = run_cli(
      "prop1-check --seed 20260816 --set configs=5 --set p02_grid=10 "
      "--out cli_test_a.csv");
  CHECK(code == 0);
  const std::string body = csv_without_meta("cli_test_a.csv");
  CHECK(body.rfind("idx,", 0) == 0);  // header row leads the body
  // 5 config rows behind the header.
  int lines = 0;
  for (const char ch : body) lines += ch == '\n';
  CHECK(lines == 6);
}

TEST_CASE("identical config and seed give a byte-identical csv body") {
  REQUIRE(run_cli("prop1-check --seed 99 --set configs=4 --out cli_test_b1.csv") == 0);
  REQUIRE(run_cli("prop1-check --seed 99 --set configs=4 --out cli_test_b2.csv") == 0);
  CHECK(csv_without_meta("cli_test_b1.csv") == csv_without_meta("cli_test_b2.csv"));

  // A different seed changes the body.
  REQUIRE(run_cli("prop1-check --seed 100 --set configs=4 --out cli_test_b3.csv") == 0);
  CHECK(csv_without_meta("cli_test_b1.csv") != csv_without_meta("cli_test_b3.csv"));
}

TEST_CASE("config file keys are applied and flags override them") {
  rqnn::write_text_file("cli_test.cfg",
                        "# exercise the file path\n"
                        "configs = 3\n"
                        "p02_grid = 8\n"
                        "seed = 7\n");
  REQUIRE(run_cli("prop1-check --config cli_test.cfg --out cli_test_c1.csv") == 0);
  const std::string body = csv_without_meta("cli_test_c1.csv");
  int lines = 0;
  for (const char ch : body) lines += ch == '\n';
  CHECK(lines == 4);  // header + 3 rows

  // --set wins over the file key.
  REQUIRE(run_cli("prop1-check --config cli_test.cfg --set configs=2 "
                  "--out cli_test_c2.csv") == 0);
  const std::string body2 = csv_without_meta("cli_test_c2.csv");
  lines = 0;
  for (const char ch : body2) lines += ch == '\n';
  CHECK(lines == 3);
}

TEST_CASE("unknown experiment names are rejected") {
  CHECK(run_cli("no-such-experiment") != 0);
}

TEST_CASE("sweep experiments demand a seed") {
  CHECK(run_cli("rate-sweep --set n_list=8 --set trials=1") == 2);
}

TEST_CASE("state-forgetting experiment passes end to end") {
  const int code = run_cli("esp-check --seed 20260816 --set n=256 --set steps=120 "
                           "--out cli_test_esp.csv");
  CHECK(code == 0);
  const std::string body = csv_without_meta("cli_test_esp.csv");
  CHECK(body.rfind("t,spread", 0) == 0);
}
