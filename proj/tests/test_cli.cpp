#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef GSBRAID_CLI_PATH
#error "GSBRAID_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& stdin_data = "",
              bool merge_stderr = false) {
  std::string command = std::string(GSBRAID_CLI_PATH) + " " + args;
  if (!stdin_data.empty()) {
    command = "printf '%s' '" + stdin_data + "' | " + command;
  } else {
    command += " < /dev/null";
  }
  command += merge_stderr ? " 2>&1" : " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 512> buffer;
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
    result.out.append(buffer.data(), got);
  int status = pclose(pipe);
  result.exit_code = WEXITSTATUS(status);
  return result;
}

}  // namespace

TEST_CASE("normalize") {
  auto r = run("normalize --preset artin:2 --word '2 1 1 2 1'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 2 1 1 2\n");

  CHECK(run("normalize --preset artin:3 --word '3 1'").out == "1 3\n");

  auto empty = run("normalize --preset artin:2 --word ''");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out == "\n");

  auto from_stdin = run("normalize --preset artin:2", "2 1 2");
  CHECK(from_stdin.out == "1 2 1\n");

  // Non-artin sources are normalized through a bounded completion; the
  // result still lands on stdout alone. a_32 a_21 = a_31 a_32 = a_21 a_31
  // reduces to its deg-lex-least side.
  auto bkl = run("normalize --preset bkl:3 --max-len 8 --word '3 1'");
  CHECK(bkl.exit_code == 0);
  CHECK(bkl.out == "1 2\n");
}

TEST_CASE("eq and oracle-eq") {
  auto eq = run("eq --preset artin:2 --w1 '2 1 2' --w2 '1 2 1'");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out == "equal\n");

  auto group = run("eq --group --preset artin:2 --w1 '1 -1' --w2 ''");
  CHECK(group.exit_code == 0);
  CHECK(group.out == "equal\n");

  auto distinct = run("oracle-eq --preset artin:2 --w1 '1 2' --w2 '2 1'");
  CHECK(distinct.exit_code == 1);
  CHECK(distinct.out == "distinct\n");

  auto eq_distinct = run("eq --preset artin:3 --w1 '1 2' --w2 '2 1'");
  CHECK(eq_distinct.exit_code == 1);
  CHECK(eq_distinct.out == "distinct\n");

  // File-backed presentations run through bounded completion.
  std::string path = "/tmp/gsbraid_eq.txt";
  std::ofstream(path) << "gens: 2\nrel: 2 1 2 = 1 2 1\n";
  auto file_eq = run("eq --presentation " + path +
                     " --max-len 8 --w1 '2 1 2' --w2 '1 2 1'");
  CHECK(file_eq.exit_code == 0);
  CHECK(file_eq.out == "equal\n");
}

TEST_CASE("delta-form") {
  CHECK(run("delta-form --preset artin:2 --word '-1'").out == "D^-1 | 1 2\n");
  CHECK(run("delta-form --preset artin:2 --word '1 2 1'").out == "D^1 |\n");
  CHECK(run("delta-form --preset artin:2 --word '1'").out == "D^0 | 1\n");
}

TEST_CASE("complete") {
  auto r = run("complete --preset artin:2 --max-len 12");
  CHECK(r.exit_code == 0);
  CHECK(r.out.starts_with("status SaturatedUpToBound rules 9 discarded 0\n"));
  CHECK(r.out.find("rule: 2 1 2 -> 1 2 1\n") != std::string::npos);

  auto budget = run("complete --preset artin:2 --max-len 12 --max-rules 3");
  CHECK(budget.exit_code == 3);

  // Pure commutation systems are already confluent.
  std::string path = "/tmp/gsbraid_cox.txt";
  std::ofstream(path) << "m 1 2 2\nm 1 3 2\nm 2 3 2\n";
  auto cox = run("complete --preset coxeter:" + path + " --max-len 8");
  CHECK(cox.exit_code == 0);
  CHECK(cox.out.starts_with("status SaturatedUpToBound rules 3 discarded 0\n"));
}

TEST_CASE("verify") {
  auto good = run("verify --preset artin:2 --max-len 8");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("violations 0") != std::string::npos);

  std::string path = "/tmp/gsbraid_b3.txt";
  std::ofstream(path) << "gens: 2\nrel: 2 1 2 = 1 2 1\n";
  auto bad = run("verify --presentation " + path + " --max-len 5");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("violations 1") != std::string::npos);
  CHECK(bad.out.find("violation: 2 1 2 1 2") != std::string::npos);
}

TEST_CASE("identities") {
  auto r = run("identities --n 3 --bound 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("failures 0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("normalize --preset artin:2 --word 'x'").exit_code == 2);
  CHECK(run("normalize --preset nope:2 --word '1'").exit_code == 2);
  CHECK(run("normalize --word '1'").exit_code == 2);
  CHECK(run("eq --preset artin:2 --w1 '1'").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}
