// Runs the dfvs binary end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  std::string cmd = std::string(DFVS_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dfvs_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, SolveExitCodes) {
  std::string tri = write("tri.txt", "p dfvs 3 3 1\n0 1\n1 2\n2 0\n");
  Outcome yes = run("solve " + tri);
  EXPECT_EQ(yes.code, 0);
  auto doc = nlohmann::json::parse(yes.out);
  EXPECT_EQ(doc["status"], "solution");
  EXPECT_EQ(doc["solution"].size(), 1u);

  Outcome no = run("solve " + tri + " --k 0");
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(nlohmann::json::parse(no.out)["status"], "no");

  std::string bad = write("bad.txt", "p dfvs 3 1 1\n0 5\n");
  Outcome err = run("solve " + bad);
  EXPECT_EQ(err.code, 2);
  EXPECT_EQ(nlohmann::json::parse(err.out)["status"], "error");

  EXPECT_EQ(run("solve " + (dir_ / "missing.txt").string()).code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(CliTest, SolveFromStdin) {
  std::string tri = write("tri.txt", "p dfvs 3 3 0\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(run("solve - < " + tri).code, 1);
}

TEST_F(CliTest, GenerateThenSolveAndVerify) {
  std::string inst = (dir_ / "gen.txt").string();
  ASSERT_EQ(run("generate --kind ordmc --n 40 --l 2 --k 2 --density 0.1 "
                "--seed 5 --planted -o " + inst)
                .code,
            0);
  Outcome solved = run("solve " + inst);
  ASSERT_EQ(solved.code, 0);
  std::string result = write("result.json", solved.out);
  EXPECT_EQ(run("verify " + inst + " " + result).code, 0);
  EXPECT_EQ(run("verify " + inst + " --solution \"\"").code, 1);

  Outcome again = run("generate --kind ordmc --n 40 --l 2 --k 2 --density 0.1 "
                  "--seed 5 --planted");
  std::ifstream in(inst);
  std::string written{std::istreambuf_iterator<char>(in), {}};
  EXPECT_EQ(again.out, written);

  EXPECT_EQ(run("generate --n 5 --density 2").code, 2);
  EXPECT_EQ(run("generate --kind graph --n 5").code, 2);
}

TEST_F(CliTest, VerifyExitCodes) {
  std::string tri = write("tri.txt", "p dfvs 3 3 1\n0 1\n1 2\n2 0\n");
  Outcome ok = run("verify " + tri + " --solution \"2\"");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["valid"], true);
  EXPECT_EQ(run("verify " + tri + " --solution \"\"").code, 1);
  EXPECT_EQ(run("verify " + tri + " --solution \"0 1\"").code, 1);
  EXPECT_EQ(run("verify " + tri + " --solution \"z\"").code, 2);
  EXPECT_EQ(run("verify " + tri).code, 2);
  std::string labels = write("sol.txt", "1\n");
  EXPECT_EQ(run("verify " + tri + " " + labels).code, 0);
}

}  // namespace
