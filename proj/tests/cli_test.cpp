#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <set>

#include "cdc/graph_io.hpp"
#include "cdc/json_io.hpp"
#include "cdc/verify.hpp"
#include "support.hpp"

using namespace cdc;
using namespace cdc::testing;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out, err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cdc_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  Outcome run(const std::string& args, const std::string& stdin_file = "") const {
    const std::string out = tmp("stdout"), err = tmp("stderr");
    std::string cmd = std::string(CDC_BINARY) + " " + args + " >" + out + " 2>" + err;
    if (!stdin_file.empty()) cmd += " <" + stdin_file;
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(tmp(name)) << text;
  }

  fs::path dir_;
};

int slots(const Json& cover) {
  int total = 0;
  for (const Json& c : cover["cycles"]) total += static_cast<int>(c.size());
  return total;
}

}  // namespace

TEST_F(Cli, DecomposeK4) {
  const Outcome r = run("decompose --input " + data_path("k4.g6"));
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(slots(j), 12);
  EXPECT_GE(j["cycles"].size(), 3u);
  EXPECT_LE(j["cycles"].size(), 4u);
  EXPECT_TRUE(verify_cdc(k4(), cover_from_json(j)).accepted);
}

TEST_F(Cli, DecomposeFromStdinWithTrace) {
  const Outcome r = run("decompose --trace " + tmp("trace.json") + " --output " + tmp("cover.json"), data_path("k4.g6"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(Json::parse(read_file(tmp("trace.json")))["success"]);
  EXPECT_EQ(slots(Json::parse(read_file(tmp("cover.json")))), 12);
}

TEST_F(Cli, DecomposeGoddyn) {
  const Outcome r = run("decompose --input " + data_path("petersen.txt") + " --goddyn-cycle 0,1,2,3,4");
  ASSERT_EQ(r.code, 0) << r.err;
  const CycleDoubleCover cover = cover_from_json(Json::parse(r.out));
  EXPECT_TRUE(verify_cdc(petersen(), cover).accepted);
  EXPECT_NE(std::find(cover.cycles.begin(), cover.cycles.end(), Cycle::from_vertices({0, 1, 2, 3, 4})),
            cover.cycles.end());
  EXPECT_EQ(run("decompose --input " + data_path("petersen.txt") + " --goddyn-cycle 0,1,2").code, 1);
}

TEST_F(Cli, DecomposeRejectsBridge) {
  write("bridged.g6", serialize_graph6(bridged()) + "\n");
  const Outcome r = run("decompose --input " + tmp("bridged.g6"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bridge 4-5"), std::string::npos) << r.err;
  EXPECT_EQ(run("decompose --input " + tmp("missing.g6")).code, 1);
  write("bad.txt", "0 1\n1 1\n");
  EXPECT_EQ(run("decompose --input " + tmp("bad.txt")).code, 1);
}

TEST_F(Cli, DecomposeIsDeterministic) {
  const std::string args = "decompose --input " + data_path("petersen.txt");
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(Cli, Verify) {
  write("tri.json", R"({"cycles": [[0,1,2],[0,1,3],[0,2,3],[1,2,3]]})");
  write("trunc.json", R"({"cycles": [[0,1,2],[0,1,3],[0,2,3]]})");
  write("far.json", R"([[0,1,9],[0,1,3],[0,2,3],[1,2,3]])");
  const std::string g = " --graph " + data_path("k4.g6");
  const Outcome ok = run("verify" + g + " --cover " + tmp("tri.json"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(Json::parse(ok.out)["accepted"]);
  const Outcome bad = run("verify" + g + " --cover " + tmp("trunc.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("edge_count 1 2"), std::string::npos) << bad.err;
  EXPECT_EQ(run("verify" + g + " --cover " + tmp("far.json")).code, 1);
}

TEST_F(Cli, Oracle) {
  Outcome r = run("oracle --input " + data_path("k4.g6") + " --mode cdc");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "found\n");
  r = run("oracle --input " + data_path("bridged.txt") + " --mode cdc");
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.out, "absent\n");
  r = run("oracle --input " + data_path("petersen.txt") + " --mode rainbow");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "found\n");
}

TEST_F(Cli, Gen) {
  Outcome r = run("gen --n 4 --count 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "C~\n");
  r = run("gen --n 10 --seed 7 --count 5");
  ASSERT_EQ(r.code, 0);
  const auto gs = parse_graph6_lines(r.out);
  ASSERT_EQ(gs.size(), 5u);
  for (const Graph& g : gs) EXPECT_TRUE(is_cubic(g) && is_connected(g) && find_bridges(g).empty());
  EXPECT_EQ(r.out, run("gen --n 10 --seed 7 --count 5").out);
  EXPECT_EQ(run("gen --n 7").code, 1);
}

TEST_F(Cli, Crosscheck) {
  const std::string art = " --artifacts " + tmp("art");
  Outcome r = run("crosscheck --n-max 10 --count 50" + art);
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("total 50 instances, 0 case failures, 0 disagreements"), std::string::npos) << r.out;
  EXPECT_EQ(run("crosscheck --n-max 4 --count 1" + art).code, 0);
  EXPECT_EQ(run("crosscheck --count 0" + art).code, 0);
  EXPECT_FALSE(fs::exists(tmp("art")));
}
