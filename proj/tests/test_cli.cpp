#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "gammalab/io.hpp"

using namespace gammalab;
using io::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(GAMMALAB_CLI) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = fread(buf.data(), 1, buf.size(), f)) out.append(buf.data(), k);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string source(const std::string& rel) { return std::string(GAMMALAB_SOURCE_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ClassifyZ2InDegreeFour) {
  auto r = cli("classify --B '{\"generators\":1,\"relations\":[[2]]}' --A same --n 4");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(io::parse(r.out)["total"]["order"], 2);
}

TEST(Cli, BraidedVerify) {
  EXPECT_EQ(cli("braided verify " + source("tests/data/zero_pair_z2.json")).code, 0);
  EXPECT_EQ(cli("braided verify " + source("tests/data/pair_z2_z4_tau1.json")).code, 0);
  auto bad = cli("braided verify " + source("tests/data/broken_pair_z2_z4.json"));
  EXPECT_EQ(bad.code, 1);
  auto j = io::parse(bad.out);
  EXPECT_FALSE(j["pass"].get<bool>());
  EXPECT_FALSE(j["violations"].empty());
}

TEST(Cli, TauOfPair) {
  auto r = cli("braided tau " + source("tests/data/pair_z2_z4_tau1.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::parse(r.out)["q"], Json::parse("[[1,1]]"));
}

TEST(Cli, Prop42Sections) {
  const std::string pair = source("tests/data/zero_gamma3_z3.json");
  auto good = cli("gamma3 prop42 " + pair + " " + source("tests/data/zero_section_z3.json"));
  EXPECT_EQ(good.code, 0) << good.out;
  EXPECT_TRUE(io::parse(good.out)["commutative"].get<bool>());

  auto bad = cli("gamma3 prop42 " + pair + " " + source("tests/data/bad_section_z3.json"));
  EXPECT_EQ(bad.code, 1);
  auto j = io::parse(bad.out);
  EXPECT_EQ(j["error"], "IncompatibleSection");
  EXPECT_EQ(j["witness"].size(), 2u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("group canon --G 'Z/2+Q'").code, 2);
  EXPECT_EQ(cli("braided verify /nonexistent.json").code, 2);
  EXPECT_EQ(cli("gamma3 verify " + source("tests/data/zero_pair_z2.json")).code, 2);  // wrong kind
  EXPECT_EQ(cli("nosuchcommand").code, 2);
  EXPECT_EQ(cli("gamma3 classify-count --B Z/5 --A Z/5").code, 3);
  EXPECT_EQ(cli("braided classify --B Z --A Z/2").code, 2);
}

TEST(Cli, GroupCommands) {
  auto r = cli("group ext --B Z/4 --A Z/6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(io::parse(r.out)["ext1"]["describe"], "Z/2");
  r = cli("group canon --G '{\"generators\":2,\"relations\":[[2,0],[0,3]]}'");
  EXPECT_EQ(io::parse(r.out)["describe"], "Z/6");
  r = cli("functor apply --F Gamma3 --B Z/3");
  EXPECT_EQ(io::parse(r.out)["value"]["describe"], "Z/9");
}

TEST(Cli, RoundTripIsCanonical) {
  for (const char* f : {"tests/data/zero_pair_z2.json", "tests/data/pair_z2_z4_tau1.json",
                        "tests/golden/random_z3_z3_seed0.json"}) {
    const Json j = io::read_file(source(f));
    const std::string kind = io::bundle_kind(j);
    Json back = kind == "gamma3_pair" ? io::to_json(io::gamma3_from_json(j)) : io::to_json(io::cocycle_pair_from_json(j));
    Json again = kind == "gamma3_pair" ? io::to_json(io::gamma3_from_json(back))
                                       : io::to_json(io::cocycle_pair_from_json(back));
    EXPECT_EQ(io::canonical(back), io::canonical(again)) << f;
  }
}

TEST(Cli, Golden) {
  EXPECT_EQ(cli("gamma3 random --B Z/3 --A Z/3 --seed 0").out, slurp(source("tests/golden/random_z3_z3_seed0.json")));
  EXPECT_EQ(cli("fuzz --seed 0 --iterations 10").out, slurp(source("tests/golden/fuzz_seed0_10.json")));
  EXPECT_EQ(cli("braided classify --B Z/2 --A Z/4").out, slurp(source("tests/golden/braided_classify_z2_z4.json")));
}

TEST(Cli, FuzzSummary) {
  auto r = cli("fuzz --seed 7 --iterations 6");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = io::parse(r.out);
  EXPECT_EQ(j["false_accepts"], 0);
  EXPECT_EQ(j["verified"], 6);
  EXPECT_EQ(j["mutants"], 24);
  auto empty = io::parse(cli("fuzz --seed 7 --iterations 0").out);
  EXPECT_EQ(empty["generated"], 0);
  EXPECT_EQ(empty["mutants"], 0);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  for (const char* cmd : {"sigma classify --B Z/2 --A Z/2", "gamma3 classify-count --B Z/3 --A Z/3",
                          "fuzz --seed 3 --iterations 4", "emh --B Z/2 --n 5 --oracle"}) {
    EXPECT_EQ(cli(std::string("--threads 1 ") + cmd).out, cli(std::string("--threads 4 ") + cmd).out) << cmd;
  }
}

TEST(Cli, ShippedConventions) {
  const Convention d = io::convention_from_json(io::read_file(source("conventions/default.json")));
  const Convention c{};
  EXPECT_EQ(d.sigma, c.sigma);
  EXPECT_EQ(d.psi_sign, c.psi_sign);
  EXPECT_EQ(d.gamma_sign, c.gamma_sign);

  auto r = cli("--convention " + source("conventions/literal.json") + " sigma classify --B Z/3 --A Z/3");
  EXPECT_EQ(io::parse(r.out)["convention"], "literal");
  EXPECT_FALSE(io::parse(r.out)["gauge_invariant"].get<bool>());
  EXPECT_EQ(cli("--convention " + source("tests/data/zero_pair_z2.json") + " sigma classify --B Z/2 --A Z/2").code, 2);
}
