#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"
#include "hopfcat/fixtures.hpp"
#include "hopfcat/format.hpp"

using namespace hopfcat;
namespace fx = hopfcat::fixtures;
namespace fs = std::filesystem;

namespace {

const fs::path fixture_dir = HOPFCAT_FIXTURE_DIR;

fs::path fixture(const std::string& name) { return fixture_dir / (name + ".hcat"); }

std::string slurp(const fs::path& p) { return read_text_file(p); }

/// Runs the installed binary; returns its exit code and captured stdout.
std::pair<int, std::string> exec(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / ("hopfcat_exec_" + std::to_string(::getpid()) + ".txt");
  const std::string cmd = std::string(HOPFCAT_BINARY) + " " + args + " >" + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::string text = fs::exists(out) ? slurp(out) : "";
  fs::remove(out);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hopfcat_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path tmp(const std::string& name) const { return dir_ / name; }

  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(tmp(name)) << text;
    return tmp(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, VerifyPairGroupoidExitsZero) {
  const auto [code, out] = exec("verify --level hopf " + fixture("pair2").string());
  EXPECT_EQ(code, 0) << out;
  EXPECT_NE(out.find("0 failed, PASS"), std::string::npos);
}

TEST_F(Cli, VerifyIdempotentCandidatesExitOneWithWitness) {
  for (const auto& [name, s] : fx::idempotent_candidates()) {
    const fs::path report = tmp(name + ".jsonl");
    const auto [code, out] =
        exec("verify --level hopf --report " + report.string() + " " + fixture("idempotent-candidate-" + name).string());
    EXPECT_EQ(code, 1) << name;
    bool witnessed = false;
    std::istringstream lines(slurp(report));
    for (std::string l; std::getline(lines, l);) {
      const auto j = nlohmann::json::parse(l);
      if (j["status"] == "fail" && j["axiom"].get<std::string>().rfind("antipode", 0) == 0) {
        witnessed = witnessed || !j["witness"].is_null();
      }
    }
    EXPECT_TRUE(witnessed) << name;
  }
}

TEST_F(Cli, IdempotentWithoutAntipodeAtLevelHopfIsAnInputError) {
  EXPECT_EQ(exec("verify --level hopf " + fixture("idempotent").string()).first, 2);
  EXPECT_EQ(exec("verify " + fixture("idempotent").string()).first, 0);
}

TEST_F(Cli, MalformedFilesExitTwo) {
  std::string text = slurp(fixture("z2"));
  const fs::path bad = write("bad.hcat", text + "mult x x x 0 0 5 1\n");
  const auto [code, out] = exec("verify " + bad.string());
  EXPECT_EQ(code, 2);
  EXPECT_NE(out.find("out of range"), std::string::npos) << out;
  EXPECT_EQ(exec("verify " + tmp("missing.hcat").string()).first, 2);
  EXPECT_EQ(exec("frobnicate").first, 2);
  EXPECT_EQ(exec("verify --level sideways " + fixture("z2").string()).first, 2);
  EXPECT_EQ(exec("--help").first, 0);
}

TEST_F(Cli, FromGroupoidThenPack) {
  const fs::path hopf = tmp("pair2.hcat"), weak = tmp("pair2.weak.hcat");
  EXPECT_EQ(exec("transform from-groupoid " + fixture("pair2-groupoid").string() + " -o " + hopf.string()).first, 0);
  const auto a = std::get<HopfCategory>(load_document(hopf));
  std::size_t blocks = 0;
  for (auto d : a.dims()) blocks += d > 0;
  EXPECT_EQ(blocks, 4u);
  EXPECT_EQ(slurp(hopf), slurp(fixture("pair2")));
  EXPECT_EQ(exec("transform pack " + hopf.string() + " -o " + weak.string()).first, 0);
  const auto w = std::get<WeakHopf>(load_document(weak));
  EXPECT_EQ(w.total, 4u);
  EXPECT_EQ(exec("verify " + weak.string()).first, 0);
}

TEST_F(Cli, DualizeUndualizeIsByteIdentical) {
  for (const char* n : {"pair2", "pair3", "disjoint", "z2", "z3", "sweedler"}) {
    const fs::path d = tmp(std::string(n) + ".dual"), back = tmp(std::string(n) + ".back");
    ASSERT_EQ(run({"transform", "dualize", fixture(n).string(), "-o", d.string()}).code, 0) << n;
    ASSERT_EQ(run({"transform", "undualize", d.string(), "-o", back.string()}).code, 0) << n;
    EXPECT_EQ(slurp(back), slurp(fixture(n))) << n;
  }
  EXPECT_EQ(slurp(fixture("z3-dual")), write_document(dualize(fx::group_algebra(3))));
}

TEST_F(Cli, TransformIsDeterministicAndLeavesNoTemporaries) {
  const fs::path a = tmp("a.hcat"), b = tmp("b.hcat");
  ASSERT_EQ(run({"transform", "opposite", fixture("sweedler").string(), "-o", a.string()}).code, 0);
  ASSERT_EQ(run({"transform", "opposite", fixture("sweedler").string(), "-o", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir_)) ++files;
  EXPECT_EQ(files, 2u);
  EXPECT_EQ(std::get<HopfCategory>(load_document(a)), transform(fx::sweedler(), Variance::opposite));
}

TEST_F(Cli, EveryTransformOutputVerifies) {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"pack", "sweedler"},          {"dualize", "pair3"},         {"from-groupoid", "disjoint-groupoid"},
      {"from-graded", "z2-strong-graded"}, {"opposite", "z3"},     {"coopposite", "sweedler"},
      {"bimonoid", "pair2"},         {"unbimonoid", "pair2-bimonoid"}, {"pack-dual", "z3-dual"},
      {"undualize", "z3-dual"},
  };
  for (const auto& [op, input] : cases) {
    const fs::path out = tmp(op + ".hcat");
    ASSERT_EQ(run({"transform", op, fixture(input).string(), "-o", out.string()}).code, 0) << op;
    EXPECT_EQ(run({"verify", "--quiet", out.string()}).code, 0) << op;
  }
}

TEST_F(Cli, BimonoidRoundTripDropsTheAntipode) {
  const fs::path b = tmp("b.hcat"), back = tmp("back.hcat");
  ASSERT_EQ(run({"transform", "bimonoid", fixture("sweedler").string(), "-o", b.string()}).code, 0);
  ASSERT_EQ(run({"transform", "unbimonoid", b.string(), "-o", back.string()}).code, 0);
  EXPECT_EQ(slurp(back), slurp(fixture("sweedler-stripped")));
}

TEST_F(Cli, KindMismatchExitsTwo) {
  EXPECT_EQ(run({"transform", "undualize", fixture("z2").string(), "-o", tmp("x").string()}).code, 2);
  EXPECT_EQ(run({"transform", "from-groupoid", fixture("z2").string(), "-o", tmp("x").string()}).code, 2);
  EXPECT_EQ(run({"transform", "pack", fixture("idempotent").string(), "-o", tmp("x").string()}).code, 2);
  EXPECT_EQ(run({"transform", "rotate", fixture("z2").string(), "-o", tmp("x").string()}).code, 2);
  EXPECT_EQ(run({"analyze", "integrals", fixture("z3-dual").string()}).code, 2);
  EXPECT_FALSE(fs::exists(tmp("x")));
}

TEST_F(Cli, InvalidInputIsNotTransformed) {
  std::string text = slurp(fixture("z2"));
  text.replace(text.find("counit x x 0 1"), 14, "counit x x 0 2");
  const fs::path bad = write("bad.hcat", text);
  EXPECT_EQ(run({"transform", "dualize", bad.string(), "-o", tmp("out").string()}).code, 1);
  EXPECT_FALSE(fs::exists(tmp("out")));
}

TEST_F(Cli, RecoverAntipodeOnStrippedSweedler) {
  const fs::path out = tmp("sweedler.hcat");
  EXPECT_EQ(run({"analyze", "recover-antipode", fixture("sweedler-stripped").string(), "-o", out.string()}).code, 0);
  EXPECT_EQ(slurp(out), slurp(fixture("sweedler")));
}

TEST_F(Cli, RecoverAntipodeFailureIsLocated) {
  const Outcome r = run({"analyze", "recover-antipode", fixture("idempotent").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("blocking x x x"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("rank 3 of 4"), std::string::npos) << r.out;
}

TEST_F(Cli, IntegralsOnZ2HaveOneBasisVector) {
  const Outcome r = run({"analyze", "integrals", fixture("z2").string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("object x dimension 1\nbasis 1 0\n"), std::string::npos) << r.out;
}

TEST_F(Cli, CoinvariantsOfTheDualModuleMatchIntegrals) {
  const Outcome integ = run({"analyze", "integrals", fixture("z3").string()});
  const Outcome co = run({"analyze", "coinvariants", fixture("z3").string()});
  EXPECT_EQ(co.code, 0);
  auto body = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
  EXPECT_EQ(body(integ.out), body(co.out));
  const Outcome mz = run({"analyze", "coinvariants", fixture("sweedler-m0").string()});
  EXPECT_EQ(mz.code, 0);
  EXPECT_NE(mz.out.find("object x dimension 4"), std::string::npos) << mz.out;
}

TEST_F(Cli, CanRanksFlagDeficientTriples) {
  const Outcome bad = run({"analyze", "can-ranks", fixture("idempotent").string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("x x x 4 4 3 no"), std::string::npos) << bad.out;
  const Outcome good = run({"analyze", "can-ranks", fixture("pair3").string()});
  EXPECT_EQ(good.code, 0);
  EXPECT_EQ(good.out.find(" no"), std::string::npos);
}

TEST_F(Cli, Strictness) {
  EXPECT_EQ(run({"analyze", "strictness", fixture("pair3-groupoid").string()}).code, 0);
  EXPECT_EQ(run({"analyze", "strictness", fixture("z2-strong-graded").string()}).code, 0);
  const Outcome zero = run({"analyze", "strictness", fixture("z2-zero-graded").string()});
  EXPECT_EQ(zero.code, 1);
  EXPECT_NE(zero.out.find("strict no"), std::string::npos);
  EXPECT_EQ(run({"verify", "--quiet", "--check", "strictness", fixture("pair2").string()}).code, 0);
}

TEST_F(Cli, ModuleKindsVerify) {
  for (const char* n : {"sweedler-m0", "sweedler-regular-module", "z3-regular-comodule", "pair2-bimonoid",
                        "pair2-groupoid", "z2-zero-graded", "z3-dual"}) {
    EXPECT_EQ(run({"verify", "--quiet", fixture(n).string()}).code, 0) << n;
  }
}

TEST_F(Cli, ExtraChecks) {
  EXPECT_EQ(run({"verify", "--quiet", "--check", "antipode-theorems", "--check", "antipode-bijective", "--check",
                 "fundamental", fixture("sweedler").string()})
                .code,
            0);
  EXPECT_EQ(run({"verify", "--quiet", "--check", "strictness", fixture("z3-dual").string()}).code, 2);
  EXPECT_EQ(run({"verify", "--quiet", "--check", "sparkle", fixture("z3").string()}).code, 2);
}

TEST_F(Cli, ReportAndManifest) {
  const fs::path report = tmp("r.jsonl");
  const Outcome r = run({"--seed", "7", "--report", report.string(), "verify", fixture("sweedler").string()});
  ASSERT_EQ(r.code, 0);
  std::size_t records = 0;
  std::istringstream lines(slurp(report));
  for (std::string l; std::getline(lines, l); ++records) {
    const auto j = nlohmann::json::parse(l);
    EXPECT_TRUE(j.contains("axiom") && j.contains("objects") && j.contains("status") && j.contains("witness"));
  }
  EXPECT_GT(records, 10u);
  const auto m = nlohmann::json::parse(slurp(fs::path(report.string() + ".manifest.json")));
  EXPECT_EQ(m["seed"], 7);
  EXPECT_EQ(m["exit_code"], 0);
  EXPECT_EQ(m["report"], report.string());
  EXPECT_EQ(m["inputs"][0]["sha256"], cli::sha256_hex(write_document(fx::sweedler())));
}

TEST_F(Cli, GlobalFlagsAfterTheSubcommand) {
  const Outcome r = run({"verify", fixture("z3").string(), "--quiet", "--field", "fp:5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"verify", "--field", "fp:3", fixture("z3").string()}).code, 0);
  EXPECT_EQ(run({"verify", "--field", "banana", fixture("z3").string()}).code, 2);
}

TEST(Sha256, KnownVector) {
  EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
