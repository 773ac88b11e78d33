#include "zq/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "zq/matrix_io.hpp"

namespace zq {
namespace {

const std::filesystem::path kFixtures = ZQ_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "zq");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return (kFixtures / name).string(); }

TEST(Cli, SynthQubitNot) {
  const auto r = cli({"synth", fx("not.tt"), "--encoding", "qubit"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto m = parse_matrix(r.out);
  ASSERT_TRUE(m.ok()) << r.out;
  EXPECT_EQ(*m.value, (ComplexMatrix{{0, 1}, {1, 0}}));
}

TEST(Cli, SynthDefaultsToQubitAndHandlesIrreversible) {
  const auto r = cli({"synth", fx("missing.tt")});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find("missing.tt:2:1: missing input 1"), std::string::npos) << r.err;
}

TEST(Cli, EnumerateQuquartPrintsFourMatrices) {
  const auto r = cli({"enumerate", fx("not.tt"), "--encoding", "ququart"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("# 4 permutation quantization(s) under ququart\n", 0), 0u) << r.out;
  std::size_t blocks = 0;
  for (std::size_t pos = 0; (pos = r.out.find("\n# ", pos)) != std::string::npos; ++pos) ++blocks;
  EXPECT_EQ(blocks, 4u);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(cli({"verify", fx("cnot.mat"), fx("cnot.tt")}).code, kExitOk);
  EXPECT_EQ(cli({"verify", fx("not4.mat"), fx("not.tt"), "--encoding", "ququart"}).code, kExitOk);
  const auto anti = cli({"verify", fx("antidiag.mat"), fx("not.tt"), "--encoding", "matrix2"});
  EXPECT_EQ(anti.code, kExitDomain);
  EXPECT_NE(anti.out.find("verdict: false"), std::string::npos);
  EXPECT_NE(anti.out.find("logical subspace |0>"), std::string::npos) << anti.out;
  EXPECT_EQ(cli({"verify", fx("malformed.mat"), fx("not.tt")}).code, kExitParse);
  EXPECT_EQ(cli({"verify", fx("cnot.mat"), fx("not.tt")}).code, kExitDomain);  // wrong dimension
  EXPECT_EQ(cli({"verify", fx("absent.mat"), fx("not.tt")}).code, kExitParse);
}

TEST(Cli, RunBell) {
  const auto r = cli({"run", fx("bell.circ"), "--input", "00"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("0 |00> 0.7071067811865475+0i"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("3 |11> 0.5\n"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"run", fx("bell.circ"), "--input", "0"}).code, kExitDomain);
  EXPECT_EQ(cli({"run", fx("bell.circ"), "--input", "0a"}).code, kExitParse);
}

TEST(Cli, Schmidt) {
  const auto r = cli({"schmidt", "--dims", "2,2", fx("psi_plus.mat")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("rank: 2\nclassification: Entangled\n"), std::string::npos) << r.out;
  EXPECT_EQ(cli({"schmidt", "--dims", "2x2", fx("psi_plus.mat")}).code, kExitParse);
  EXPECT_EQ(cli({"schmidt", "--dims", "3,2", fx("psi_plus.mat")}).code, kExitDomain);
}

TEST(Cli, SqrtByNameAndFile) {
  const auto byname = cli({"sqrt", "NOT", "--encoding", "qutrit"});
  EXPECT_EQ(byname.code, kExitOk) << byname.err;
  const auto m = parse_matrix(byname.out);
  ASSERT_TRUE(m.ok());
  EXPECT_EQ(m.value->rows(), 3u);
  EXPECT_EQ(cli({"sqrt", fx("not4.mat")}).code, kExitOk);
  EXPECT_EQ(cli({"sqrt", fx("missing.tt")}).code, kExitParse);
  EXPECT_EQ(cli({"sqrt", "H", "--encoding", "ququart"}).code, kExitDomain);
  EXPECT_EQ(cli({"sqrt", "BOGUS"}).code, kExitParse);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitParse);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(cli({"run", fx("bell.circ")}).code, kExitParse);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST(CliProperty, DeterministicOutput) {
  const std::vector<std::vector<std::string>> cmds{
      {"synth", fx("cnot.tt"), "--encoding", "pauli"},
      {"enumerate", fx("not.tt"), "--encoding", "ququart"},
      {"run", fx("bell.circ"), "--input", "10"},
      {"schmidt", "--dims", "2,2", fx("psi_plus.mat")},
      {"sqrt", "SQRT_NOT"},
      {"verify", fx("antidiag.mat"), fx("not.tt"), "--encoding", "matrix2"}};
  for (const auto& c : cmds) {
    const auto a = cli(c), b = cli(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.err, b.err);
  }
}

}  // namespace
}  // namespace zq
