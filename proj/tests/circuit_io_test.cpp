#include "zq/circuit_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

namespace zq {
namespace {

namespace golden = testing::golden;

const std::filesystem::path kFixtures = ZQ_FIXTURE_DIR;

bool mentions(const std::vector<Diagnostic>& ds, std::string_view text) {
  for (const auto& d : ds)
    if (d.message.find(text) != std::string::npos) return true;
  return false;
}

TEST(ParseTruthTable, Not) {
  const auto p = parse_truth_table("in 1 out 1\n0 -> 1\n1 -> 0");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(*p.value, ClassicalFunction::negation());
}

TEST(ParseTruthTable, ConditionalNot) {
  const auto p = parse_truth_table("in 2 out 2\n00 -> 00\n01 -> 01\n10 -> 11\n11 -> 10");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(*p.value, ClassicalFunction::conditional_not());
}

TEST(ParseTruthTable, WhitespaceInsensitive) {
  const auto p = parse_truth_table("  in 1   out 1 \n 0->1\n1  ->   0 # note\n");
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(*p.value, ClassicalFunction::negation());
}

TEST(ParseTruthTable, MissingInput) {
  const auto p = parse_truth_table("in 1 out 1\n0 -> 1");
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics.size(), 1u);
  EXPECT_EQ(p.diagnostics[0].line, 1u);
  EXPECT_NE(p.diagnostics[0].message.find("missing input 1"), std::string::npos);
}

TEST(ParseTruthTable, DuplicateAndWidthErrors) {
  const auto dup = parse_truth_table("in 1 out 1\n0 -> 1\n1 -> 0\n0 -> 0\n");
  ASSERT_FALSE(dup.ok());
  EXPECT_EQ(dup.diagnostics[0].line, 4u);
  EXPECT_TRUE(mentions(dup.diagnostics, "line 2"));

  const auto wide = parse_truth_table("in 1 out 1\n0 -> 10\n1 -> 0\n");
  ASSERT_FALSE(wide.ok());
  EXPECT_EQ(wide.diagnostics[0].line, 2u);

  const auto header = parse_truth_table("inputs 1\n0 -> 1\n");
  ASSERT_FALSE(header.ok());
  EXPECT_EQ(header.diagnostics[0].line, 1u);
}

TEST(TruthTableProperty, FormatParseRoundTrip) {
  std::mt19937_64 rng(601);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t m = 1 + trial % 4, n = 1 + trial % 3;
    std::vector<std::uint64_t> t(std::size_t{1} << m);
    for (auto& y : t) y = rng() % (1u << n);
    const ClassicalFunction f(m, n, t);
    const auto back = parse_truth_table(format_truth_table(f));
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back.value, f);
  }
}

TEST(ParseEncodingDescription, QutritEquivalent) {
  const auto p = parse_encoding_description("dim 3\n0:\n1 0 0\n1:\n0 0 1\nfixed:\n0 1 0\n", "mine");
  ASSERT_TRUE(p.ok());
  const auto& e = *p.value;
  EXPECT_EQ(e.name, "mine");
  const auto builtin = builtin_encoding("qutrit");
  EXPECT_EQ(e.basis0, builtin->basis0);
  EXPECT_EQ(e.basis1, builtin->basis1);
  EXPECT_EQ(e.fixed_complement, builtin->fixed_complement);
}

TEST(ParseEncodingDescription, RejectedMappingIsDiagnosed) {
  // 0 -> span{e1, e2}, 1 -> e3: unequal subspace dimensions.
  const auto p = parse_encoding_description("dim 3\n0:\n1 0 0\n0 1 0\n1:\n0 0 1\n", "bad");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.diagnostics[0].line, 1u);
}

TEST(ParseEncodingDescription, EntryCountMismatch) {
  const auto p = parse_encoding_description("dim 2\n0:\n1 0 0\n1:\n0 1\n", "bad");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.diagnostics[0].line, 3u);
}

TEST(ParseCircuit, Bell) {
  const auto p = parse_circuit("encoding qubit\nwidth 2\nH 0\nCNOT 0 1");
  ASSERT_TRUE(p.ok());
  const auto& doc = *p.value;
  EXPECT_EQ(doc.encoding, "qubit");
  EXPECT_EQ(doc.width, 2u);
  ASSERT_EQ(doc.statements.size(), 2u);
  EXPECT_EQ(doc.statements[0].gate, "H");
  EXPECT_EQ(doc.statements[1].targets, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(doc.statements[1].pos.line, 4u);
}

TEST(ParseCircuit, QuquartNotBuildsNot4) {
  const auto p = parse_circuit("encoding ququart\nwidth 1\nNOT 0");
  ASSERT_TRUE(p.ok());
  const auto c = build_circuit(*p.value, ".");
  ASSERT_TRUE(c.ok());
  ASSERT_EQ(c.value->steps().size(), 1u);
  EXPECT_TRUE(testing::all_exact(std::get<ComplexMatrix>(c.value->steps()[0].gate), golden::not4()));
}

TEST(ParseCircuit, MissingHeader) {
  const auto p = parse_circuit("H 0");
  ASSERT_FALSE(p.ok());
  ASSERT_EQ(p.diagnostics.size(), 1u);
  EXPECT_EQ(p.diagnostics[0].line, 1u);
}

TEST(ParseCircuit, StatementDiagnostics) {
  const auto p = parse_circuit(
      "encoding qubit\n"
      "width 2\n"
      "FOO 0\n"
      "CNOT 0\n"
      "NOT 2\n"
      "CNOT 1 1\n"
      "R(abc) 0\n"
      "NOT x\n");
  ASSERT_FALSE(p.ok());
  std::vector<std::size_t> lines;
  for (const auto& d : p.diagnostics) lines.push_back(d.line);
  EXPECT_EQ(lines, (std::vector<std::size_t>{3, 4, 5, 6, 7, 8}));
  EXPECT_TRUE(mentions(p.diagnostics, "unknown gate 'FOO'"));
  EXPECT_TRUE(mentions(p.diagnostics, "expects 2 target(s), got 1"));
  EXPECT_TRUE(mentions(p.diagnostics, "out of range"));
  EXPECT_TRUE(mentions(p.diagnostics, "repeated"));
  // The target diagnostic points at the offending token.
  EXPECT_EQ(p.diagnostics[2].column, 5u);
}

TEST(ParseCircuit, HeadersMustComeFirst) {
  const auto p = parse_circuit("encoding qubit\nwidth 1\nNOT 0\nwidth 2\n");
  ASSERT_FALSE(p.ok());
  EXPECT_EQ(p.diagnostics[0].line, 4u);
}

TEST(ParseCircuit, EveryGateForm) {
  const auto p = parse_circuit(
      "encoding qubit\nwidth 3\nNOT 0\nSQRT_NOT 1\nH 2\nR(1.5707963267948966) 0\nCNOT 0 1\nSWAP 1 2\n"
      "C(gates/u.mat) 2 0\ngates/big.mat 0 1 2\n");
  ASSERT_TRUE(p.ok());
  const auto& st = p.value->statements;
  ASSERT_EQ(st.size(), 8u);
  EXPECT_EQ(st[3].gate, "R");
  EXPECT_DOUBLE_EQ(*st[3].param, 1.5707963267948966);
  EXPECT_EQ(st[6].kind, CircuitStatement::Kind::Controlled);
  EXPECT_EQ(st[6].path, "gates/u.mat");
  EXPECT_EQ(st[7].kind, CircuitStatement::Kind::MatrixFile);
  EXPECT_EQ(st[7].targets.size(), 3u);
}

TEST(CircuitProperty, FormatParseRoundTrip) {
  std::mt19937_64 rng(602);
  const std::vector<std::string> one{"NOT", "SQRT_NOT", "H"};
  for (int trial = 0; trial < 50; ++trial) {
    CircuitDocument doc;
    doc.encoding = trial % 2 ? "qubit" : "enc/custom.enc";
    doc.width = 2 + rng() % 4;
    for (int k = 0; k < 8; ++k) {
      CircuitStatement st;
      switch (rng() % 5) {
        case 0:
          st.gate = one[rng() % one.size()];
          st.targets = {rng() % doc.width};
          break;
        case 1:
          st.gate = "R";
          st.param = std::ldexp(static_cast<double>(rng() % 100000), -10) - 3.0;
          st.targets = {rng() % doc.width};
          break;
        case 2:
          st.gate = rng() % 2 ? "CNOT" : "SWAP";
          st.targets = {0, doc.width - 1};
          break;
        case 3:
          st.kind = CircuitStatement::Kind::Controlled;
          st.path = "u" + std::to_string(k) + ".mat";
          st.targets = {doc.width - 1, 0};
          break;
        default:
          st.kind = CircuitStatement::Kind::MatrixFile;
          st.path = "dir/g" + std::to_string(k) + ".mat";
          st.targets = {1};
          break;
      }
      doc.statements.push_back(st);
    }
    const auto back = parse_circuit(format_circuit(doc));
    ASSERT_TRUE(back.ok()) << format_circuit(doc);
    EXPECT_TRUE(back.value->same_structure(doc));
    EXPECT_EQ(format_circuit(*back.value), format_circuit(doc));
  }
}

TEST(DiagnosticsProperty, AlwaysCarryALineNumber) {
  const std::vector<std::string> broken{"",
                                        "width 2",
                                        "encoding qubit",
                                        "encoding qubit\nwidth 0\n",
                                        "encoding qubit\nwidth 2\nCNOT 0 5\n",
                                        "encoding qubit\nwidth two\n",
                                        "encoding\nwidth 1\n",
                                        "encoding qubit\nwidth 1\nR 0\n"};
  for (const auto& text : broken) {
    const auto p = parse_circuit(text);
    ASSERT_FALSE(p.ok()) << text;
    for (const auto& d : p.diagnostics) EXPECT_GE(d.line, 1u) << text << ": " << d.message;
  }
  for (const std::string text : {"", "in 1 out 1\n", "in 1 out 1\n0 -> x\n1 -> 0\n", "in 0 out 1\n"}) {
    const auto p = parse_truth_table(text);
    ASSERT_FALSE(p.ok()) << text;
    for (const auto& d : p.diagnostics) EXPECT_GE(d.line, 1u) << text;
  }
}

TEST(BuildCircuit, FixtureBell) {
  const auto doc = parse_circuit(read_text_file((kFixtures / "bell.circ").string()));
  ASSERT_TRUE(doc.ok());
  const auto c = build_circuit(*doc.value, kFixtures);
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c.value->steps().size(), 2u);
}

TEST(BuildCircuit, ResolutionErrorsAnchorAtStatement) {
  const auto doc = parse_circuit("encoding qutrit\nwidth 1\nH 0\nmissing.mat 0\n");
  ASSERT_TRUE(doc.ok());
  const auto c = build_circuit(*doc.value, kFixtures);
  ASSERT_FALSE(c.ok());
  ASSERT_EQ(c.diagnostics.size(), 2u);
  EXPECT_EQ(c.diagnostics[0].line, 3u);
  EXPECT_EQ(c.diagnostics[1].line, 4u);
}

TEST(BuildCircuit, MatrixFileAndControlled) {
  const auto doc = parse_circuit("encoding qubit\nwidth 2\ncnot.mat 1 0\nC(malformed.mat) 0 1\n");
  ASSERT_TRUE(doc.ok());
  const auto c = build_circuit(*doc.value, kFixtures);
  ASSERT_FALSE(c.ok());
  ASSERT_EQ(c.diagnostics.size(), 1u);
  EXPECT_EQ(c.diagnostics[0].line, 4u);
  EXPECT_NE(c.diagnostics[0].message.find("malformed.mat:2:"), std::string::npos) << c.diagnostics[0].message;
}

TEST(LoadEncoding, BuiltinAndUnknown) {
  EXPECT_TRUE(load_encoding("pauli", ".").ok());
  EXPECT_FALSE(load_encoding("no_such_encoding", kFixtures).ok());
}

}  // namespace
}  // namespace zq
