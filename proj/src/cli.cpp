#include "zq/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <ostream>
#include <sstream>

#include "zq/circuit_io.hpp"
#include "zq/entanglement.hpp"
#include "zq/gates.hpp"
#include "zq/matrix_io.hpp"
#include "zq/simulator.hpp"
#include "zq/synthesis.hpp"

namespace zq {

namespace {

namespace fs = std::filesystem;

// Content of an input file failed to parse.
struct ParseFailure {
  std::string source;
  std::vector<Diagnostic> diagnostics;
};

template <typename T>
T unwrap(Parsed<T> parsed, const std::string& source) {
  if (!parsed.ok()) throw ParseFailure{source, std::move(parsed.diagnostics)};
  return std::move(*parsed.value);
}

ComplexMatrix read_matrix(const std::string& path) { return unwrap(parse_matrix(read_text_file(path)), path); }

ClassicalFunction read_table(const std::string& path) {
  return unwrap(parse_truth_table(read_text_file(path)), path);
}

EncodingRef read_encoding(const std::string& spec) {
  auto parsed = load_encoding(spec, fs::current_path());
  if (!parsed.ok()) {
    for (auto& d : parsed.diagnostics)
      if (d.line == 0) d = {1, 1, d.message};
    throw ParseFailure{spec, std::move(parsed.diagnostics)};
  }
  return *parsed.value;
}

std::string permutation_of(const ComplexMatrix& p) {
  std::string out = "(";
  for (std::size_t j = 0; j < p.cols(); ++j) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      if (p(i, j) == Complex(1.0)) out += (j ? " " : "") + std::to_string(i);
  }
  return out + ")";
}

// Gate token as accepted in circuits: NOT, SQRT_NOT, H, CNOT, SWAP, R(<phi>).
ComplexMatrix named_gate(const std::string& token, const EncodingRef& enc) {
  if (token.size() > 3 && token.rfind("R(", 0) == 0 && token.back() == ')') {
    const auto phi = parse_real(std::string_view(token).substr(2, token.size() - 3));
    if (!phi) throw ParseFailure{token, {{1, 3, "R expects a real phase argument"}}};
    return resolve_builtin_gate("R", *phi, enc).matrix;
  }
  if (!is_builtin_gate_name(token) || token == "R")
    throw ParseFailure{token, {{1, 1, "neither a readable matrix file nor a known gate name"}}};
  return resolve_builtin_gate(token, std::nullopt, enc).matrix;
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& dims) {
  const auto comma = dims.find(',');
  std::size_t a = 0, b = 0;
  std::istringstream lhs(dims.substr(0, comma));
  std::istringstream rhs(comma == std::string::npos ? "" : dims.substr(comma + 1));
  if (comma == std::string::npos || !(lhs >> a) || !(rhs >> b) || a == 0 || b == 0 || !lhs.eof() || !rhs.eof())
    throw ParseFailure{"--dims", {{1, 1, "expected --dims A,B with positive integers, got '" + dims + "'"}}};
  return {a, b};
}

int cmd_synth(const std::string& table_path, const std::string& enc_spec, std::ostream& out) {
  const auto f = read_table(table_path);
  const auto enc = read_encoding(enc_spec);
  const SynthesizedGate g = f.reversible() ? quantize_reversible(f, enc) : quantize_irreversible(f, enc);
  out << "# " << enc->name << ", " << (g.rule == SynthesisRule::Reversible ? "reversible" : "irreversible")
      << ", " << g.subsystem_count << " subsystem(s)\n";
  out << format_matrix(g.matrix);
  return kExitOk;
}

int cmd_sqrt(const std::string& what, const std::string& enc_spec, std::ostream& out) {
  const ComplexMatrix u =
      fs::is_regular_file(what) ? read_matrix(what) : named_gate(what, read_encoding(enc_spec));
  out << format_matrix(principal_unitary_sqrt(u));
  return kExitOk;
}

int cmd_run(const std::string& circuit_path, const std::string& input, std::ostream& out) {
  const auto doc = unwrap(parse_circuit(read_text_file(circuit_path)), circuit_path);
  const auto circuit = unwrap(build_circuit(doc, fs::path(circuit_path).parent_path()), circuit_path);
  if (input.empty() || input.find_first_not_of("01") != std::string::npos)
    throw ParseFailure{"--input", {{1, 1, "expected a bit string, got '" + input + "'"}}};
  const QuantumState s = run_circuit(circuit, BitString(input));
  const std::size_t d = circuit.encoding().ambient_dim;
  out << "# encoding " << circuit.encoding().name << ", width " << circuit.width() << ", input " << input << "\n";
  out << "amplitudes:\n";
  for (std::size_t i = 0; i < s.amplitudes().dim(); ++i)
    out << i << ' ' << basis_label(i, d, circuit.width()) << ' ' << format_complex(s.amplitudes()[i]) << '\n';
  out << "probabilities:\n";
  for (const auto& p : basis_probabilities(s))
    out << p.index << ' ' << basis_label(p.index, d, circuit.width()) << ' ' << format_real(p.probability) << '\n';
  return kExitOk;
}

int cmd_schmidt(const std::string& dims, const std::string& state_path, std::ostream& out) {
  const auto [a, b] = parse_dims(dims);
  const ComplexMatrix m = read_matrix(state_path);
  const SchmidtResult r = schmidt(res(m), a, b);
  out << "coefficients:";
  for (double c : r.coefficients) out << ' ' << format_real(c);
  out << "\nrank: " << r.rank << "\nclassification: "
      << to_string(r.rank == 1 ? Bipartite::Separable : Bipartite::Entangled) << '\n';
  return kExitOk;
}

int cmd_enumerate(const std::string& table_path, const std::string& enc_spec, std::ostream& out) {
  const auto f = read_table(table_path);
  const auto enc = read_encoding(enc_spec);
  const auto found = enumerate_permutation_quantizations(f, enc);
  out << "# " << found.size() << " permutation quantization(s) under " << enc->name << "\n";
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (k) out << '\n';
    out << "# " << (k + 1) << ": " << permutation_of(found[k]) << '\n' << format_matrix(found[k]);
  }
  return kExitOk;
}

int cmd_verify(const std::string& matrix_path, const std::string& table_path, const std::string& enc_spec,
               std::ostream& out) {
  const auto u = read_matrix(matrix_path);
  const auto f = read_table(table_path);
  const auto enc = read_encoding(enc_spec);
  const auto report = check_quantization(u, f, *enc, 1e-9);
  out << "verdict: " << (report.ok() ? "true" : "false") << '\n';
  out << "unitary: " << (report.unitary ? "true" : "false") << '\n';
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  return report.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encode classical bits and functions into quantum states and gates"};
  app.require_subcommand(1);
  app.footer(
      "Gate names: NOT SQRT_NOT CNOT SWAP (any encoding), H R(<phi>) (qubit only).\n"
      "H uses the unitary 1/sqrt(2) normalization; a 1/2 prefactor would not be unitary.\n"
      "Encodings: qubit qutrit ququart matrix2 pauli, or an encoding description file.\n"
      "Exit codes: 0 ok, 1 domain error or false verdict, 2 usage/parse error.");

  std::string table, encoding = "qubit", matrix, target, input, dims, state, circuit;

  auto* synth = app.add_subcommand("synth", "Print the unitary quantizing a truth table");
  synth->add_option("table", table, "Truth-table file")->required();
  synth->add_option("--encoding", encoding, "Encoding name or file");

  auto* sqrt = app.add_subcommand("sqrt", "Print the principal square root of a unitary");
  sqrt->add_option("gate", target, "Matrix file or gate name")->required();
  sqrt->add_option("--encoding", encoding, "Encoding used to synthesize named gates");

  auto* run = app.add_subcommand("run", "Run a circuit on a classical input");
  run->add_option("circuit", circuit, "Circuit file")->required();
  run->add_option("--input", input, "Input bit string")->required();

  auto* sch = app.add_subcommand("schmidt", "Schmidt decomposition of a bipartite state");
  sch->add_option("--dims", dims, "Subsystem dimensions A,B")->required();
  sch->add_option("state", state, "State file (matrix text, read row-major)")->required();

  auto* en = app.add_subcommand("enumerate", "List all permutation matrices quantizing a table");
  en->add_option("table", table, "Truth-table file")->required();
  en->add_option("--encoding", encoding, "Encoding name or file");

  auto* ver = app.add_subcommand("verify", "Check whether a matrix quantizes a table");
  ver->add_option("matrix", matrix, "Matrix file")->required();
  ver->add_option("table", table, "Truth-table file")->required();
  ver->add_option("--encoding", encoding, "Encoding name or file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*synth) return cmd_synth(table, encoding, out);
    if (*sqrt) return cmd_sqrt(target, encoding, out);
    if (*run) return cmd_run(circuit, input, out);
    if (*sch) return cmd_schmidt(dims, state, out);
    if (*en) return cmd_enumerate(table, encoding, out);
    if (*ver) return cmd_verify(matrix, table, encoding, out);
  } catch (const ParseFailure& p) {
    for (const auto& d : p.diagnostics) err << format_diagnostic(d, p.source) << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitParse;
}

}  // namespace zq
