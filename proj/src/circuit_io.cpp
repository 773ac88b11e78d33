#include "zq/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

#include "zq/gates.hpp"
#include "zq/matrix_io.hpp"

namespace zq {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_bits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

std::size_t column_of(const NumberedLine& nl, std::string_view token) {
  return nl.column + static_cast<std::size_t>(token.data() - nl.text.data());
}

constexpr std::size_t kMaxTableArity = 20;
constexpr std::size_t kMaxCircuitWidth = 64;

}  // namespace

// Truth tables

Parsed<ClassicalFunction> parse_truth_table(std::string_view text) {
  Parsed<ClassicalFunction> result;
  auto& diags = result.diagnostics;
  const auto lines = significant_lines(text);
  if (lines.empty()) {
    diags.push_back({1, 1, "empty truth table; expected header 'in <m> out <n>'"});
    return result;
  }

  const auto& header = lines.front();
  const std::string h = strip_spaces(header.text);
  std::optional<std::size_t> m, n;
  if (h.rfind("in", 0) == 0) {
    const auto out_pos = h.find("out", 2);
    if (out_pos != std::string::npos) {
      m = parse_count(std::string_view(h).substr(2, out_pos - 2));
      n = parse_count(std::string_view(h).substr(out_pos + 3));
    }
  }
  if (!m || !n) {
    diags.push_back({header.line, header.column, "expected header 'in <m> out <n>'"});
    return result;
  }
  if (*m == 0 || *n == 0 || *m > kMaxTableArity || *n > kMaxTableArity) {
    diags.push_back({header.line, header.column,
                     "arities must be between 1 and " + std::to_string(kMaxTableArity)});
    return result;
  }

  const std::size_t rows = std::size_t{1} << *m;
  std::vector<std::uint64_t> table(rows, 0);
  std::vector<std::size_t> defined_on(rows, 0);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& nl = lines[k];
    const std::string row = strip_spaces(nl.text);
    const auto arrow = row.find("->");
    if (arrow == std::string::npos) {
      diags.push_back({nl.line, nl.column, "expected '<input bits> -> <output bits>'"});
      continue;
    }
    const std::string_view lhs = std::string_view(row).substr(0, arrow);
    const std::string_view rhs = std::string_view(row).substr(arrow + 2);
    if (lhs.size() != *m || !is_bits(lhs)) {
      diags.push_back({nl.line, nl.column, "input must be " + std::to_string(*m) + " bits, got '" +
                                                std::string(lhs) + "'"});
      continue;
    }
    if (rhs.size() != *n || !is_bits(rhs)) {
      const auto pos = nl.text.find("->");
      diags.push_back({nl.line, nl.column + (pos == std::string_view::npos ? 0 : pos + 2),
                       "output must be " + std::to_string(*n) + " bits, got '" + std::string(rhs) + "'"});
      continue;
    }
    const std::uint64_t x = BitString(lhs).value();
    if (defined_on[x] != 0) {
      diags.push_back({nl.line, nl.column, "duplicate input " + std::string(lhs) + " (first given on line " +
                                                std::to_string(defined_on[x]) + ")"});
      continue;
    }
    defined_on[x] = nl.line;
    table[x] = BitString(rhs).value();
  }

  std::size_t missing = 0;
  for (std::size_t x = 0; x < rows; ++x) {
    if (defined_on[x] != 0) continue;
    if (missing < 8)
      diags.push_back({header.line, header.column, "missing input " + BitString::from_value(x, *m).str()});
    ++missing;
  }
  if (missing > 8)
    diags.push_back({header.line, header.column, "... and " + std::to_string(missing - 8) + " more missing inputs"});

  if (diags.empty()) result.value = ClassicalFunction(*m, *n, std::move(table));
  return result;
}

std::string format_truth_table(const ClassicalFunction& f) {
  std::string out = "in " + std::to_string(f.arity_in()) + " out " + std::to_string(f.arity_out()) + "\n";
  for (std::uint64_t x = 0; x < f.table().size(); ++x)
    out += BitString::from_value(x, f.arity_in()).str() + " -> " +
           BitString::from_value(f(x), f.arity_out()).str() + "\n";
  return out;
}

// Encoding descriptions

Parsed<Encoding> parse_encoding_description(std::string_view text, std::string name) {
  Parsed<Encoding> result;
  auto& diags = result.diagnostics;
  const auto lines = significant_lines(text);
  if (lines.empty()) {
    diags.push_back({1, 1, "empty encoding description; expected 'dim <d>'"});
    return result;
  }
  const auto head = split_whitespace(lines.front().text);
  std::optional<std::size_t> d;
  if (head.size() == 2 && head[0] == "dim") d = parse_count(head[1]);
  if (!d || *d == 0) {
    diags.push_back({lines.front().line, lines.front().column, "expected 'dim <d>' with d >= 1"});
    return result;
  }

  Encoding enc;
  enc.name = std::move(name);
  enc.ambient_dim = *d;
  std::vector<ComplexVector>* section = nullptr;
  std::map<std::string, std::size_t> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    NumberedLine nl = lines[k];
    if (const auto colon = nl.text.find(':'); colon != std::string_view::npos) {
      const std::string label(nl.text.substr(0, colon));
      if (label == "0") section = &enc.basis0;
      else if (label == "1") section = &enc.basis1;
      else if (label == "fixed") section = &enc.fixed_complement;
      else {
        diags.push_back({nl.line, nl.column, "unknown section '" + label + "'; expected 0:, 1: or fixed:"});
        section = nullptr;
        continue;
      }
      if (seen.count(label)) diags.push_back({nl.line, nl.column, "section '" + label + ":' repeated"});
      seen[label] = nl.line;
      std::string_view rest = nl.text.substr(colon + 1);
      const auto lead = rest.find_first_not_of(" \t\r");
      if (lead == std::string_view::npos) continue;
      nl = {nl.line, nl.column + colon + 1 + lead, rest.substr(lead)};
    }
    if (!section) {
      diags.push_back({nl.line, nl.column, "basis vector outside a section"});
      continue;
    }
    const NumberedLine one[] = {nl};
    auto row = parse_matrix_lines(one);
    if (!row.ok()) {
      diags.insert(diags.end(), row.diagnostics.begin(), row.diagnostics.end());
      continue;
    }
    if (row.value->cols() != *d) {
      diags.push_back({nl.line, nl.column, "basis vector has " + std::to_string(row.value->cols()) +
                                               " entries, expected " + std::to_string(*d)});
      continue;
    }
    section->push_back(row.value->row_vector(0));
  }
  if (!diags.empty()) return result;
  try {
    validate_encoding(enc);
  } catch (const ContractViolation& e) {
    diags.push_back({lines.front().line, lines.front().column, e.what()});
    return result;
  }
  result.value = std::move(enc);
  return result;
}

// Circuits

bool CircuitStatement::same_structure(const CircuitStatement& other) const {
  return kind == other.kind && gate == other.gate && param == other.param && path == other.path &&
         targets == other.targets;
}

bool CircuitDocument::same_structure(const CircuitDocument& other) const {
  if (encoding != other.encoding || width != other.width || statements.size() != other.statements.size())
    return false;
  for (std::size_t k = 0; k < statements.size(); ++k)
    if (!statements[k].same_structure(other.statements[k])) return false;
  return true;
}

Parsed<CircuitDocument> parse_circuit(std::string_view text) {
  Parsed<CircuitDocument> result;
  auto& diags = result.diagnostics;
  CircuitDocument doc;
  bool have_encoding = false;
  bool have_width = false;
  bool reported_missing = false;

  for (const auto& nl : significant_lines(text)) {
    const auto tokens = split_whitespace(nl.text);
    const std::string_view head = tokens.front();

    if (head == "encoding" || head == "width") {
      if (!doc.statements.empty()) {
        diags.push_back({nl.line, nl.column, "'" + std::string(head) + "' must precede all gate statements"});
        continue;
      }
      if (tokens.size() != 2) {
        diags.push_back({nl.line, nl.column, "expected '" + std::string(head) + " <value>'"});
        continue;
      }
      const SourcePos pos{nl.line, nl.column};
      if (head == "encoding") {
        if (have_encoding) diags.push_back({nl.line, nl.column, "duplicate 'encoding' header"});
        have_encoding = true;
        doc.encoding = std::string(tokens[1]);
        doc.encoding_pos = pos;
      } else {
        if (have_width) diags.push_back({nl.line, nl.column, "duplicate 'width' header"});
        have_width = true;
        const auto w = parse_count(tokens[1]);
        if (!w || *w == 0 || *w > kMaxCircuitWidth) {
          diags.push_back({nl.line, column_of(nl, tokens[1]),
                           "width must be an integer between 1 and " + std::to_string(kMaxCircuitWidth)});
          continue;
        }
        doc.width = *w;
        doc.width_pos = pos;
      }
      continue;
    }

    if (!have_encoding || !have_width) {
      if (!reported_missing)
        diags.push_back({nl.line, nl.column,
                         std::string("missing '") + (have_encoding ? "width" : "encoding") +
                             "' header before first gate statement"});
      reported_missing = true;
      continue;
    }

    CircuitStatement st;
    st.pos = {nl.line, nl.column};
    const auto bracket = [&](std::string_view prefix) -> std::optional<std::string_view> {
      if (head.size() > prefix.size() + 1 && head.substr(0, prefix.size()) == prefix &&
          head[prefix.size()] == '(' && head.back() == ')')
        return head.substr(prefix.size() + 1, head.size() - prefix.size() - 2);
      return std::nullopt;
    };
    std::size_t arity = 0;
    if (const auto arg = bracket("R")) {
      const auto phi = parse_real(*arg);
      if (!phi) {
        diags.push_back({nl.line, nl.column, "R expects a real phase argument, got '" + std::string(*arg) + "'"});
        continue;
      }
      st.kind = CircuitStatement::Kind::Builtin;
      st.gate = "R";
      st.param = *phi;
      arity = 1;
    } else if (const auto path = bracket("C")) {
      st.kind = CircuitStatement::Kind::Controlled;
      st.path = std::string(*path);
      arity = 2;
    } else if (is_builtin_gate_name(head) && head != "R") {
      st.kind = CircuitStatement::Kind::Builtin;
      st.gate = std::string(head);
      arity = builtin_gate_arity(head);
    } else if (head.find('.') != std::string_view::npos || head.find('/') != std::string_view::npos) {
      st.kind = CircuitStatement::Kind::MatrixFile;
      st.path = std::string(head);
    } else {
      diags.push_back({nl.line, nl.column, "unknown gate '" + std::string(head) + "'"});
      continue;
    }

    bool targets_ok = true;
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto t = parse_count(tokens[k]);
      const std::size_t col = column_of(nl, tokens[k]);
      if (!t) {
        diags.push_back({nl.line, col, "target must be a nonnegative integer, got '" + std::string(tokens[k]) + "'"});
        targets_ok = false;
      } else if (*t >= doc.width) {
        diags.push_back({nl.line, col, "target " + std::to_string(*t) + " out of range for width " +
                                            std::to_string(doc.width)});
        targets_ok = false;
      } else if (std::find(st.targets.begin(), st.targets.end(), *t) != st.targets.end()) {
        diags.push_back({nl.line, col, "target " + std::to_string(*t) + " repeated"});
        targets_ok = false;
      } else {
        st.targets.push_back(*t);
      }
    }
    const std::size_t given = tokens.size() - 1;
    if (given == 0) {
      diags.push_back({nl.line, nl.column, "gate '" + std::string(head) + "' has no targets"});
      continue;
    }
    if (arity != 0 && given != arity) {
      diags.push_back({nl.line, nl.column, "gate '" + std::string(head) + "' expects " + std::to_string(arity) +
                                               " target(s), got " + std::to_string(given)});
      continue;
    }
    if (targets_ok) doc.statements.push_back(std::move(st));
  }

  if ((!have_encoding || !have_width) && !reported_missing) {
    diags.push_back({1, 1, std::string("missing '") + (have_encoding ? "width" : "encoding") + "' header"});
  }
  if (diags.empty()) result.value = std::move(doc);
  return result;
}

std::string format_circuit(const CircuitDocument& doc) {
  std::string out = "encoding " + doc.encoding + "\nwidth " + std::to_string(doc.width) + "\n";
  for (const auto& st : doc.statements) {
    switch (st.kind) {
      case CircuitStatement::Kind::Builtin:
        out += st.gate;
        if (st.param) out += "(" + format_real(*st.param) + ")";
        break;
      case CircuitStatement::Kind::Controlled:
        out += "C(" + st.path + ")";
        break;
      case CircuitStatement::Kind::MatrixFile:
        out += st.path;
        break;
    }
    for (auto t : st.targets) out += " " + std::to_string(t);
    out += "\n";
  }
  return out;
}

namespace {

Parsed<ComplexMatrix> load_matrix(const std::filesystem::path& path) {
  Parsed<ComplexMatrix> out;
  std::string text;
  try {
    text = read_text_file(path.string());
  } catch (const IoError& e) {
    out.diagnostics.push_back({0, 0, e.what()});
    return out;
  }
  return parse_matrix(text);
}

void relay(std::vector<Diagnostic>& into, const SourcePos& at, const std::string& file,
           const std::vector<Diagnostic>& inner) {
  for (const auto& d : inner) {
    const std::string where = d.line == 0 ? file : format_diagnostic(d, file);
    into.push_back({at.line, at.column, d.line == 0 ? d.message : "in " + where});
  }
}

}  // namespace

Parsed<EncodingRef> load_encoding(const std::string& spec, const std::filesystem::path& base_dir) {
  Parsed<EncodingRef> out;
  const auto& names = builtin_encoding_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) {
    out.value = builtin_encoding(spec);
    return out;
  }
  const std::filesystem::path path = base_dir / spec;
  std::string text;
  try {
    text = read_text_file(path.string());
  } catch (const IoError& e) {
    out.diagnostics.push_back({0, 0, std::string("unknown encoding '") + spec + "' (" + e.what() + ")"});
    return out;
  }
  auto parsed = parse_encoding_description(text, spec);
  if (!parsed.ok()) {
    out.diagnostics = std::move(parsed.diagnostics);
    return out;
  }
  out.value = std::make_shared<const Encoding>(std::move(*parsed.value));
  return out;
}

Parsed<Circuit> build_circuit(const CircuitDocument& doc, const std::filesystem::path& base_dir) {
  Parsed<Circuit> result;
  auto& diags = result.diagnostics;
  auto enc = load_encoding(doc.encoding, base_dir);
  if (!enc.ok()) {
    relay(diags, doc.encoding_pos, doc.encoding, enc.diagnostics);
    return result;
  }
  std::optional<Circuit> circuit;
  try {
    circuit.emplace(*enc.value, doc.width);
  } catch (const std::exception& e) {
    diags.push_back({doc.width_pos.line, doc.width_pos.column, e.what()});
    return result;
  }

  for (const auto& st : doc.statements) {
    try {
      CircuitStep step;
      step.targets = st.targets;
      switch (st.kind) {
        case CircuitStatement::Kind::Builtin: {
          step.gate = resolve_builtin_gate(st.gate, st.param, *enc.value).matrix;
          step.label = st.gate;
          break;
        }
        case CircuitStatement::Kind::Controlled: {
          auto m = load_matrix(base_dir / st.path);
          if (!m.ok()) {
            relay(diags, st.pos, st.path, m.diagnostics);
            continue;
          }
          if ((*enc.value)->name != "qubit")
            throw ContractViolation("C(...) is only defined for the qubit encoding");
          step.gate = controlled(*m.value);
          step.label = "C(" + st.path + ")";
          break;
        }
        case CircuitStatement::Kind::MatrixFile: {
          auto m = load_matrix(base_dir / st.path);
          if (!m.ok()) {
            relay(diags, st.pos, st.path, m.diagnostics);
            continue;
          }
          if (!m.value->square() || !is_unitary(*m.value, 1e-9))
            throw ContractViolation("matrix in '" + st.path + "' is not unitary");
          step.gate = std::move(*m.value);
          step.label = st.path;
          break;
        }
      }
      circuit->add(std::move(step));
    } catch (const std::exception& e) {
      diags.push_back({st.pos.line, st.pos.column, e.what()});
    }
  }
  if (diags.empty()) result.value = std::move(*circuit);
  return result;
}

}  // namespace zq
