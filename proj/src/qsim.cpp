#include "et/qsim.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "et/registry.hpp"

namespace et {

GateMatrix mat_identity(const NumberField::Ptr& field, std::size_t dim) {
  GateMatrix m(dim, std::vector<FieldElement>(dim, field->zero()));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = field->one();
  return m;
}

GateMatrix mat_mul(const GateMatrix& a, const GateMatrix& b) {
  std::size_t n = a.size();
  const NumberField::Ptr& field = a[0][0].field();
  GateMatrix out(n, std::vector<FieldElement>(n, field->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = nf_add(out[i][j], nf_mul(a[i][k], b[k][j]));
      }
    }
  return out;
}

GateMatrix mat_conj_transpose(const GateMatrix& a) {
  std::size_t n = a.size();
  GateMatrix out(n, std::vector<FieldElement>(n, a[0][0].field()->zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j][i] = nf_conj(a[i][j]);
  return out;
}

bool mat_eq(const GateMatrix& a, const GateMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!nf_eq(a[i][j], b[i][j])) return false;
  return true;
}

Gate Gate::make(std::string name, std::size_t arity, GateMatrix matrix) {
  std::size_t dim = std::size_t{1} << arity;
  if (matrix.size() != dim) throw Error("gate '" + name + "': expected 2^k rows");
  for (const auto& row : matrix)
    if (row.size() != dim) throw Error("gate '" + name + "': ragged matrix");
  const NumberField::Ptr& field = matrix[0][0].field();
  if (!field->has_conjugation())
    throw Error("gate '" + name + "': field lacks a conjugation, unitarity is unverifiable");
  if (!mat_eq(mat_mul(matrix, mat_conj_transpose(matrix)), mat_identity(field, dim)))
    throw Error("gate '" + name + "' is not unitary over " + field->name());
  Gate gate;
  gate.name = std::move(name);
  gate.arity = arity;
  gate.matrix = std::move(matrix);
  return gate;
}

const std::vector<Gate>& gate_library() {
  static const std::vector<Gate> library = [] {
    NumberField::Ptr f = zeta8_field();
    auto r = [&](long long num, long long den = 1) { return Rational(Natural(num), Natural(den)); };
    FieldElement zero = f->zero(), one = f->one();
    FieldElement minus_one = f->from_rational(r(-1));
    FieldElement zeta = f->basis_element(1);                       // zeta8
    FieldElement i_unit = f->basis_element(2);                     // zeta8^2
    FieldElement inv_sqrt2 = f->element({r(0), r(1, 2), r(0), r(-1, 2)});  // (zeta-zeta^3)/2
    std::vector<Gate> gates;
    gates.push_back(Gate::make("X", 1, {{zero, one}, {one, zero}}));
    gates.push_back(Gate::make("Z", 1, {{one, zero}, {zero, minus_one}}));
    gates.push_back(Gate::make("S", 1, {{one, zero}, {zero, i_unit}}));
    gates.push_back(Gate::make("T", 1, {{one, zero}, {zero, zeta}}));
    gates.push_back(
        Gate::make("H", 1, {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, nf_neg(inv_sqrt2)}}));
    gates.push_back(Gate::make("CNOT", 2,
                               {{one, zero, zero, zero},
                                {zero, one, zero, zero},
                                {zero, zero, zero, one},
                                {zero, zero, one, zero}}));
    return gates;
  }();
  return library;
}

const Gate& find_gate(const std::string& name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const Gate& g : gate_library())
    if (g.name == upper) return g;
  throw Error("unknown gate '" + name + "'");
}

void Circuit::validate() const {
  if (qubits < 1) throw Error("circuit needs at least one qubit");
  for (const auto& step : steps) {
    const Gate& gate = find_gate(step.gate);
    std::string where =
        step.line_no ? " (line " + std::to_string(step.line_no) + ")" : "";
    if (step.targets.size() != gate.arity)
      throw Error("gate '" + step.gate + "' expects " + std::to_string(gate.arity) +
                  " target(s)" + where);
    for (std::size_t t : step.targets)
      if (t >= qubits)
        throw Error("target " + std::to_string(t) + " out of range" + where);
    for (std::size_t i = 0; i < step.targets.size(); ++i)
      for (std::size_t j = i + 1; j < step.targets.size(); ++j)
        if (step.targets[i] == step.targets[j])
          throw Error("repeated target " + std::to_string(step.targets[i]) + where);
  }
}

Circuit parse_circuit_text(const std::string& text) {
  Circuit circuit;
  bool have_header = false;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "qubits") {
      long long n = 0;
      if (!(ls >> n) || n < 1) throw ParseError("qubits expects a count >= 1", line_no);
      circuit.qubits = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("missing 'qubits <n>' header", line_no);
    CircuitStep step;
    step.gate = head;
    step.line_no = line_no;
    long long t;
    while (ls >> t) {
      if (t < 0) throw ParseError("negative target", line_no);
      step.targets.push_back(static_cast<std::size_t>(t));
    }
    if (!ls.eof()) throw ParseError("malformed gate line", line_no);
    try {
      find_gate(step.gate);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
    circuit.steps.push_back(std::move(step));
  }
  if (!have_header) throw ParseError("missing 'qubits <n>' header");
  circuit.validate();
  return circuit;
}

Circuit load_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open circuit file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit_text(buffer.str());
}

BasisWord parse_qubit_word(const std::string& bits) {
  std::vector<std::uint32_t> letters;
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("qubit word must be over {0,1}");
    letters.push_back(c == '1' ? 1 : 0);
  }
  return BasisWord(qubit_alphabet(), std::move(letters));
}

TensorVector basis_state(const BasisWord& word) {
  return TensorVector::basis(word, zeta8_field());
}

TensorVector apply_gate(const TensorVector& state, const Gate& gate,
                        const std::vector<std::size_t>& targets) {
  if (targets.size() != gate.arity)
    throw Error("gate '" + gate.name + "' expects " + std::to_string(gate.arity) + " target(s)");
  TensorVector out(state.alphabet(), state.field());
  std::size_t k = gate.arity;
  std::size_t dim = std::size_t{1} << k;
  for (const auto& [word, coeff] : state.terms()) {
    const auto& letters = word.letters();
    for (std::size_t t : targets)
      if (t >= letters.size())
        throw Error("target " + std::to_string(t) + " exceeds word length " +
                    std::to_string(letters.size()));
    std::size_t column = 0;
    for (std::size_t j = 0; j < k; ++j) column = column * 2 + letters[targets[j]];
    for (std::size_t row = 0; row < dim; ++row) {
      const FieldElement& entry = gate.matrix[row][column];
      if (entry.is_zero()) continue;
      std::vector<std::uint32_t> new_letters = letters;
      for (std::size_t j = 0; j < k; ++j)
        new_letters[targets[j]] = static_cast<std::uint32_t>((row >> (k - 1 - j)) & 1);
      out.accumulate(BasisWord(state.alphabet(), std::move(new_letters)),
                     nf_mul(coeff, entry));
    }
  }
  return out;
}

TensorVector run_circuit(const Circuit& circuit, const BasisWord& initial) {
  circuit.validate();
  if (initial.length() != circuit.qubits)
    throw Error("initial word length " + std::to_string(initial.length()) +
                " does not match qubit count " + std::to_string(circuit.qubits));
  TensorVector state = basis_state(initial);
  for (const auto& step : circuit.steps)
    state = apply_gate(state, find_gate(step.gate), step.targets);
  return state;
}

FieldElement state_norm(const TensorVector& state) {
  FieldElement total = state.field()->zero();
  for (const auto& [word, coeff] : state.terms())
    total = nf_add(total, nf_mul(coeff, nf_conj(coeff)));
  return total;
}

MeasurementReport probabilities(const TensorVector& state) {
  if (!state.field()->has_conjugation())
    throw Error("probabilities need a field with a conjugation table");
  MeasurementReport report;
  report.total = state.field()->zero();
  for (const auto& [word, coeff] : state.terms()) {
    MeasurementEntry entry{word, nf_mul(coeff, nf_conj(coeff)), 0.0};
    entry.approx = entry.probability.embed().real();
    report.total = nf_add(report.total, entry.probability);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string MeasurementReport::str() const {
  std::ostringstream os;
  for (const auto& entry : entries) {
    os << entry.word.str() << "  " << entry.probability << "  ~ " << entry.approx << "\n";
  }
  os << "total " << total;
  return os.str();
}

}  // namespace et
