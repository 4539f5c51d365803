#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "et/tensor.hpp"

namespace et {

using GateMatrix = std::vector<std::vector<FieldElement>>;

GateMatrix mat_identity(const NumberField::Ptr& field, std::size_t dim);
GateMatrix mat_mul(const GateMatrix& a, const GateMatrix& b);
GateMatrix mat_conj_transpose(const GateMatrix& a);
bool mat_eq(const GateMatrix& a, const GateMatrix& b);

/// A k-qubit gate with exact matrix entries, rows and columns indexed by
/// length-k words over {0,1} in lexicographic order. Registration checks
/// unitarity exactly: M Mdagger = I under the field's conjugation.
struct Gate {
  std::string name;
  std::size_t arity = 1;
  GateMatrix matrix;

  static Gate make(std::string name, std::size_t arity, GateMatrix matrix);
};

/// X, Z, S, T, H, CNOT over Q(zeta8): H entries +-(zeta - zeta^3)/2, S and T
/// the diagonal phases zeta^2 and zeta.
const std::vector<Gate>& gate_library();
const Gate& find_gate(const std::string& name);

struct CircuitStep {
  std::string gate;
  std::vector<std::size_t> targets;
  std::size_t line_no = 0;
};

struct Circuit {
  std::size_t qubits = 1;
  std::vector<CircuitStep> steps;

  void validate() const;  // arity, distinctness, range of every step
};

/// One step per line: header `qubits n`, then `h 0`, `cnot 0 1`, ...;
/// comments start with '#'. Errors carry line numbers.
Circuit parse_circuit_text(const std::string& text);
Circuit load_circuit_file(const std::string& path);

BasisWord parse_qubit_word(const std::string& bits);
TensorVector basis_state(const BasisWord& word);

/// Linear extension of the gate over the state's words: each word's targets
/// are looked up as a matrix column and redistributed over the rows.
TensorVector apply_gate(const TensorVector& state, const Gate& gate,
                        const std::vector<std::size_t>& targets);

TensorVector run_circuit(const Circuit& circuit, const BasisWord& initial);

struct MeasurementEntry {
  BasisWord word;
  FieldElement probability;  // a * conj(a), exact
  double approx = 0.0;
};

struct MeasurementReport {
  std::vector<MeasurementEntry> entries;  // word-rank order
  FieldElement total;                     // exact sum, unit for unitary circuits

  std::string str() const;
};

MeasurementReport probabilities(const TensorVector& state);

/// Exact norm <state|state> = sum of a * conj(a).
FieldElement state_norm(const TensorVector& state);

}  // namespace et
