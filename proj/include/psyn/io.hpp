// Copyright 2026 The psyn developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/pauli.hpp"

namespace psyn {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OperatorData {
  unsigned n_qubits = 0;
  std::vector<PauliTerm> terms;
};

/**
 * Load an operator file:
 *
 *   {"n_qubits": 2, "terms": [{"paulis": "ZZ", "coefficient": 0.1}, ...]}
 *
 * Each coefficient c yields a term with angle theta = -2c, so that the term
 * denotes exp(i*c*P). Duplicate strings are fused by summing coefficients.
 * Raises ParseError with context on malformed input.
 */
OperatorData load_operator(const std::string &path);
OperatorData parse_operator(const std::string &text, const std::string &origin);

/** Write an operator file in canonical form: terms sorted by string,
 * duplicates fused, coefficients recovered as -folded_angle/2. */
void save_operator(
    const std::string &path, unsigned n_qubits,
    const std::vector<PauliTerm> &terms);

/** OpenQASM 2.0 text for the circuit. V and Vdg are emitted as rx(pi/2) and
 * rx(-pi/2); Rz angles are printed with 17 significant digits. */
std::string qasm_string(const Circuit &c);
void emit_qasm(const Circuit &c, const std::string &path);

/** Parse the QASM subset produced by qasm_string (for round-trip checks).
 * Raises ParseError with the offending line on anything unrecognised. */
Circuit parse_qasm(const std::string &text);
Circuit read_qasm(const std::string &path);

}  // namespace psyn
