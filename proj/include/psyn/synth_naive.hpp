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

#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/pauli.hpp"

namespace psyn {

/** CX arrangement for phase gadget construction. The ladder is fully
 * serial (CX depth 2(k-1)); the balanced tree has CX depth 2*ceil(log2 k). */
enum class GadgetForm { ladder, tree };

/**
 * Circuit for exp(-i*theta/2 * Z x ... x Z) over the given qubits (identity
 * elsewhere), on a circuit of n_qubits wires. Uses 2(k-1) CX gates for k
 * qubits with Rz placed on the last qubit in the list. Throws
 * std::invalid_argument on an empty or repeated qubit list.
 */
Circuit synth_phase_gadget(
    unsigned n_qubits, const std::vector<unsigned> &qubits, double theta,
    GadgetForm mode);

/**
 * Circuit for exp(-i*s*theta/2 * P): the phase gadget over P's support,
 * conjugated into the right bases (H...H for X letters, V...Vdg for Y).
 * Throws std::invalid_argument on an all-identity string.
 */
Circuit synth_pauli_gadget(const PauliTerm &t, GadgetForm mode);

/** Concatenation of per-term gadget circuits in sequence order;
 * cx_count = sum_i 2*(weight_i - 1). */
Circuit synth_naive(
    unsigned n_qubits, const std::vector<PauliTerm> &seq, GadgetForm mode);

}  // namespace psyn
