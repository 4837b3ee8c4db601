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
#include "psyn/synth_naive.hpp"

namespace psyn {

enum class Strategy { naive, sets };

struct CompileOptions {
  GadgetForm mode = GadgetForm::ladder;
  unsigned n_qubits = 0;  // 0: derive from the terms
  unsigned repeats = 1;   // Trotter steps; the compiled body is repeated
};

struct CompileReport {
  unsigned n_qubits = 0;
  std::size_t n_terms = 0;  // after fusion and identity filtering
  unsigned cx_count = 0;
  unsigned cx_depth = 0;
  unsigned set_count = 0;
  // CX gates across the diagonalising Cliffords C_i (one side per set; the
  // circuit contains each block twice, as C_i^dag ... C_i).
  unsigned clifford_cx_total = 0;
  double wall_time_ms = 0.0;
  // Accumulated angle of dropped identity terms; the compiled circuit equals
  // the term product up to the scalar exp(-i*global_phase_angle/2).
  double global_phase_angle = 0.0;
};

struct CompileResult {
  Circuit circuit = Circuit(0);
  CompileReport report;
};

/**
 * Merge duplicate strings by summing their (sign-folded) angles and drop
 * all-identity terms, accumulating their angle into *identity_angle if
 * given. Order of first occurrence is kept; exact cancellations stay as
 * zero-angle terms.
 */
std::vector<PauliTerm> fuse_terms(
    const std::vector<PauliTerm> &terms, double *identity_angle = nullptr);

/**
 * The exact term order the compiler uses: fuse, build the anti-commutation
 * graph, greedy-colour it, then flatten colour by colour with each set
 * sorted lexicographically.
 */
std::vector<PauliTerm> sequence_terms(const std::vector<PauliTerm> &terms);

/**
 * Compile a list of Pauli exponential terms to the fixed gate set.
 *
 * naive: sequence, then per-term gadget synthesis.
 * sets:  sequence, then per commuting set: diagonalise with a Clifford C and
 *        synthesise the diagonal interior as a phase polynomial, emitting
 *        C^dag D C.
 *
 * The output is equivalent to the ordered product of the resequenced
 * exponentials, up to global phase.
 */
CompileResult compile(
    const std::vector<PauliTerm> &terms, Strategy strategy,
    const CompileOptions &options = {});

}  // namespace psyn
