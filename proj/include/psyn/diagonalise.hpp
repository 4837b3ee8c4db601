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

#include <optional>
#include <utility>
#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/pauli.hpp"

namespace psyn {

/**
 * Result of simultaneously diagonalising a commuting set S: a Clifford
 * circuit C and diagonal terms S' with S = C S' C^dag. Every letter of every
 * diagonal term is I or Z, and conjugation signs are folded into the angles
 * (all signs +1).
 */
struct DiagonalisationResult {
  Circuit clifford = Circuit(0);
  std::vector<PauliTerm> diagonal_terms;
  unsigned greedy_steps = 0;
};

/**
 * Find a qubit in the live set where every term carries only I or one common
 * non-identity letter P. All-identity qubits qualify with P = Z. Returns the
 * lowest-index such qubit, or nullopt.
 */
std::optional<std::pair<unsigned, Pauli>> find_trivial_qubit(
    const std::vector<PauliTerm> &terms, const std::vector<unsigned> &live);

struct CompatiblePair {
  unsigned i;
  unsigned j;  // the qubit that conjugation will diagonalise
  Pauli a;
  Pauli b;
};

/**
 * Search live qubit pairs for letters A, B with
 *
 *   for all terms l:  letter(i,l) in {I,A}  <=>  letter(j,l) in {I,B}.
 *
 * Trivially-diagonalisable qubits (including all-identity ones, which would
 * satisfy the relation vacuously against anything) are excluded from the
 * search; they belong to find_trivial_qubit. Ordered pairs (i,j) are scanned
 * lexicographically, then (A,B) in X,Y,Z order; first match wins.
 */
std::optional<CompatiblePair> find_compatible_pair(
    const std::vector<PauliTerm> &terms, const std::vector<unsigned> &live);

/**
 * Conjugate the set so that qubit j becomes diagonal: basis changes taking
 * A -> Z on qubit i and B -> Z on qubit j, then CX(i,j). Mutates the terms
 * and returns the applied gates in application order. Throws
 * std::invalid_argument if (i,j,A,B) does not satisfy the compatibility
 * relation.
 */
std::vector<Gate> diagonalise_pair(
    std::vector<PauliTerm> &terms, unsigned i, unsigned j, Pauli a, Pauli b);

/**
 * Backup strategy: pick the term of minimum weight over live qubits (ties:
 * first in list order), rotate its live support into the Z basis and collapse
 * it with a CX chain onto its highest-index live support qubit. Since every
 * other term must commute with the resulting single-Z string, that qubit is
 * diagonal afterwards. Mutates the terms; returns the applied gates and the
 * diagonalised qubit.
 */
std::pair<std::vector<Gate>, unsigned> greedy_step(
    std::vector<PauliTerm> &terms, const std::vector<unsigned> &live);

/**
 * Simultaneously diagonalise a mutually commuting set. Input commutation is
 * validated; a non-commuting pair raises std::invalid_argument identifying
 * the offending strings. The returned Clifford uses at most n(n-1)/2 CX
 * gates, and at most n-1 when no greedy step was needed.
 */
DiagonalisationResult diagonalise_set(const std::vector<PauliTerm> &terms);

}  // namespace psyn
