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

/**
 * Conjugate a Pauli term by a Clifford gate: returns t' such that
 *
 *   g * exp(-i*s*theta/2 * P) * g^dag = exp(-i*s'*theta/2 * P')
 *
 * exactly, where P' = g*P*g^dag up to the sign absorbed into s'. The gate
 * must be one of the Clifford kinds (everything except Rz); throws
 * std::invalid_argument otherwise, or if the gate indices exceed the term's
 * qubit count.
 */
PauliTerm conjugate_term(const Gate &g, const PauliTerm &t);

/**
 * Conjugate every term by an ordered gate list, innermost (first) gate
 * applied first. Pairwise commutation of the set is preserved.
 */
std::vector<PauliTerm> conjugate_set(
    const std::vector<Gate> &gates, const std::vector<PauliTerm> &terms);

}  // namespace psyn
