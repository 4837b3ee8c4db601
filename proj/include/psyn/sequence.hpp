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

#include "psyn/pauli.hpp"

namespace psyn {

/**
 * Anti-commutation graph over a list of Pauli terms: vertex per term, edge
 * between any two terms whose strings anti-commute.
 */
struct PauliGraph {
  std::vector<PauliTerm> vertices;
  // adjacency[i][j] == true iff strings i and j anti-commute (symmetric, no
  // self-edges).
  std::vector<std::vector<bool>> adjacency;
};

/**
 * An ordered partition of terms into mutually commuting sets. Sets appear
 * in colour order; terms within a set keep graph (input) order.
 */
struct CommutingPartition {
  std::vector<std::vector<PauliTerm>> sets;
};

/** Build the anti-commutation graph. Throws std::invalid_argument on mixed
 * qubit counts. */
PauliGraph build_graph(const std::vector<PauliTerm> &terms);

/**
 * Greedy colouring in vertex (input) order, assigning the smallest colour
 * absent among already-coloured neighbours. Deterministic for a fixed input
 * order; sets are ordered by first colour assignment.
 */
CommutingPartition greedy_color(const PauliGraph &g);

/** Flatten a partition colour by colour, each set sorted lexicographically
 * by string. */
std::vector<PauliTerm> sequence(const CommutingPartition &p);

}  // namespace psyn
