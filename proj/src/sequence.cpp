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

#include "psyn/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace psyn {

PauliGraph build_graph(const std::vector<PauliTerm> &terms) {
  std::size_t m = terms.size();
  for (std::size_t i = 1; i < m; ++i) {
    if (terms[i].string.size() != terms[0].string.size()) {
      throw std::invalid_argument(
          "cannot build Pauli graph over mixed qubit counts");
    }
  }
  PauliGraph g;
  g.vertices = terms;
  g.adjacency.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool edge = !commutes(terms[i].string, terms[j].string);
      g.adjacency[i][j] = edge;
      g.adjacency[j][i] = edge;
    }
  }
  return g;
}

CommutingPartition greedy_color(const PauliGraph &g) {
  std::size_t m = g.vertices.size();
  std::vector<int> color(m, -1);
  int n_colors = 0;
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<bool> used(n_colors + 1, false);
    for (std::size_t u = 0; u < v; ++u) {
      if (g.adjacency[v][u] && color[u] >= 0) used[color[u]] = true;
    }
    int c = 0;
    while (used[c]) ++c;
    color[v] = c;
    n_colors = std::max(n_colors, c + 1);
  }
  CommutingPartition p;
  p.sets.resize(n_colors);
  for (std::size_t v = 0; v < m; ++v) {
    p.sets[color[v]].push_back(g.vertices[v]);
  }
  return p;
}

std::vector<PauliTerm> sequence(const CommutingPartition &p) {
  std::vector<PauliTerm> result;
  for (const std::vector<PauliTerm> &set : p.sets) {
    std::vector<PauliTerm> sorted = set;
    std::stable_sort(
        sorted.begin(), sorted.end(),
        [](const PauliTerm &a, const PauliTerm &b) {
          return a.string < b.string;
        });
    result.insert(result.end(), sorted.begin(), sorted.end());
  }
  return result;
}

}  // namespace psyn
