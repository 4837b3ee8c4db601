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

// Generates the bundled synthetic UCCSD-like benchmark suite: weight-<=4
// strings shaped like single and double excitations, 8-12 qubits, 50-200
// terms per file. Deterministic; run with an output directory argument.

#include <algorithm>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "psyn/io.hpp"
#include "psyn/pauli.hpp"

namespace {

// Excitation-style patterns over the chosen qubits: the +t/8 and -t/8 halves
// of a double excitation, and the +t/2 / -t/2 pair of a single excitation.
const std::vector<std::pair<std::string, double>> kDoublePatterns = {
    {"XXXY", +1.0}, {"XXYX", +1.0}, {"XYXX", +1.0}, {"YXXX", +1.0},
    {"YYYX", -1.0}, {"YYXY", -1.0}, {"YXYY", -1.0}, {"XYYY", -1.0},
};
const std::vector<std::pair<std::string, double>> kSinglePatterns = {
    {"XY", +1.0},
    {"YX", -1.0},
};

std::string place(
    const std::string &pattern, const std::vector<unsigned> &qubits,
    unsigned n) {
  std::string s(n, 'I');
  for (std::size_t i = 0; i < qubits.size(); ++i) s[qubits[i]] = pattern[i];
  return s;
}

}  // namespace

int main(int argc, char **argv) {
  if (argc != 2) {
    std::cerr << "usage: psyn-gen-suite <output-dir>\n";
    return 2;
  }
  std::string dir = argv[1];

  for (unsigned file_idx = 0; file_idx < 10; ++file_idx) {
    std::mt19937 rng(20260800 + file_idx);
    unsigned n = 8 + file_idx % 5;  // 8..12 qubits
    std::uniform_int_distribution<unsigned> target_dist(50, 200);
    unsigned target = target_dist(rng);
    std::uniform_real_distribution<double> amp(0.01, 0.2);
    std::uniform_int_distribution<unsigned> qubit_dist(0, n - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::set<std::string> used;
    std::vector<psyn::PauliTerm> terms;
    auto add_block =
        [&](const std::vector<std::pair<std::string, double>> &patterns,
            unsigned k, double scale) {
          std::set<unsigned> qubit_set;
          while (qubit_set.size() < k) qubit_set.insert(qubit_dist(rng));
          std::vector<unsigned> qubits(qubit_set.begin(), qubit_set.end());
          std::vector<std::string> strings;
          for (const auto &[pattern, _] : patterns) {
            strings.push_back(place(pattern, qubits, n));
          }
          for (const std::string &s : strings) {
            if (used.count(s)) return;
          }
          double t = amp(rng);
          for (std::size_t i = 0; i < patterns.size(); ++i) {
            used.insert(strings[i]);
            double coeff = patterns[i].second * t * scale;
            terms.emplace_back(psyn::PauliString(strings[i]), -2.0 * coeff);
          }
        };

    while (terms.size() + 8 <= target) {
      if (coin(rng) < 0.25) {
        add_block(kSinglePatterns, 2, 0.5);
      } else {
        add_block(kDoublePatterns, 4, 0.125);
      }
    }

    char name[64];
    std::snprintf(name, sizeof name, "%s/uccsd_synth_%02u.json", dir.c_str(),
                  file_idx);
    psyn::save_operator(name, n, terms);
    std::cout << name << ": n_qubits=" << n << " n_terms=" << terms.size()
              << "\n";
  }
  return 0;
}
