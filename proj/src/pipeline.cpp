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

#include "psyn/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "psyn/diagonalise.hpp"
#include "psyn/phase_poly.hpp"
#include "psyn/sequence.hpp"

namespace psyn {

std::vector<PauliTerm> fuse_terms(
    const std::vector<PauliTerm> &terms, double *identity_angle) {
  std::vector<PauliTerm> fused;
  std::map<PauliString, std::size_t> index;
  double id_angle = 0.0;
  for (const PauliTerm &t : terms) {
    if (t.string.is_identity()) {
      id_angle += t.folded_angle();
      continue;
    }
    auto [it, inserted] = index.emplace(t.string, fused.size());
    if (inserted) {
      fused.emplace_back(t.string, t.folded_angle(), +1);
    } else {
      fused[it->second].angle += t.folded_angle();
    }
  }
  if (identity_angle) *identity_angle += id_angle;
  return fused;
}

namespace {

std::vector<PauliTerm> sort_lex(const std::vector<PauliTerm> &set) {
  std::vector<PauliTerm> sorted = set;
  std::stable_sort(
      sorted.begin(), sorted.end(),
      [](const PauliTerm &a, const PauliTerm &b) {
        return a.string < b.string;
      });
  return sorted;
}

}  // namespace

std::vector<PauliTerm> sequence_terms(const std::vector<PauliTerm> &terms) {
  std::vector<PauliTerm> fused = fuse_terms(terms);
  return sequence(greedy_color(build_graph(fused)));
}

CompileResult compile(
    const std::vector<PauliTerm> &terms, Strategy strategy,
    const CompileOptions &options) {
  auto start = std::chrono::steady_clock::now();

  CompileReport report;
  std::vector<PauliTerm> fused = fuse_terms(terms, &report.global_phase_angle);
  unsigned n = options.n_qubits;
  if (n == 0) {
    if (!fused.empty()) {
      n = fused[0].string.size();
    } else if (!terms.empty()) {
      n = terms[0].string.size();
    }
  }
  report.n_qubits = n;
  report.n_terms = fused.size();

  CommutingPartition partition = greedy_color(build_graph(fused));
  report.set_count = static_cast<unsigned>(partition.sets.size());

  Circuit body(n);
  for (const std::vector<PauliTerm> &set : partition.sets) {
    std::vector<PauliTerm> ordered = sort_lex(set);
    if (strategy == Strategy::naive) {
      body.append(synth_naive(n, ordered, options.mode));
    } else {
      DiagonalisationResult diag = diagonalise_set(ordered);
      report.clifford_cx_total += diag.clifford.cx_count();
      body.append(diag.clifford.adjoint());
      body.append(synth_diagonal(diag.diagonal_terms));
      body.append(diag.clifford);
    }
  }

  CompileResult result{Circuit(n), report};
  for (unsigned r = 0; r < options.repeats; ++r) result.circuit.append(body);
  result.report.cx_count = result.circuit.cx_count();
  result.report.cx_depth = result.circuit.cx_depth();
  auto end = std::chrono::steady_clock::now();
  result.report.wall_time_ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  return result;
}

}  // namespace psyn
