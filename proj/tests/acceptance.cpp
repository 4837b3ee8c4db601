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

// Acceptance suite: runs every gating criterion end to end and prints one
// PASS/FAIL line per criterion with the measured numbers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "psyn/diagonalise.hpp"
#include "psyn/io.hpp"
#include "psyn/oracle.hpp"
#include "psyn/phase_poly.hpp"
#include "psyn/pipeline.hpp"
#include "test_utils.hpp"

namespace psyn {
namespace {

using testing::term;
namespace fs = std::filesystem;

const std::vector<PauliTerm> kWorkedExample = {
    term("IXZIZ", 0.11), term("IYIZY", 0.23), term("XXIYI", 0.31),
    term("YYXII", 0.43), term("ZIYXX", 0.51), term("ZXIZZ", 0.63),
    term("ZYZIY", 0.77)};

struct Stopwatch {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

void report(const std::string &criterion, bool ok, const std::string &detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << criterion << ": " << detail
            << std::endl;
  CHECK_MESSAGE(ok, criterion, " -- ", detail);
}

std::vector<fs::path> benchmark_files() {
  std::vector<fs::path> files;
  for (const auto &entry : fs::directory_iterator(PSYN_BENCH_OPERATOR_DIR)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

bool circuit_equals_product(
    const CompileResult &result, const std::vector<PauliTerm> &terms,
    double tol) {
  UnitaryMatrix expected =
      unitary_of_terms(result.report.n_qubits, sequence_terms(terms));
  return equiv_up_to_phase(unitary_of_circuit(result.circuit), expected, tol);
}

TEST_CASE("criterion 1: worked example, naive strategy") {
  Stopwatch watch;
  CompileResult result = compile(kWorkedExample, Strategy::naive);
  double elapsed = watch.seconds();
  std::ostringstream detail;
  detail << "cx_count=" << result.report.cx_count
         << " cx_depth=" << result.report.cx_depth << " (expected 34/34), "
         << elapsed << " s";
  report(
      "worked example naive",
      result.report.cx_count == 34 && result.report.cx_depth == 34 &&
          elapsed < 1.0,
      detail.str());
}

TEST_CASE("criterion 2: worked example, set-based strategy") {
  Stopwatch watch;
  CompileResult result = compile(kWorkedExample, Strategy::sets);
  double elapsed = watch.seconds();
  bool equivalent = circuit_equals_product(result, kWorkedExample, 1e-9);
  std::ostringstream detail;
  detail << "cx_count=" << result.report.cx_count << " (<= 24), "
         << "cx_depth=" << result.report.cx_depth << " (<= 20), "
         << "oracle=" << (equivalent ? "equivalent" : "MISMATCH") << ", "
         << elapsed << " s";
  report(
      "worked example sets",
      result.report.cx_count <= 24 && result.report.cx_depth <= 20 &&
          equivalent && elapsed < 1.0,
      detail.str());
}

TEST_CASE("criterion 3: diagonaliser CX budget on the worked example") {
  DiagonalisationResult diag = diagonalise_set(kWorkedExample);
  std::ostringstream detail;
  detail << "clifford cx_count=" << diag.clifford.cx_count()
         << " (<= 7), greedy_steps=" << diag.greedy_steps;
  report(
      "worked example diagonaliser budget", diag.clifford.cx_count() <= 7,
      detail.str());
}

TEST_CASE("criterion 4: diagonalisation property suite, 200 random sets") {
  Stopwatch watch;
  std::mt19937 rng(90001);
  std::uniform_int_distribution<unsigned> n_dist(2, 6);
  std::uniform_int_distribution<std::size_t> m_dist(1, 12);
  unsigned failures = 0;
  unsigned small_case_misses = 0;
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = n_dist(rng);
    std::size_t m = m_dist(rng);
    std::vector<PauliTerm> set = testing::random_commuting_set(n, m, rng);
    if (set.empty()) continue;
    DiagonalisationResult diag = diagonalise_set(set);
    bool ok = diag.clifford.cx_count() <= n * (n - 1) / 2;
    for (const PauliTerm &t : diag.diagonal_terms) {
      ok = ok && t.string.is_diagonal();
    }
    UnitaryMatrix c = unitary_of_circuit(diag.clifford);
    UnitaryMatrix reconstructed =
        c * unitary_of_terms(n, diag.diagonal_terms) * c.dagger();
    ok = ok && equiv_up_to_phase(reconstructed, unitary_of_terms(n, set), 1e-9);
    if (!ok) ++failures;
    if ((set.size() < 4 || n < 5) && diag.clifford.cx_count() > n - 1) {
      ++small_case_misses;
    }
  }
  double elapsed = watch.seconds();
  std::ostringstream detail;
  detail << "200 sets, n in 2..6, m in 1..12: " << failures
         << " failures (diagonality, CX bound n(n-1)/2, oracle 1e-9); "
         << small_case_misses << " small-case n-1 bound misses; " << elapsed
         << " s (< 120 s)";
  report(
      "diagonalisation property suite",
      failures == 0 && small_case_misses == 0 && elapsed < 120.0,
      detail.str());
}

TEST_CASE("criterion 5: small-case CX bounds (m < 4 or n < 5 gives n-1 CX)") {
  std::mt19937 rng(90002);
  unsigned failures = 0;
  unsigned checked = 0;
  // Small-m sets over any n up to 6.
  std::uniform_int_distribution<unsigned> n_dist(2, 6);
  std::uniform_int_distribution<std::size_t> small_m(1, 3);
  for (int trial = 0; trial < 150; ++trial) {
    unsigned n = n_dist(rng);
    std::vector<PauliTerm> set =
        testing::random_commuting_set(n, small_m(rng), rng);
    if (set.empty() || set.size() >= 4) continue;
    ++checked;
    DiagonalisationResult diag = diagonalise_set(set);
    if (diag.clifford.cx_count() > n - 1) ++failures;
  }
  // Any-m sets over fewer than 5 qubits.
  std::uniform_int_distribution<unsigned> small_n(2, 4);
  std::uniform_int_distribution<std::size_t> m_dist(1, 12);
  for (int trial = 0; trial < 150; ++trial) {
    unsigned n = small_n(rng);
    std::vector<PauliTerm> set =
        testing::random_commuting_set(n, m_dist(rng), rng);
    if (set.empty()) continue;
    ++checked;
    DiagonalisationResult diag = diagonalise_set(set);
    if (diag.clifford.cx_count() > n - 1) ++failures;
  }
  std::ostringstream detail;
  detail << checked << " qualifying sets, " << failures
         << " exceeded the n-1 CX bound";
  report("small-case CX bounds", failures == 0, detail.str());
}

TEST_CASE("criterion 6: enumeration checkers") {
  Stopwatch watch_small;
  CompatibilityCheckReport small = check_small_set_compatibility();
  double t_small = watch_small.seconds();
  report(
      "small-set compatibility checker (m=3 passes, m=4 violation found)",
      small.passed && t_small < 600.0,
      small.detail + "; " + std::to_string(t_small) + " s (< 600 s)");

  Stopwatch watch_four;
  CompatibilityCheckReport four = check_four_qubit_compatibility(true);
  double t_four = watch_four.seconds();
  report(
      "four-qubit compatibility checker (full enumeration)",
      four.passed && t_four < 600.0,
      four.detail + "; " + std::to_string(t_four) + " s (< 600 s)");
}

TEST_CASE("criterion 7: phase-polynomial correctness on 500 diagonal sets") {
  std::mt19937 rng(90003);
  std::uniform_int_distribution<unsigned> n_dist(2, 8);
  std::uniform_int_distribution<std::size_t> m_dist(1, 16);
  unsigned failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    unsigned n = n_dist(rng);
    std::vector<PauliTerm> diag =
        testing::random_diagonal_terms(n, m_dist(rng), rng);
    if (diag.empty()) continue;
    Circuit c = synth_diagonal(diag);
    bool ok = c.cx_count() <= 2 * diag.size() * (n - 1);
    // Simulate every basis state: identity action and exact phases.
    for (std::size_t code = 0; ok && code < (std::size_t{1} << n); ++code) {
      std::vector<bool> x(n);
      for (unsigned q = 0; q < n; ++q) x[q] = (code >> (n - 1 - q)) & 1;
      std::vector<bool> state = x;
      double phase = 0.0;
      for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::CX) {
          state[g.q1] = state[g.q1] != state[g.q0];
        } else {
          phase += state[g.q0] ? g.angle / 2 : -g.angle / 2;
        }
      }
      double expected = 0.0;
      for (const PauliTerm &t : diag) {
        bool parity = false;
        for (unsigned q = 0; q < n; ++q) {
          if (t.string.letter(q) == Pauli::Z && x[q]) parity = !parity;
        }
        expected += parity ? t.folded_angle() / 2 : -t.folded_angle() / 2;
      }
      ok = ok && state == x &&
           std::abs(
               std::exp(std::complex<double>(0, phase)) -
               std::exp(std::complex<double>(0, expected))) < 1e-10;
    }
    if (!ok) ++failures;
  }
  std::ostringstream detail;
  detail << "500 diagonal sets (n <= 8): " << failures
         << " failures (identity action, phase function 1e-10, CX <= 2m(n-1))";
  report("phase-polynomial correctness", failures == 0, detail.str());
}

TEST_CASE("criterion 8: end-to-end equivalence on 100 random term lists") {
  std::mt19937 rng(90004);
  std::uniform_int_distribution<unsigned> n_dist(2, 6);
  std::uniform_int_distribution<std::size_t> m_dist(1, 12);
  unsigned failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = n_dist(rng);
    std::vector<PauliTerm> terms = testing::random_terms(n, m_dist(rng), rng);
    for (Strategy strategy : {Strategy::naive, Strategy::sets}) {
      CompileResult result = compile(terms, strategy);
      if (!circuit_equals_product(result, terms, 1e-9)) ++failures;
    }
  }
  std::ostringstream detail;
  detail << "100 term lists x 2 strategies vs the resequenced product: "
         << failures << " mismatches at 1e-9";
  report("end-to-end equivalence", failures == 0, detail.str());
}

TEST_CASE("criterion 9: reduction benchmark on the bundled synthetic suite") {
  std::vector<fs::path> files = benchmark_files();
  double count_sum = 0.0, depth_sum = 0.0;
  unsigned n_files = 0;
  for (const fs::path &file : files) {
    OperatorData data = load_operator(file.string());
    CompileOptions options;
    options.n_qubits = data.n_qubits;
    CompileResult naive = compile(data.terms, Strategy::naive, options);
    CompileResult sets = compile(data.terms, Strategy::sets, options);
    count_sum += 100.0 * (1.0 - double(sets.report.cx_count) /
                                    double(naive.report.cx_count));
    depth_sum += 100.0 * (1.0 - double(sets.report.cx_depth) /
                                    double(naive.report.cx_depth));
    ++n_files;
  }
  double mean_count = n_files ? count_sum / n_files : 0.0;
  double mean_depth = n_files ? depth_sum / n_files : 0.0;
  std::ostringstream detail;
  detail.precision(4);
  detail << n_files << " files; mean cx_count reduction " << mean_count
         << "% (>= 40%), mean cx_depth reduction " << mean_depth
         << "% (>= 50%)";
  report(
      "synthetic suite reductions",
      n_files == 10 && mean_count >= 40.0 && mean_depth >= 50.0,
      detail.str());
}

TEST_CASE("criterion 10: naive CX count equals the weight formula") {
  unsigned violations = 0;
  unsigned files = 0;
  for (const fs::path &file : benchmark_files()) {
    OperatorData data = load_operator(file.string());
    std::vector<PauliTerm> fused = fuse_terms(data.terms);
    unsigned expected = 0;
    for (const PauliTerm &t : fused) expected += 2 * (weight(t.string) - 1);
    CompileOptions options;
    options.n_qubits = data.n_qubits;
    CompileResult naive = compile(data.terms, Strategy::naive, options);
    if (naive.report.cx_count != expected) ++violations;
    ++files;
  }
  std::ostringstream detail;
  detail << files << " files; " << violations
         << " deviations from sum of 2(weight-1)";
  report("naive CX bound", files > 0 && violations == 0, detail.str());
}

TEST_CASE("criterion 11: QASM round-trip on every emitted file") {
  unsigned violations = 0;
  unsigned emitted = 0;
  fs::path tmp = fs::temp_directory_path() / "psyn_acceptance_qasm";
  fs::create_directories(tmp);
  for (const fs::path &file : benchmark_files()) {
    OperatorData data = load_operator(file.string());
    CompileOptions options;
    options.n_qubits = data.n_qubits;
    for (Strategy strategy : {Strategy::naive, Strategy::sets}) {
      CompileResult result = compile(data.terms, strategy, options);
      fs::path out = tmp / (file.stem().string() +
                            (strategy == Strategy::naive ? "_naive.qasm"
                                                         : "_sets.qasm"));
      emit_qasm(result.circuit, out.string());
      Circuit back = read_qasm(out.string());
      if (back.cx_count() != result.report.cx_count ||
          back.cx_depth() != result.report.cx_depth) {
        ++violations;
      }
      ++emitted;
    }
  }
  std::ostringstream detail;
  detail << emitted << " emitted files re-parsed; " << violations
         << " metric mismatches";
  report("QASM round-trip", emitted > 0 && violations == 0, detail.str());
}

}  // namespace
}  // namespace psyn
