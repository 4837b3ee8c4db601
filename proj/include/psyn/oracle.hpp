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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/pauli.hpp"

namespace psyn {

/**
 * Dense 2^n x 2^n complex matrix for desk-scale exact verification.
 *
 * Tensor ordering: qubit 0 is the leftmost letter of a Pauli string and the
 * most significant bit of a basis-state index.
 */
class UnitaryMatrix {
 public:
  static constexpr unsigned kMaxQubits = 11;

  /** Identity on n qubits. Throws std::invalid_argument for n > kMaxQubits. */
  static UnitaryMatrix identity(unsigned n_qubits);

  unsigned n_qubits() const { return n_; }
  std::size_t dim() const { return dim_; }
  std::complex<double> &at(std::size_t row, std::size_t col);
  const std::complex<double> &at(std::size_t row, std::size_t col) const;

  /** Left-multiply by the gate's matrix: U <- G U. */
  void apply_gate(const Gate &g);
  /** Left-multiply by exp(-i*s*theta/2 * P) via the closed form
   * cos(theta/2) I - i sin(theta/2) P. */
  void apply_pauli_exp(const PauliTerm &t);

  UnitaryMatrix dagger() const;
  bool is_unitary(double tol = 1e-10) const;

  friend UnitaryMatrix operator*(const UnitaryMatrix &a, const UnitaryMatrix &b);

 private:
  explicit UnitaryMatrix(unsigned n_qubits);
  unsigned n_;
  std::size_t dim_;
  std::vector<std::complex<double>> m_;  // row-major
};

/** Product of the circuit's gate matrices in application order. */
UnitaryMatrix unitary_of_circuit(const Circuit &c);

/** Ordered product of exp(-i*s*theta/2 * P) with terms[0] applied first
 * (i.e. rightmost in the operator product). */
UnitaryMatrix unitary_of_terms(
    unsigned n_qubits, const std::vector<PauliTerm> &terms);

/** Largest entrywise absolute difference. */
double max_abs_diff(const UnitaryMatrix &u, const UnitaryMatrix &v);

/** True iff U = lambda V entrywise within tol for some unit scalar lambda,
 * taken from the largest-magnitude entry ratio. Throws on dimension
 * mismatch. */
bool equiv_up_to_phase(
    const UnitaryMatrix &u, const UnitaryMatrix &v, double tol);

struct CompatibilityCheckReport {
  bool passed = false;
  std::uint64_t sets_checked = 0;
  std::uint64_t violations = 0;
  std::string detail;
};

/**
 * Enumerate letter-pair families (the columns of two qubits across m terms)
 * and check each has a trivially-diagonalisable column or a compatible pair.
 * This underpins the guarantee that sets of fewer than 4 terms diagonalise
 * with at most n-1 CX gates: the check passes exhaustively for m = 3, and
 * for m = 4 at least one violating family must exist (one is reported in
 * detail).
 */
CompatibilityCheckReport check_small_set_compatibility();

/**
 * Enumerate GF(2)-independent, mutually commuting 4-tuples of 4-qubit Pauli
 * strings (the generator sets of all commuting sets over 4 qubits, signs
 * ignored) and check each has a trivially-diagonalisable qubit or a
 * compatible pair; this underpins the n-1 CX bound for sets over fewer than
 * 5 qubits. With full = false, only a random sample is checked.
 */
CompatibilityCheckReport check_four_qubit_compatibility(
    bool full = true, std::uint64_t sample = 20000, unsigned seed = 7);

}  // namespace psyn
