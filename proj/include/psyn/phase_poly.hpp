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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "psyn/circuit.hpp"
#include "psyn/pauli.hpp"

namespace psyn {

/** A parity: a GF(2) linear form over the qubit variables (bit q set iff
 * qubit q participates). */
class Parity {
 public:
  explicit Parity(unsigned n_qubits);
  /** The Z-support of a diagonal Pauli string. */
  static Parity z_support(const PauliString &s);
  /** The unit parity e_q. */
  static Parity unit(unsigned n_qubits, unsigned q);

  unsigned n_qubits() const { return n_; }
  bool test(unsigned q) const;
  void set(unsigned q, bool value = true);
  /** bits ^= other.bits */
  void operator^=(const Parity &other);
  unsigned count() const;
  bool none() const;
  bool is_unit(unsigned q) const;
  std::string to_string() const;  // e.g. "110"

  bool operator==(const Parity &other) const;
  bool operator<(const Parity &other) const;

 private:
  unsigned n_;
  std::vector<std::uint64_t> w_;
};

/**
 * A phase polynomial p(x) = sum_i theta_i * f_i(x) over unique parities f_i,
 * plus the global phase angle accumulated from identity terms (the realised
 * scalar is exp(-i*global_phase_angle/2)).
 */
struct PhasePolynomial {
  unsigned n_qubits = 0;
  std::map<Parity, double> terms;
  double global_phase_angle = 0.0;
};

/**
 * Convert diagonal Pauli terms to a phase polynomial: each term contributes
 * its Z-support as a parity with its (sign-folded) angle; equal parities
 * fuse by angle addition and exact cancellations are dropped; all-identity
 * terms accumulate into global_phase_angle. Throws std::invalid_argument on
 * non-diagonal input.
 */
PhasePolynomial extract(const std::vector<PauliTerm> &diagonal);

/** An invertible GF(2) linear map on basis-state labels; row q is the parity
 * carried by wire q. */
struct LinearFunction {
  unsigned n = 0;
  std::vector<Parity> rows;

  static LinearFunction identity(unsigned n);
  bool is_identity() const;
  bool invertible() const;
  /** Apply to a bit-vector: output wire q = <rows[q], x>. */
  std::vector<bool> apply(const std::vector<bool> &x) const;
};

struct GraySynthResult {
  Circuit circuit;  // CX and Rz only
  LinearFunction linear;
};

/**
 * Synthesise the phase polynomial into CX + Rz gates: recursively partition
 * the parity set on pivot qubits (chosen to maximise the larger side of the
 * split), emitting a CX whenever a qubit is set in every parity of a
 * targeted branch and an Rz whenever a parity reduces to a unit vector on
 * the target wire. The returned circuit realises exactly the polynomial's
 * phases and applies the returned linear function to basis states.
 */
GraySynthResult gray_synth(const PhasePolynomial &p);

/**
 * A CX-only circuit implementing the inverse of the given linear function,
 * by Gaussian elimination over GF(2). Appending it after gray_synth's
 * circuit restores the identity linear function. Throws
 * std::invalid_argument if the matrix is singular.
 */
Circuit restore_identity(const LinearFunction &l);

/** extract + gray_synth + restore_identity, composed: a CX+Rz circuit equal
 * to the ordered product of the input exponentials up to global phase. */
Circuit synth_diagonal(const std::vector<PauliTerm> &diagonal);

}  // namespace psyn
