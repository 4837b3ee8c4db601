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

namespace psyn {

/** Single-qubit Pauli letter. */
enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/**
 * An n-qubit Pauli string, i.e. an element of {I,X,Y,Z}^n with qubit 0 as
 * the leftmost letter.
 *
 * Stored as a pair of bit-vectors (X part, Z part) so that commutation
 * reduces to a symplectic-form parity over machine words. Immutable after
 * construction.
 */
class PauliString {
 public:
  /** All-identity string on n qubits. */
  explicit PauliString(unsigned n_qubits);
  /** Parse from letters, e.g. "IXZIZ". Throws std::invalid_argument on bad
   * letters. */
  explicit PauliString(const std::string &letters);
  /** Construct from a letter sequence. */
  explicit PauliString(const std::vector<Pauli> &letters);
  /** Construct from raw X/Z bit words (bit q of word q/64). */
  PauliString(
      unsigned n_qubits, std::vector<std::uint64_t> x_bits,
      std::vector<std::uint64_t> z_bits);

  unsigned size() const { return n_; }
  Pauli letter(unsigned q) const;
  bool x_bit(unsigned q) const;
  bool z_bit(unsigned q) const;
  const std::vector<std::uint64_t> &x_words() const { return x_; }
  const std::vector<std::uint64_t> &z_words() const { return z_; }

  std::string to_string() const;
  /** True iff every letter is I or Z. */
  bool is_diagonal() const;
  bool is_identity() const;

  bool operator==(const PauliString &other) const;
  bool operator!=(const PauliString &other) const;
  /** Lexicographic order on the rendered string (I < X < Y < Z). */
  bool operator<(const PauliString &other) const;

 private:
  unsigned n_;
  std::vector<std::uint64_t> x_, z_;
};

/** Number of non-identity letters. */
unsigned weight(const PauliString &s);

/** True iff PQ = QP. Throws std::invalid_argument on length mismatch. */
bool commutes(const PauliString &p, const PauliString &q);

/** Result of multiplying two Pauli strings: PQ = i^phase_pow * string. */
struct PauliProduct {
  unsigned phase_pow;  // exponent of i, in {0,1,2,3}
  PauliString string;
  std::complex<double> phase() const;
};

/** Multiply two Pauli strings, tracking the fourth-root-of-unity phase.
 * Throws std::invalid_argument on length mismatch. */
PauliProduct multiply(const PauliString &p, const PauliString &q);

/**
 * A Pauli exponential term: (P, theta, s) denotes exp(-i*s*theta/2 * P).
 *
 * The sign s in {+1,-1} tracks phase flips accumulated while conjugating
 * by Clifford gates; it can be folded into the angle at any point.
 */
struct PauliTerm {
  PauliString string;
  double angle;  // radians
  int sign;      // +1 or -1

  PauliTerm(PauliString s, double theta, int phase_sign = +1);

  /** Angle with the sign folded in: exp(-i*folded_angle()/2 * P). */
  double folded_angle() const { return sign * angle; }
};

}  // namespace psyn
