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
#include <string>
#include <vector>

namespace psyn {

/** The fixed, closed gate set. All kinds except Rz are Clifford. */
enum class GateKind : std::uint8_t { CX, Rz, H, S, Sdg, V, Vdg, X, Z };

std::string gate_name(GateKind k);

/**
 * A gate instance. For CX, q0 is the control and q1 the target; all other
 * kinds act on q0 alone. The angle field is meaningful for Rz only.
 */
struct Gate {
  GateKind kind;
  unsigned q0;
  unsigned q1;
  double angle;

  static Gate cx(unsigned control, unsigned target) {
    return {GateKind::CX, control, target, 0.0};
  }
  static Gate rz(double angle, unsigned q) {
    return {GateKind::Rz, q, 0, angle};
  }
  static Gate h(unsigned q) { return {GateKind::H, q, 0, 0.0}; }
  static Gate s(unsigned q) { return {GateKind::S, q, 0, 0.0}; }
  static Gate sdg(unsigned q) { return {GateKind::Sdg, q, 0, 0.0}; }
  static Gate v(unsigned q) { return {GateKind::V, q, 0, 0.0}; }
  static Gate vdg(unsigned q) { return {GateKind::Vdg, q, 0, 0.0}; }
  static Gate x(unsigned q) { return {GateKind::X, q, 0, 0.0}; }
  static Gate z(unsigned q) { return {GateKind::Z, q, 0, 0.0}; }

  bool is_clifford() const { return kind != GateKind::Rz; }
  unsigned n_args() const { return kind == GateKind::CX ? 2 : 1; }
  Gate inverse() const;
};

/**
 * A gate-level circuit over a fixed number of qubits. Gates are stored in
 * temporal order of application (leftmost first).
 */
class Circuit {
 public:
  explicit Circuit(unsigned n_qubits) : n_(n_qubits) {}

  unsigned n_qubits() const { return n_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t n_gates() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /** Append a gate. Throws std::invalid_argument on out-of-range qubit
   * indices or a CX with control == target. */
  void add(const Gate &g);
  void add_cx(unsigned control, unsigned target) { add(Gate::cx(control, target)); }
  void add_rz(double angle, unsigned q) { add(Gate::rz(angle, q)); }

  /** Number of CX gates. */
  unsigned cx_count() const;

  /**
   * Number of two-qubit layers under ASAP scheduling: per-qubit counters
   * start at 0; each CX(a,b) takes layer max(c[a],c[b])+1 and updates both
   * counters; single-qubit gates do not advance counters.
   */
  unsigned cx_depth() const;

  /** Append all of other's gates. Throws on qubit-count mismatch. The
   * resulting unitary is unitary(other) * unitary(*this). */
  void append(const Circuit &other);

  /** Reversed gate order with every gate inverted. */
  Circuit adjoint() const;

  bool operator==(const Circuit &other) const;

 private:
  unsigned n_;
  std::vector<Gate> gates_;
};

/** Concatenate two circuits: unitary(result) = unitary(b) * unitary(a). */
Circuit compose(const Circuit &a, const Circuit &b);

}  // namespace psyn
