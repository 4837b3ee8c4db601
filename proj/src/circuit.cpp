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

#include "psyn/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace psyn {

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::CX:
      return "CX";
    case GateKind::Rz:
      return "Rz";
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::Sdg:
      return "Sdg";
    case GateKind::V:
      return "V";
    case GateKind::Vdg:
      return "Vdg";
    case GateKind::X:
      return "X";
    default:
      return "Z";
  }
}

Gate Gate::inverse() const {
  switch (kind) {
    case GateKind::Rz:
      return Gate::rz(-angle, q0);
    case GateKind::S:
      return Gate::sdg(q0);
    case GateKind::Sdg:
      return Gate::s(q0);
    case GateKind::V:
      return Gate::vdg(q0);
    case GateKind::Vdg:
      return Gate::v(q0);
    default:
      // CX, H, X, Z are self-inverse.
      return *this;
  }
}

void Circuit::add(const Gate &g) {
  if (g.q0 >= n_ || (g.kind == GateKind::CX && g.q1 >= n_)) {
    throw std::invalid_argument(
        "gate " + gate_name(g.kind) + " qubit index out of range");
  }
  if (g.kind == GateKind::CX && g.q0 == g.q1) {
    throw std::invalid_argument("CX control and target must differ");
  }
  gates_.push_back(g);
}

unsigned Circuit::cx_count() const {
  unsigned count = 0;
  for (const Gate &g : gates_) {
    if (g.kind == GateKind::CX) ++count;
  }
  return count;
}

unsigned Circuit::cx_depth() const {
  std::vector<unsigned> layer(n_, 0);
  unsigned depth = 0;
  for (const Gate &g : gates_) {
    if (g.kind != GateKind::CX) continue;
    unsigned d = std::max(layer[g.q0], layer[g.q1]) + 1;
    layer[g.q0] = layer[g.q1] = d;
    depth = std::max(depth, d);
  }
  return depth;
}

void Circuit::append(const Circuit &other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("cannot append circuit: qubit-count mismatch");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

Circuit Circuit::adjoint() const {
  Circuit result(n_);
  result.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    result.gates_.push_back(it->inverse());
  }
  return result;
}

bool Circuit::operator==(const Circuit &other) const {
  if (n_ != other.n_ || gates_.size() != other.gates_.size()) return false;
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate &a = gates_[i], &b = other.gates_[i];
    if (a.kind != b.kind || a.q0 != b.q0) return false;
    if (a.kind == GateKind::CX && a.q1 != b.q1) return false;
    if (a.kind == GateKind::Rz && a.angle != b.angle) return false;
  }
  return true;
}

Circuit compose(const Circuit &a, const Circuit &b) {
  Circuit result = a;
  result.append(b);
  return result;
}

}  // namespace psyn
