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

#include "psyn/synth_naive.hpp"

#include <set>
#include <stdexcept>

namespace psyn {

namespace {

// Fan the given qubits' parity into qubits.back(), one CX layer at a time;
// returns the CX list (to be replayed in reverse to uncompute).
std::vector<Gate> tree_collect(const std::vector<unsigned> &qubits) {
  std::vector<Gate> cxs;
  std::vector<unsigned> active = qubits;
  while (active.size() > 1) {
    std::vector<unsigned> next;
    std::size_t pairs = active.size() / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
      cxs.push_back(Gate::cx(active[2 * i], active[2 * i + 1]));
      next.push_back(active[2 * i + 1]);
    }
    if (active.size() % 2 == 1) next.push_back(active.back());
    active = std::move(next);
  }
  return cxs;
}

}  // namespace

Circuit synth_phase_gadget(
    unsigned n_qubits, const std::vector<unsigned> &qubits, double theta,
    GadgetForm mode) {
  if (qubits.empty()) {
    throw std::invalid_argument(
        "phase gadget over no qubits is a global phase");
  }
  std::set<unsigned> distinct(qubits.begin(), qubits.end());
  if (distinct.size() != qubits.size()) {
    throw std::invalid_argument("phase gadget qubits must be distinct");
  }
  Circuit c(n_qubits);
  unsigned root = qubits.back();
  std::vector<Gate> cxs;
  if (mode == GadgetForm::ladder) {
    // Chain the parity down the list so the last qubit carries it.
    for (std::size_t i = 0; i + 1 < qubits.size(); ++i) {
      cxs.push_back(Gate::cx(qubits[i], qubits[i + 1]));
    }
  } else {
    cxs = tree_collect(qubits);
  }
  for (const Gate &g : cxs) c.add(g);
  c.add_rz(theta, root);
  for (auto it = cxs.rbegin(); it != cxs.rend(); ++it) c.add(*it);
  return c;
}

Circuit synth_pauli_gadget(const PauliTerm &t, GadgetForm mode) {
  unsigned n = t.string.size();
  std::vector<unsigned> support;
  for (unsigned q = 0; q < n; ++q) {
    if (t.string.letter(q) != Pauli::I) support.push_back(q);
  }
  if (support.empty()) {
    throw std::invalid_argument(
        "cannot synthesise all-identity Pauli term (global phase)");
  }
  Circuit basis_in(n), basis_out(n);
  for (unsigned q : support) {
    switch (t.string.letter(q)) {
      case Pauli::X:
        basis_in.add(Gate::h(q));
        basis_out.add(Gate::h(q));
        break;
      case Pauli::Y:
        basis_in.add(Gate::v(q));
        basis_out.add(Gate::vdg(q));
        break;
      default:
        break;
    }
  }
  Circuit c = basis_in;
  c.append(synth_phase_gadget(n, support, t.folded_angle(), mode));
  c.append(basis_out);
  return c;
}

Circuit synth_naive(
    unsigned n_qubits, const std::vector<PauliTerm> &seq, GadgetForm mode) {
  Circuit c(n_qubits);
  for (const PauliTerm &t : seq) {
    c.append(synth_pauli_gadget(t, mode));
  }
  return c;
}

}  // namespace psyn
