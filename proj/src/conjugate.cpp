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

#include "psyn/conjugate.hpp"

#include <stdexcept>

namespace psyn {

namespace {

struct LetterMap {
  Pauli letter;
  int sign;
};

// Letter-indexed conjugation tables, g*P*g^dag = sign * P'. Signs are fixed
// by exact matrix equality (see the conjugation test suite).
constexpr LetterMap kHMap[4] = {
    {Pauli::I, +1}, {Pauli::Z, +1}, {Pauli::Y, -1}, {Pauli::X, +1}};
constexpr LetterMap kSMap[4] = {
    {Pauli::I, +1}, {Pauli::Y, +1}, {Pauli::X, -1}, {Pauli::Z, +1}};
constexpr LetterMap kSdgMap[4] = {
    {Pauli::I, +1}, {Pauli::Y, -1}, {Pauli::X, +1}, {Pauli::Z, +1}};
constexpr LetterMap kVMap[4] = {
    {Pauli::I, +1}, {Pauli::X, +1}, {Pauli::Z, +1}, {Pauli::Y, -1}};
constexpr LetterMap kVdgMap[4] = {
    {Pauli::I, +1}, {Pauli::X, +1}, {Pauli::Z, -1}, {Pauli::Y, +1}};
constexpr LetterMap kXMap[4] = {
    {Pauli::I, +1}, {Pauli::X, +1}, {Pauli::Y, -1}, {Pauli::Z, -1}};
constexpr LetterMap kZMap[4] = {
    {Pauli::I, +1}, {Pauli::X, -1}, {Pauli::Y, -1}, {Pauli::Z, +1}};

struct PairMap {
  Pauli control;
  Pauli target;
  int sign;
};

// CX conjugation on (control letter, target letter), indexed [c][t].
constexpr PairMap kCxMap[4][4] = {
    // control I
    {{Pauli::I, Pauli::I, +1},
     {Pauli::I, Pauli::X, +1},
     {Pauli::Z, Pauli::Y, +1},
     {Pauli::Z, Pauli::Z, +1}},
    // control X
    {{Pauli::X, Pauli::X, +1},
     {Pauli::X, Pauli::I, +1},
     {Pauli::Y, Pauli::Z, +1},
     {Pauli::Y, Pauli::Y, -1}},
    // control Y
    {{Pauli::Y, Pauli::X, +1},
     {Pauli::Y, Pauli::I, +1},
     {Pauli::X, Pauli::Z, -1},
     {Pauli::X, Pauli::Y, +1}},
    // control Z
    {{Pauli::Z, Pauli::I, +1},
     {Pauli::Z, Pauli::X, +1},
     {Pauli::I, Pauli::Y, +1},
     {Pauli::I, Pauli::Z, +1}},
};

const LetterMap *single_qubit_map(GateKind k) {
  switch (k) {
    case GateKind::H:
      return kHMap;
    case GateKind::S:
      return kSMap;
    case GateKind::Sdg:
      return kSdgMap;
    case GateKind::V:
      return kVMap;
    case GateKind::Vdg:
      return kVdgMap;
    case GateKind::X:
      return kXMap;
    case GateKind::Z:
      return kZMap;
    default:
      return nullptr;
  }
}

void set_letter(
    std::vector<std::uint64_t> &x, std::vector<std::uint64_t> &z, unsigned q,
    Pauli p) {
  std::uint64_t bit = 1ULL << (q % 64);
  x[q / 64] &= ~bit;
  z[q / 64] &= ~bit;
  if (p == Pauli::X || p == Pauli::Y) x[q / 64] |= bit;
  if (p == Pauli::Z || p == Pauli::Y) z[q / 64] |= bit;
}

}  // namespace

PauliTerm conjugate_term(const Gate &g, const PauliTerm &t) {
  if (!g.is_clifford()) {
    throw std::invalid_argument("cannot conjugate by non-Clifford gate Rz");
  }
  unsigned n = t.string.size();
  if (g.q0 >= n || (g.kind == GateKind::CX && g.q1 >= n)) {
    throw std::invalid_argument("conjugation gate index exceeds qubit count");
  }
  std::vector<std::uint64_t> x = t.string.x_words();
  std::vector<std::uint64_t> z = t.string.z_words();
  int sign = t.sign;
  if (g.kind == GateKind::CX) {
    Pauli c = t.string.letter(g.q0);
    Pauli tg = t.string.letter(g.q1);
    const PairMap &m = kCxMap[static_cast<int>(c)][static_cast<int>(tg)];
    set_letter(x, z, g.q0, m.control);
    set_letter(x, z, g.q1, m.target);
    sign *= m.sign;
  } else {
    const LetterMap *map = single_qubit_map(g.kind);
    const LetterMap &m = map[static_cast<int>(t.string.letter(g.q0))];
    set_letter(x, z, g.q0, m.letter);
    sign *= m.sign;
  }
  return PauliTerm(PauliString(n, std::move(x), std::move(z)), t.angle, sign);
}

std::vector<PauliTerm> conjugate_set(
    const std::vector<Gate> &gates, const std::vector<PauliTerm> &terms) {
  std::vector<PauliTerm> result = terms;
  for (const Gate &g : gates) {
    for (PauliTerm &t : result) t = conjugate_term(g, t);
  }
  return result;
}

}  // namespace psyn
