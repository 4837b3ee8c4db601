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

#include "psyn/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace psyn {

namespace {

unsigned n_words(unsigned n_qubits) { return (n_qubits + 63) / 64; }

void check_same_size(const PauliString &p, const PauliString &q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument(
        "Pauli string length mismatch: " + std::to_string(p.size()) + " vs " +
        std::to_string(q.size()));
  }
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I:
      return 'I';
    case Pauli::X:
      return 'X';
    case Pauli::Y:
      return 'Y';
    default:
      return 'Z';
  }
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(
          std::string("invalid Pauli letter '") + c + "'");
  }
}

PauliString::PauliString(unsigned n_qubits)
    : n_(n_qubits), x_(n_words(n_qubits), 0), z_(n_words(n_qubits), 0) {}

PauliString::PauliString(const std::string &letters)
    : PauliString(static_cast<unsigned>(letters.size())) {
  for (unsigned q = 0; q < n_; ++q) {
    Pauli p = pauli_from_char(letters[q]);
    if (p == Pauli::X || p == Pauli::Y) x_[q / 64] |= 1ULL << (q % 64);
    if (p == Pauli::Z || p == Pauli::Y) z_[q / 64] |= 1ULL << (q % 64);
  }
}

PauliString::PauliString(const std::vector<Pauli> &letters)
    : PauliString(static_cast<unsigned>(letters.size())) {
  for (unsigned q = 0; q < n_; ++q) {
    Pauli p = letters[q];
    if (p == Pauli::X || p == Pauli::Y) x_[q / 64] |= 1ULL << (q % 64);
    if (p == Pauli::Z || p == Pauli::Y) z_[q / 64] |= 1ULL << (q % 64);
  }
}

PauliString::PauliString(
    unsigned n_qubits, std::vector<std::uint64_t> x_bits,
    std::vector<std::uint64_t> z_bits)
    : n_(n_qubits), x_(std::move(x_bits)), z_(std::move(z_bits)) {
  if (x_.size() != n_words(n_) || z_.size() != n_words(n_)) {
    throw std::invalid_argument("Pauli string bit-vector size mismatch");
  }
  if (n_ % 64 != 0 && !x_.empty()) {
    // Clear any stray bits beyond the qubit count.
    std::uint64_t mask = (1ULL << (n_ % 64)) - 1;
    x_.back() &= mask;
    z_.back() &= mask;
  }
}

Pauli PauliString::letter(unsigned q) const {
  bool x = x_bit(q), z = z_bit(q);
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

bool PauliString::x_bit(unsigned q) const {
  return (x_[q / 64] >> (q % 64)) & 1;
}

bool PauliString::z_bit(unsigned q) const {
  return (z_[q / 64] >> (q % 64)) & 1;
}

std::string PauliString::to_string() const {
  std::string s;
  s.reserve(n_);
  for (unsigned q = 0; q < n_; ++q) s.push_back(to_char(letter(q)));
  return s;
}

bool PauliString::is_diagonal() const {
  for (std::uint64_t w : x_) {
    if (w != 0) return false;
  }
  return true;
}

bool PauliString::is_identity() const {
  for (std::uint64_t w : x_) {
    if (w != 0) return false;
  }
  for (std::uint64_t w : z_) {
    if (w != 0) return false;
  }
  return true;
}

bool PauliString::operator==(const PauliString &other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliString::operator!=(const PauliString &other) const {
  return !(*this == other);
}

bool PauliString::operator<(const PauliString &other) const {
  // Letter rank in rendered order: I < X < Y < Z.
  static constexpr int rank[4] = {0, 1, 2, 3};
  unsigned n = std::min(n_, other.n_);
  for (unsigned q = 0; q < n; ++q) {
    int a = rank[static_cast<int>(letter(q))];
    int b = rank[static_cast<int>(other.letter(q))];
    if (a != b) return a < b;
  }
  return n_ < other.n_;
}

unsigned weight(const PauliString &s) {
  unsigned w = 0;
  const auto &x = s.x_words();
  const auto &z = s.z_words();
  for (std::size_t i = 0; i < x.size(); ++i) {
    w += std::popcount(x[i] | z[i]);
  }
  return w;
}

bool commutes(const PauliString &p, const PauliString &q) {
  check_same_size(p, q);
  // P and Q commute iff the symplectic form <P,Q> = sum_q (px*qz + pz*qx)
  // vanishes mod 2.
  unsigned parity = 0;
  const auto &px = p.x_words(), &pz = p.z_words();
  const auto &qx = q.x_words(), &qz = q.z_words();
  for (std::size_t i = 0; i < px.size(); ++i) {
    parity += std::popcount(px[i] & qz[i]);
    parity += std::popcount(pz[i] & qx[i]);
  }
  return parity % 2 == 0;
}

std::complex<double> PauliProduct::phase() const {
  switch (phase_pow % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

PauliProduct multiply(const PauliString &p, const PauliString &q) {
  check_same_size(p, q);
  std::vector<Pauli> letters(p.size());
  unsigned k = 0;  // exponent of i
  for (unsigned j = 0; j < p.size(); ++j) {
    Pauli a = p.letter(j), b = q.letter(j);
    if (a == Pauli::I) {
      letters[j] = b;
    } else if (b == Pauli::I) {
      letters[j] = a;
    } else if (a == b) {
      letters[j] = Pauli::I;
    } else {
      // XY = iZ, YZ = iX, ZX = iY; reversed order picks up -i.
      int ia = static_cast<int>(a), ib = static_cast<int>(b);
      bool cyclic = (ib - ia + 3) % 3 == 1;  // X=1,Y=2,Z=3
      letters[j] = static_cast<Pauli>(6 - ia - ib);
      k += cyclic ? 1 : 3;
    }
  }
  return PauliProduct{k % 4, PauliString(letters)};
}

PauliTerm::PauliTerm(PauliString s, double theta, int phase_sign)
    : string(std::move(s)), angle(theta), sign(phase_sign) {
  if (!std::isfinite(angle)) {
    throw std::invalid_argument("Pauli term angle must be finite");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("Pauli term sign must be +1 or -1");
  }
}

}  // namespace psyn
