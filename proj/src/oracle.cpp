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

#include "psyn/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "psyn/diagonalise.hpp"

namespace psyn {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

struct GateMatrix {
  cd a, b, c, d;  // [[a,b],[c,d]]
};

GateMatrix single_qubit_matrix(const Gate &g) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case GateKind::H:
      return {r, r, r, -r};
    case GateKind::S:
      return {1, 0, 0, kI};
    case GateKind::Sdg:
      return {1, 0, 0, -kI};
    case GateKind::V:
      return {r, -kI * r, -kI * r, r};
    case GateKind::Vdg:
      return {r, kI * r, kI * r, r};
    case GateKind::X:
      return {0, 1, 1, 0};
    case GateKind::Z:
      return {1, 0, 0, -1};
    case GateKind::Rz:
      return {std::exp(-kI * (g.angle / 2)), 0, 0, std::exp(kI * (g.angle / 2))};
    default:
      throw std::logic_error("not a single-qubit gate");
  }
}

}  // namespace

UnitaryMatrix::UnitaryMatrix(unsigned n_qubits)
    : n_(n_qubits), dim_(std::size_t{1} << n_qubits), m_(dim_ * dim_) {}

UnitaryMatrix UnitaryMatrix::identity(unsigned n_qubits) {
  if (n_qubits > kMaxQubits) {
    throw std::invalid_argument(
        "dense oracle limited to " + std::to_string(kMaxQubits) + " qubits");
  }
  UnitaryMatrix u(n_qubits);
  for (std::size_t i = 0; i < u.dim_; ++i) u.m_[i * u.dim_ + i] = 1.0;
  return u;
}

std::complex<double> &UnitaryMatrix::at(std::size_t row, std::size_t col) {
  return m_[row * dim_ + col];
}

const std::complex<double> &UnitaryMatrix::at(
    std::size_t row, std::size_t col) const {
  return m_[row * dim_ + col];
}

void UnitaryMatrix::apply_gate(const Gate &g) {
  if (g.kind == GateKind::CX) {
    // Permutation: row r swaps with r ^ tmask wherever the control bit is set.
    std::size_t cmask = dim_ >> (g.q0 + 1);
    std::size_t tmask = dim_ >> (g.q1 + 1);
    for (std::size_t r = 0; r < dim_; ++r) {
      if ((r & cmask) && !(r & tmask)) {
        std::size_t r2 = r | tmask;
        for (std::size_t col = 0; col < dim_; ++col) {
          std::swap(m_[r * dim_ + col], m_[r2 * dim_ + col]);
        }
      }
    }
    return;
  }
  GateMatrix gm = single_qubit_matrix(g);
  std::size_t mask = dim_ >> (g.q0 + 1);
  for (std::size_t r = 0; r < dim_; ++r) {
    if (r & mask) continue;
    std::size_t r2 = r | mask;
    for (std::size_t col = 0; col < dim_; ++col) {
      cd u0 = m_[r * dim_ + col];
      cd u1 = m_[r2 * dim_ + col];
      m_[r * dim_ + col] = gm.a * u0 + gm.b * u1;
      m_[r2 * dim_ + col] = gm.c * u0 + gm.d * u1;
    }
  }
}

void UnitaryMatrix::apply_pauli_exp(const PauliTerm &t) {
  if (t.string.size() != n_) {
    throw std::invalid_argument("pauli exponential qubit-count mismatch");
  }
  double half = t.folded_angle() / 2;
  cd cos_part = std::cos(half);
  cd msin = -kI * std::sin(half);

  // Index mask of X-type letters and the per-row phase of the Pauli matrix:
  // P[r][r ^ xmask] = prod over qubits of the letter's entry.
  std::size_t xmask = 0;
  std::vector<std::pair<std::size_t, Pauli>> nontrivial;
  for (unsigned q = 0; q < n_; ++q) {
    Pauli p = t.string.letter(q);
    if (p == Pauli::I) continue;
    std::size_t bit = dim_ >> (q + 1);
    if (p == Pauli::X || p == Pauli::Y) xmask |= bit;
    nontrivial.emplace_back(bit, p);
  }
  auto pauli_entry = [&](std::size_t row) {
    cd v = 1.0;
    for (const auto &[bit, p] : nontrivial) {
      bool b = row & bit;
      if (p == Pauli::Y) v *= b ? kI : -kI;
      if (p == Pauli::Z) v *= b ? -1.0 : 1.0;
    }
    return v;
  };

  if (xmask == 0) {
    for (std::size_t r = 0; r < dim_; ++r) {
      cd scale = cos_part + msin * pauli_entry(r);
      for (std::size_t col = 0; col < dim_; ++col) m_[r * dim_ + col] *= scale;
    }
    return;
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    std::size_t r2 = r ^ xmask;
    if (r2 < r) continue;
    cd pr = pauli_entry(r);    // P[r][r2]
    cd pr2 = pauli_entry(r2);  // P[r2][r]
    for (std::size_t col = 0; col < dim_; ++col) {
      cd u0 = m_[r * dim_ + col];
      cd u1 = m_[r2 * dim_ + col];
      m_[r * dim_ + col] = cos_part * u0 + msin * pr * u1;
      m_[r2 * dim_ + col] = cos_part * u1 + msin * pr2 * u0;
    }
  }
}

UnitaryMatrix UnitaryMatrix::dagger() const {
  UnitaryMatrix u(n_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      u.m_[c * dim_ + r] = std::conj(m_[r * dim_ + c]);
    }
  }
  return u;
}

bool UnitaryMatrix::is_unitary(double tol) const {
  UnitaryMatrix product = *this * dagger();
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      cd expect = r == c ? 1.0 : 0.0;
      if (std::abs(product.m_[r * dim_ + c] - expect) > tol) return false;
    }
  }
  return true;
}

UnitaryMatrix operator*(const UnitaryMatrix &a, const UnitaryMatrix &b) {
  if (a.dim_ != b.dim_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  UnitaryMatrix out(a.n_);
  for (std::size_t r = 0; r < a.dim_; ++r) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      cd av = a.m_[r * a.dim_ + k];
      if (av == 0.0) continue;
      for (std::size_t c = 0; c < a.dim_; ++c) {
        out.m_[r * a.dim_ + c] += av * b.m_[k * a.dim_ + c];
      }
    }
  }
  return out;
}

UnitaryMatrix unitary_of_circuit(const Circuit &c) {
  UnitaryMatrix u = UnitaryMatrix::identity(c.n_qubits());
  for (const Gate &g : c.gates()) u.apply_gate(g);
  return u;
}

UnitaryMatrix unitary_of_terms(
    unsigned n_qubits, const std::vector<PauliTerm> &terms) {
  UnitaryMatrix u = UnitaryMatrix::identity(n_qubits);
  for (const PauliTerm &t : terms) u.apply_pauli_exp(t);
  return u;
}

double max_abs_diff(const UnitaryMatrix &u, const UnitaryMatrix &v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      worst = std::max(worst, std::abs(u.at(r, c) - v.at(r, c)));
    }
  }
  return worst;
}

bool equiv_up_to_phase(
    const UnitaryMatrix &u, const UnitaryMatrix &v, double tol) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  std::size_t br = 0, bc = 0;
  double best = -1.0;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    for (std::size_t c = 0; c < v.dim(); ++c) {
      double mag = std::abs(v.at(r, c));
      if (mag > best) {
        best = mag;
        br = r;
        bc = c;
      }
    }
  }
  if (best <= 0.0) return max_abs_diff(u, v) < tol;
  cd lambda = u.at(br, bc) / v.at(br, bc);
  double mag = std::abs(lambda);
  if (mag == 0.0) return false;
  lambda /= mag;
  double worst = 0.0;
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      worst = std::max(worst, std::abs(u.at(r, c) - lambda * v.at(r, c)));
      if (worst >= tol) return false;
    }
  }
  return true;
}

namespace {

// Letters of 2- and 4-qubit strings packed as base-4 digits for the
// enumeration checkers.
Pauli digit(unsigned code, unsigned q, unsigned n) {
  return static_cast<Pauli>((code >> (2 * (n - 1 - q))) & 3);
}

std::vector<PauliTerm> terms_from_codes(
    const std::vector<unsigned> &codes, unsigned n) {
  std::vector<PauliTerm> terms;
  terms.reserve(codes.size());
  for (unsigned code : codes) {
    std::vector<Pauli> letters(n);
    for (unsigned q = 0; q < n; ++q) letters[q] = digit(code, q, n);
    terms.emplace_back(PauliString(letters), 0.1, +1);
  }
  return terms;
}

bool trivial_or_compatible(const std::vector<PauliTerm> &terms, unsigned n) {
  std::vector<unsigned> live(n);
  for (unsigned q = 0; q < n; ++q) live[q] = q;
  if (find_trivial_qubit(terms, live)) return true;
  return find_compatible_pair(terms, live).has_value();
}

std::string describe_codes(const std::vector<unsigned> &codes, unsigned n) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) ss << ", ";
    std::vector<Pauli> letters(n);
    for (unsigned q = 0; q < n; ++q) letters[q] = digit(codes[i], q, n);
    ss << PauliString(letters).to_string();
  }
  return ss.str();
}

// Symplectic (x|z) encoding of a 4-qubit letter code for commutation and
// GF(2) independence tests.
unsigned symplectic_bits(unsigned code) {
  unsigned x = 0, z = 0;
  for (unsigned q = 0; q < 4; ++q) {
    Pauli letter = digit(code, q, 4);
    if (letter == Pauli::X || letter == Pauli::Y) x |= 1u << q;
    if (letter == Pauli::Y || letter == Pauli::Z) z |= 1u << q;
  }
  return x | (z << 4);
}

bool codes_commute(unsigned a, unsigned b) {
  unsigned sa = symplectic_bits(a), sb = symplectic_bits(b);
  unsigned ax = sa & 15, az = sa >> 4, bx = sb & 15, bz = sb >> 4;
  return (std::popcount(ax & bz) + std::popcount(az & bx)) % 2 == 0;
}

bool independent_4(const std::array<unsigned, 4> &codes) {
  std::array<unsigned, 4> v;
  for (int i = 0; i < 4; ++i) v[i] = symplectic_bits(codes[i]);
  unsigned rank = 0;
  for (unsigned bit = 0; bit < 8 && rank < 4; ++bit) {
    unsigned mask = 1u << bit;
    unsigned pivot = 4;
    for (unsigned r = rank; r < 4; ++r) {
      if (v[r] & mask) {
        pivot = r;
        break;
      }
    }
    if (pivot == 4) continue;
    std::swap(v[rank], v[pivot]);
    for (unsigned r = 0; r < 4; ++r) {
      if (r != rank && (v[r] & mask)) v[r] ^= v[rank];
    }
    ++rank;
  }
  return rank == 4;
}

}  // namespace

CompatibilityCheckReport check_small_set_compatibility() {
  CompatibilityCheckReport report;
  std::ostringstream detail;

  // Families are sets of distinct letter pairs; duplicated rows cannot
  // change triviality or compatibility.
  std::uint64_t m3_checked = 0, m3_bad = 0;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = a + 1; b < 16; ++b) {
      for (unsigned c = b + 1; c < 16; ++c) {
        ++m3_checked;
        std::vector<unsigned> codes{a, b, c};
        if (!trivial_or_compatible(terms_from_codes(codes, 2), 2)) {
          ++m3_bad;
          if (m3_bad == 1) {
            detail << "m=3 violation: {" << describe_codes(codes, 2) << "}; ";
          }
        }
      }
    }
  }

  std::uint64_t m4_checked = 0, m4_bad = 0;
  std::vector<unsigned> first_violation;
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = a + 1; b < 16; ++b) {
      for (unsigned c = b + 1; c < 16; ++c) {
        for (unsigned d = c + 1; d < 16; ++d) {
          ++m4_checked;
          std::vector<unsigned> codes{a, b, c, d};
          if (!trivial_or_compatible(terms_from_codes(codes, 2), 2)) {
            ++m4_bad;
            if (first_violation.empty()) first_violation = codes;
          }
        }
      }
    }
  }

  report.sets_checked = m3_checked + m4_checked;
  report.violations = m3_bad;
  report.passed = m3_bad == 0 && m4_bad > 0;
  detail << "m=3: " << m3_checked << " families, " << m3_bad
         << " incompatible; m=4: " << m4_checked << " families, " << m4_bad
         << " incompatible";
  if (!first_violation.empty()) {
    detail << " (e.g. {" << describe_codes(first_violation, 2) << "})";
  }
  report.detail = detail.str();
  return report;
}

CompatibilityCheckReport check_four_qubit_compatibility(
    bool full, std::uint64_t sample, unsigned seed) {
  CompatibilityCheckReport report;

  // Non-identity 4-qubit strings and their pairwise commutation, as 256-bit
  // adjacency masks.
  constexpr unsigned kStrings = 256;
  std::vector<std::array<std::uint64_t, 4>> adj(
      kStrings, std::array<std::uint64_t, 4>{0, 0, 0, 0});
  for (unsigned a = 1; a < kStrings; ++a) {
    for (unsigned b = a + 1; b < kStrings; ++b) {
      if (codes_commute(a, b)) adj[a][b / 64] |= 1ULL << (b % 64);
    }
  }

  std::uint64_t checked = 0, bad = 0;
  std::vector<unsigned> first_violation;
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double keep_fraction = 1.0;
  if (!full) {
    // Roughly `sample` tuples out of the ~2M total.
    keep_fraction = static_cast<double>(sample) / 2.0e6;
  }

  auto consider = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::array<unsigned, 4> codes{a, b, c, d};
    if (!independent_4(codes)) return;
    if (!full && unit(rng) > keep_fraction) return;
    ++checked;
    std::vector<unsigned> vec(codes.begin(), codes.end());
    if (!trivial_or_compatible(terms_from_codes(vec, 4), 4)) {
      ++bad;
      if (first_violation.empty()) first_violation = vec;
    }
  };

  for (unsigned a = 1; a < kStrings; ++a) {
    for (unsigned b = a + 1; b < kStrings; ++b) {
      if (!(adj[a][b / 64] >> (b % 64) & 1)) continue;
      std::array<std::uint64_t, 4> mask_ab;
      for (int w = 0; w < 4; ++w) mask_ab[w] = adj[a][w] & adj[b][w];
      for (unsigned c = b + 1; c < kStrings; ++c) {
        if (!(mask_ab[c / 64] >> (c % 64) & 1)) continue;
        std::array<std::uint64_t, 4> mask_abc;
        for (int w = 0; w < 4; ++w) mask_abc[w] = mask_ab[w] & adj[c][w];
        for (unsigned w = c / 64; w < 4; ++w) {
          std::uint64_t bits = mask_abc[w];
          if (w == c / 64) bits &= ~((2ULL << (c % 64)) - 1);
          while (bits) {
            unsigned d = w * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            consider(a, b, c, d);
          }
        }
      }
    }
  }

  report.sets_checked = checked;
  report.violations = bad;
  report.passed = bad == 0;
  std::ostringstream detail;
  detail << (full ? "full enumeration: " : "sampled: ") << checked
         << " independent commuting generator 4-tuples, " << bad
         << " without a trivial qubit or compatible pair";
  if (!first_violation.empty()) {
    detail << " (e.g. {" << describe_codes(first_violation, 4) << "})";
  }
  report.detail = detail.str();
  return report;
}

}  // namespace psyn
