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

#include "psyn/phase_poly.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <optional>
#include <stdexcept>

namespace psyn {

namespace {
unsigned n_words(unsigned n_qubits) { return (n_qubits + 63) / 64; }
}  // namespace

Parity::Parity(unsigned n_qubits) : n_(n_qubits), w_(n_words(n_qubits), 0) {}

Parity Parity::z_support(const PauliString &s) {
  Parity p(s.size());
  p.w_ = s.z_words();
  return p;
}

Parity Parity::unit(unsigned n_qubits, unsigned q) {
  Parity p(n_qubits);
  p.set(q);
  return p;
}

bool Parity::test(unsigned q) const { return (w_[q / 64] >> (q % 64)) & 1; }

void Parity::set(unsigned q, bool value) {
  if (value) {
    w_[q / 64] |= 1ULL << (q % 64);
  } else {
    w_[q / 64] &= ~(1ULL << (q % 64));
  }
}

void Parity::operator^=(const Parity &other) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
}

unsigned Parity::count() const {
  unsigned c = 0;
  for (std::uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool Parity::none() const {
  for (std::uint64_t w : w_) {
    if (w != 0) return false;
  }
  return true;
}

bool Parity::is_unit(unsigned q) const { return test(q) && count() == 1; }

std::string Parity::to_string() const {
  std::string s;
  s.reserve(n_);
  for (unsigned q = 0; q < n_; ++q) s.push_back(test(q) ? '1' : '0');
  return s;
}

bool Parity::operator==(const Parity &other) const {
  return n_ == other.n_ && w_ == other.w_;
}

bool Parity::operator<(const Parity &other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return w_ < other.w_;
}

PhasePolynomial extract(const std::vector<PauliTerm> &diagonal) {
  PhasePolynomial poly;
  if (!diagonal.empty()) poly.n_qubits = diagonal[0].string.size();
  for (const PauliTerm &t : diagonal) {
    if (!t.string.is_diagonal()) {
      throw std::invalid_argument(
          "extract: term " + t.string.to_string() + " is not diagonal");
    }
    if (t.string.size() != poly.n_qubits) {
      throw std::invalid_argument("extract: mixed qubit counts");
    }
    if (t.string.is_identity()) {
      poly.global_phase_angle += t.folded_angle();
      continue;
    }
    Parity f = Parity::z_support(t.string);
    auto [it, inserted] = poly.terms.emplace(f, t.folded_angle());
    if (!inserted) it->second += t.folded_angle();
  }
  // Exact cancellations contribute the identity; drop them.
  for (auto it = poly.terms.begin(); it != poly.terms.end();) {
    if (it->second == 0.0) {
      it = poly.terms.erase(it);
    } else {
      ++it;
    }
  }
  return poly;
}

LinearFunction LinearFunction::identity(unsigned n) {
  LinearFunction l;
  l.n = n;
  l.rows.reserve(n);
  for (unsigned q = 0; q < n; ++q) l.rows.push_back(Parity::unit(n, q));
  return l;
}

bool LinearFunction::is_identity() const {
  for (unsigned q = 0; q < n; ++q) {
    if (!rows[q].is_unit(q)) return false;
  }
  return true;
}

bool LinearFunction::invertible() const {
  std::vector<Parity> a = rows;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = n;
    for (unsigned r = col; r < n; ++r) {
      if (a[r].test(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return false;
    std::swap(a[col], a[pivot]);
    for (unsigned r = 0; r < n; ++r) {
      if (r != col && a[r].test(col)) a[r] ^= a[col];
    }
  }
  return true;
}

std::vector<bool> LinearFunction::apply(const std::vector<bool> &x) const {
  std::vector<bool> y(n, false);
  for (unsigned q = 0; q < n; ++q) {
    bool bit = false;
    for (unsigned j = 0; j < n; ++j) {
      if (rows[q].test(j) && x[j]) bit = !bit;
    }
    y[q] = bit;
  }
  return y;
}

namespace {

struct GrayNode {
  std::vector<std::size_t> ids;
  std::vector<unsigned> live;
  std::optional<unsigned> target;
};

}  // namespace

GraySynthResult gray_synth(const PhasePolynomial &p) {
  unsigned n = p.n_qubits;
  GraySynthResult result{Circuit(n), LinearFunction::identity(n)};
  if (p.terms.empty()) return result;

  // Working parities in current-frame coordinates: a parity vector y stands
  // for the XOR of the wires it selects, so emitting CX(c,t) re-expresses
  // every pending parity as y_c ^= y_t while the frame row picks up
  // rows[t] ^= rows[c].
  std::vector<Parity> cur;
  std::vector<double> angle;
  std::vector<bool> alive;
  for (const auto &[f, theta] : p.terms) {
    cur.push_back(f);
    angle.push_back(theta);
    alive.push_back(true);
  }

  Circuit &circ = result.circuit;
  LinearFunction &frame = result.linear;

  auto emit_cx = [&](unsigned control, unsigned target) {
    circ.add_cx(control, target);
    frame.rows[target] ^= frame.rows[control];
    for (std::size_t id = 0; id < cur.size(); ++id) {
      if (alive[id] && cur[id].test(target)) cur[id].set(control, !cur[id].test(control));
    }
  };

  std::vector<GrayNode> stack;
  GrayNode root;
  for (std::size_t id = 0; id < cur.size(); ++id) root.ids.push_back(id);
  root.live.resize(n);
  for (unsigned q = 0; q < n; ++q) root.live[q] = q;
  stack.push_back(std::move(root));

  while (!stack.empty()) {
    GrayNode node = std::move(stack.back());
    stack.pop_back();
    if (node.ids.empty()) continue;

    if (node.target) {
      unsigned t = *node.target;
      // Every parity in a targeted branch has bit t set; a qubit set in all
      // of them can be folded onto the target wire with one CX.
      for (unsigned j = 0; j < n; ++j) {
        if (j == t) continue;
        bool common = true;
        for (std::size_t id : node.ids) {
          if (!cur[id].test(j)) {
            common = false;
            break;
          }
        }
        if (common) emit_cx(j, t);
      }
      std::vector<std::size_t> remaining;
      for (std::size_t id : node.ids) {
        if (cur[id].is_unit(t)) {
          circ.add_rz(angle[id], t);
          alive[id] = false;
        } else {
          remaining.push_back(id);
        }
      }
      node.ids = std::move(remaining);
      if (node.ids.empty()) continue;
    }

    if (node.live.empty()) {
      throw std::logic_error(
          "gray_synth: unrealised parities remain with no live qubits "
          "(duplicate parities in input?)");
    }

    // Pivot: maximise the larger side of the split; ties to the lowest index.
    unsigned pivot = node.live[0];
    std::size_t best = 0;
    for (unsigned j : node.live) {
      std::size_t ones = 0;
      for (std::size_t id : node.ids) {
        if (cur[id].test(j)) ++ones;
      }
      std::size_t score = std::max(ones, node.ids.size() - ones);
      if (score > best) {
        best = score;
        pivot = j;
      }
    }

    GrayNode zeros, ones;
    for (std::size_t id : node.ids) {
      (cur[id].test(pivot) ? ones : zeros).ids.push_back(id);
    }
    zeros.live = node.live;
    zeros.live.erase(std::find(zeros.live.begin(), zeros.live.end(), pivot));
    ones.live = zeros.live;
    zeros.target = node.target;
    ones.target = node.target ? node.target : std::make_optional(pivot);
    stack.push_back(std::move(zeros));
    stack.push_back(std::move(ones));  // popped first
  }

  return result;
}

Circuit restore_identity(const LinearFunction &l) {
  unsigned n = l.n;
  std::vector<Parity> a = l.rows;
  Circuit circ(n);
  // Reduce the frame to the identity by row operations; each operation
  // row[t] ^= row[c] is realised by appending CX(c,t).
  for (unsigned col = 0; col < n; ++col) {
    if (!a[col].test(col)) {
      unsigned pivot = n;
      for (unsigned r = col + 1; r < n; ++r) {
        if (a[r].test(col)) {
          pivot = r;
          break;
        }
      }
      if (pivot == n) {
        throw std::invalid_argument("restore_identity: singular matrix");
      }
      a[col] ^= a[pivot];
      circ.add_cx(pivot, col);
    }
    for (unsigned r = 0; r < n; ++r) {
      if (r != col && a[r].test(col)) {
        a[r] ^= a[col];
        circ.add_cx(col, r);
      }
    }
  }
  for (unsigned q = 0; q < n; ++q) assert(a[q].is_unit(q));
  return circ;
}

Circuit synth_diagonal(const std::vector<PauliTerm> &diagonal) {
  PhasePolynomial poly = extract(diagonal);
  GraySynthResult gray = gray_synth(poly);
  Circuit circ = gray.circuit;
  circ.append(restore_identity(gray.linear));
  return circ;
}

}  // namespace psyn
