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

#include "psyn/diagonalise.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "psyn/conjugate.hpp"

namespace psyn {

namespace {

// The common non-identity letter on qubit q, Pauli::I if the column is all
// identity, or nullopt if two distinct non-identity letters appear.
std::optional<Pauli> common_letter(
    const std::vector<PauliTerm> &terms, unsigned q) {
  Pauli common = Pauli::I;
  for (const PauliTerm &t : terms) {
    Pauli p = t.string.letter(q);
    if (p == Pauli::I) continue;
    if (common == Pauli::I) {
      common = p;
    } else if (common != p) {
      return std::nullopt;
    }
  }
  return common;
}

// Basis-change gate taking letter a to Z on qubit q, if one is needed.
std::optional<Gate> z_basis_gate(Pauli a, unsigned q) {
  switch (a) {
    case Pauli::X:
      return Gate::h(q);
    case Pauli::Y:
      return Gate::v(q);
    default:
      return std::nullopt;
  }
}

bool pair_relation_holds(
    const std::vector<PauliTerm> &terms, unsigned i, unsigned j, Pauli a,
    Pauli b) {
  for (const PauliTerm &t : terms) {
    Pauli pi = t.string.letter(i);
    Pauli pj = t.string.letter(j);
    bool in_a = pi == Pauli::I || pi == a;
    bool in_b = pj == Pauli::I || pj == b;
    if (in_a != in_b) return false;
  }
  return true;
}

void apply_to_all(std::vector<PauliTerm> &terms, const Gate &g) {
  for (PauliTerm &t : terms) t = conjugate_term(g, t);
}

[[maybe_unused]] bool column_diagonal(
    const std::vector<PauliTerm> &terms, unsigned q) {
  for (const PauliTerm &t : terms) {
    Pauli p = t.string.letter(q);
    if (p == Pauli::X || p == Pauli::Y) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<unsigned, Pauli>> find_trivial_qubit(
    const std::vector<PauliTerm> &terms, const std::vector<unsigned> &live) {
  for (unsigned q : live) {
    std::optional<Pauli> p = common_letter(terms, q);
    if (p) return std::make_pair(q, *p == Pauli::I ? Pauli::Z : *p);
  }
  return std::nullopt;
}

std::optional<CompatiblePair> find_compatible_pair(
    const std::vector<PauliTerm> &terms, const std::vector<unsigned> &live) {
  static constexpr Pauli kLetters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<unsigned> candidates;
  for (unsigned q : live) {
    if (!common_letter(terms, q)) candidates.push_back(q);
  }
  for (unsigned i : candidates) {
    for (unsigned j : candidates) {
      if (i == j) continue;
      for (Pauli a : kLetters) {
        for (Pauli b : kLetters) {
          if (pair_relation_holds(terms, i, j, a, b)) {
            return CompatiblePair{i, j, a, b};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Gate> diagonalise_pair(
    std::vector<PauliTerm> &terms, unsigned i, unsigned j, Pauli a, Pauli b) {
  if (i == j || a == Pauli::I || b == Pauli::I ||
      !pair_relation_holds(terms, i, j, a, b)) {
    throw std::invalid_argument(
        "diagonalise_pair: (i,j,A,B) is not a compatible pair for this set");
  }
  std::vector<Gate> applied;
  // Rotate A and B into the Z sector: terms with letter(i) in {I,A} then have
  // both letters in {I,Z}, all others have both letters in {X,Y}, which is
  // exactly the family CX conjugation sends to a diagonal target.
  if (auto g = z_basis_gate(a, i)) {
    apply_to_all(terms, *g);
    applied.push_back(*g);
  }
  if (auto g = z_basis_gate(b, j)) {
    apply_to_all(terms, *g);
    applied.push_back(*g);
  }
  Gate cx = Gate::cx(i, j);
  apply_to_all(terms, cx);
  applied.push_back(cx);
  assert(column_diagonal(terms, j));
  return applied;
}

std::pair<std::vector<Gate>, unsigned> greedy_step(
    std::vector<PauliTerm> &terms, const std::vector<unsigned> &live) {
  std::size_t best = terms.size();
  unsigned best_weight = 0;
  for (std::size_t l = 0; l < terms.size(); ++l) {
    unsigned w = 0;
    for (unsigned q : live) {
      if (terms[l].string.letter(q) != Pauli::I) ++w;
    }
    if (w >= 1 && (best == terms.size() || w < best_weight)) {
      best = l;
      best_weight = w;
    }
  }
  if (best == terms.size()) {
    throw std::logic_error(
        "greedy_step: no term acts on the live qubits (all live qubits "
        "should have been trivially diagonalised)");
  }
  std::vector<unsigned> support;
  for (unsigned q : live) {
    if (terms[best].string.letter(q) != Pauli::I) support.push_back(q);
  }
  std::vector<Gate> applied;
  for (unsigned q : support) {
    if (auto g = z_basis_gate(terms[best].string.letter(q), q)) {
      apply_to_all(terms, *g);
      applied.push_back(*g);
    }
  }
  // Collapse the all-Z live support with a CX chain onto the highest-index
  // support qubit; every term must still commute with the resulting single-Z
  // string, so that qubit ends up diagonal over the whole set.
  for (std::size_t k = 0; k + 1 < support.size(); ++k) {
    Gate cx = Gate::cx(support[k], support[k + 1]);
    apply_to_all(terms, cx);
    applied.push_back(cx);
  }
  unsigned target = support.back();
  assert(column_diagonal(terms, target));
  return {applied, target};
}

DiagonalisationResult diagonalise_set(const std::vector<PauliTerm> &terms) {
  if (terms.empty()) {
    return DiagonalisationResult{Circuit(0), {}, 0};
  }
  unsigned n = terms[0].string.size();
  for (const PauliTerm &t : terms) {
    if (t.string.size() != n) {
      throw std::invalid_argument(
          "diagonalise_set: mixed qubit counts in input set");
    }
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!commutes(terms[i].string, terms[j].string)) {
        throw std::invalid_argument(
            "diagonalise_set: input terms do not all commute (" +
            terms[i].string.to_string() + " anti-commutes with " +
            terms[j].string.to_string() + ")");
      }
    }
  }

  std::vector<PauliTerm> work = terms;
  std::vector<unsigned> live(n);
  for (unsigned q = 0; q < n; ++q) live[q] = q;
  Circuit applied(n);
  unsigned greedy_count = 0;

  auto remove_live = [&live](unsigned q) {
    live.erase(std::find(live.begin(), live.end(), q));
  };

  while (!live.empty()) {
    // Trivially diagonalisable qubits need at most one single-qubit Clifford.
    std::vector<unsigned> pass = live;
    for (unsigned q : pass) {
      std::optional<Pauli> p = common_letter(work, q);
      if (!p) continue;
      if (auto g = z_basis_gate(*p, q)) {
        apply_to_all(work, *g);
        applied.add(*g);
      }
      remove_live(q);
    }
    if (live.empty()) break;

    if (auto pair = find_compatible_pair(work, live)) {
      for (const Gate &g :
           diagonalise_pair(work, pair->i, pair->j, pair->a, pair->b)) {
        applied.add(g);
      }
      remove_live(pair->j);
    } else {
      auto [gates, q] = greedy_step(work, live);
      for (const Gate &g : gates) applied.add(g);
      remove_live(q);
      ++greedy_count;
    }
  }

  DiagonalisationResult result;
  result.clifford = applied.adjoint();
  result.greedy_steps = greedy_count;
  result.diagonal_terms.reserve(work.size());
  for (const PauliTerm &t : work) {
    assert(t.string.is_diagonal());
    result.diagonal_terms.emplace_back(t.string, t.folded_angle(), +1);
  }
  return result;
}

}  // namespace psyn
