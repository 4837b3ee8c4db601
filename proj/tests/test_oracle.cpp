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

#include <doctest.h>

#include <cmath>
#include <random>

#include "psyn/oracle.hpp"
#include "test_utils.hpp"

namespace psyn {
namespace {

TEST_CASE("unitary of empty circuit is the identity") {
  UnitaryMatrix u = unitary_of_circuit(Circuit(3));
  CHECK(max_abs_diff(u, UnitaryMatrix::identity(3)) == 0.0);
}

TEST_CASE("single-qubit gate matrices") {
  Circuit c(1);
  c.add(Gate::h(0));
  UnitaryMatrix u = unitary_of_circuit(c);
  double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(u.at(0, 0) - r) < 1e-15);
  CHECK(std::abs(u.at(0, 1) - r) < 1e-15);
  CHECK(std::abs(u.at(1, 0) - r) < 1e-15);
  CHECK(std::abs(u.at(1, 1) + r) < 1e-15);
}

TEST_CASE("CX twice is the identity") {
  Circuit c(2);
  c.add_cx(0, 1);
  c.add_cx(0, 1);
  CHECK(max_abs_diff(unitary_of_circuit(c), UnitaryMatrix::identity(2)) == 0);
}

TEST_CASE("CX matrix in the qubit-0-most-significant convention") {
  Circuit c(2);
  c.add_cx(0, 1);
  UnitaryMatrix u = unitary_of_circuit(c);
  // |10> -> |11>: column index 2 has its single entry at row 3.
  CHECK(std::abs(u.at(3, 2) - 1.0) < 1e-15);
  CHECK(std::abs(u.at(2, 3) - 1.0) < 1e-15);
  CHECK(std::abs(u.at(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(u.at(1, 1) - 1.0) < 1e-15);
}

TEST_CASE("S gate equals Rz(pi/2) up to phase and V equals Rx(pi/2)") {
  Circuit s(1), rz(1);
  s.add(Gate::s(0));
  rz.add_rz(std::acos(0.0), 0);  // pi/2
  CHECK(equiv_up_to_phase(unitary_of_circuit(s), unitary_of_circuit(rz), 1e-12));
}

TEST_CASE("pauli exponential closed form") {
  // theta = 0 gives the identity.
  UnitaryMatrix u0 =
      unitary_of_terms(2, {PauliTerm(PauliString("XY"), 0.0)});
  CHECK(max_abs_diff(u0, UnitaryMatrix::identity(2)) == 0.0);

  // exp(-i pi/2 Z) = diag(e^{-i pi/2}, e^{i pi/2}) = -iZ.
  UnitaryMatrix uz = unitary_of_terms(
      1, {PauliTerm(PauliString("Z"), 3.14159265358979323846)});
  CHECK(std::abs(uz.at(0, 0) - std::complex<double>(0, -1)) < 1e-12);
  CHECK(std::abs(uz.at(1, 1) - std::complex<double>(0, 1)) < 1e-12);
  CHECK(std::abs(uz.at(0, 1)) < 1e-12);

  // The sign flips the direction of rotation.
  UnitaryMatrix up = unitary_of_terms(1, {PauliTerm(PauliString("X"), 0.7)});
  UnitaryMatrix um =
      unitary_of_terms(1, {PauliTerm(PauliString("X"), -0.7, -1)});
  CHECK(max_abs_diff(up, um) < 1e-15);
}

TEST_CASE("products of commuting terms are order-independent") {
  std::mt19937 rng(31);
  std::vector<PauliTerm> terms = testing::random_commuting_set(4, 6, rng);
  std::vector<PauliTerm> reversed(terms.rbegin(), terms.rend());
  CHECK(
      max_abs_diff(unitary_of_terms(4, terms), unitary_of_terms(4, reversed)) <
      1e-12);
}

TEST_CASE("rz gate matches the Z exponential") {
  Circuit c(3);
  c.add_rz(1.234, 1);
  UnitaryMatrix expected =
      unitary_of_terms(3, {PauliTerm(PauliString("IZI"), 1.234)});
  CHECK(max_abs_diff(unitary_of_circuit(c), expected) < 1e-15);
}

TEST_CASE("equiv_up_to_phase accepts phases and rejects different operators") {
  std::mt19937 rng(41);
  std::vector<Gate> gates = testing::random_clifford_gates(2, 12, rng);
  Circuit c(2);
  for (const Gate &g : gates) c.add(g);
  UnitaryMatrix u = unitary_of_circuit(c);
  CHECK(equiv_up_to_phase(u, u, 1e-12));

  UnitaryMatrix phased = u;
  std::complex<double> lambda = std::exp(std::complex<double>(0, 0.8321));
  for (std::size_t r = 0; r < phased.dim(); ++r) {
    for (std::size_t col = 0; col < phased.dim(); ++col) {
      phased.at(r, col) *= lambda;
    }
  }
  CHECK(equiv_up_to_phase(phased, u, 1e-12));

  Circuit x(1);
  x.add(Gate::x(0));
  CHECK_FALSE(equiv_up_to_phase(
      UnitaryMatrix::identity(1), unitary_of_circuit(x), 1e-9));
  CHECK_THROWS_AS(
      equiv_up_to_phase(u, UnitaryMatrix::identity(1), 1e-9),
      std::invalid_argument);
}

TEST_CASE("circuit unitaries are unitary and respect composition laws") {
  std::mt19937 rng(59);
  std::vector<Gate> gates = testing::random_clifford_gates(3, 20, rng);
  Circuit a(3), b(3);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    ((i % 2) ? a : b).add(gates[i]);
  }
  a.add_rz(0.37, 2);
  CHECK(unitary_of_circuit(a).is_unitary());
  UnitaryMatrix lhs = unitary_of_circuit(compose(a, b));
  UnitaryMatrix rhs = unitary_of_circuit(b) * unitary_of_circuit(a);
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  CHECK(
      max_abs_diff(
          unitary_of_circuit(a.adjoint()), unitary_of_circuit(a).dagger()) <
      1e-12);
}

TEST_CASE("oracle rejects oversized qubit counts") {
  CHECK_THROWS_AS(UnitaryMatrix::identity(12), std::invalid_argument);
}

TEST_CASE("small-set compatibility holds at m=3 and breaks at m=4") {
  CompatibilityCheckReport report = check_small_set_compatibility();
  CHECK(report.passed);
  CHECK(report.violations == 0);
  CHECK(report.detail.find("m=4") != std::string::npos);
}

TEST_CASE("four-qubit compatibility checker smoke run") {
  CompatibilityCheckReport report = check_four_qubit_compatibility(false, 3000, 13);
  CHECK(report.passed);
  CHECK(report.sets_checked > 0);
  CHECK(report.violations == 0);
}

}  // namespace
}  // namespace psyn
