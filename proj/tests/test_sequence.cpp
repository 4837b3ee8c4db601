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

#include <algorithm>
#include <random>
#include <set>

#include "psyn/sequence.hpp"
#include "test_utils.hpp"

namespace psyn {
namespace {

using testing::term;

std::vector<PauliTerm> terms_from(const std::vector<std::string> &strings) {
  std::vector<PauliTerm> out;
  double angle = 0.1;
  for (const std::string &s : strings) out.push_back(term(s, angle += 0.1));
  return out;
}

TEST_CASE("build_graph edges are exactly anti-commutations") {
  std::vector<PauliTerm> terms = terms_from({"IIXY", "IIYX", "XYII", "YXII"});
  PauliGraph g = build_graph(terms);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = 0; j < terms.size(); ++j) {
      CHECK_FALSE(g.adjacency[i][j]);  // these four commute pairwise
    }
  }

  PauliGraph single = build_graph(terms_from({"XX"}));
  CHECK(single.vertices.size() == 1);
  CHECK_FALSE(single.adjacency[0][0]);

  PauliGraph dup = build_graph(terms_from({"XZ", "XZ"}));
  CHECK_FALSE(dup.adjacency[0][1]);  // identical strings commute

  CHECK_THROWS_AS(
      build_graph(terms_from({"XZ", "XZI"})), std::invalid_argument);
}

TEST_CASE("greedy colouring basics") {
  // Edgeless graph: one set.
  CommutingPartition p1 =
      greedy_color(build_graph(terms_from({"IIXY", "IIYX", "XYII", "YXII"})));
  CHECK(p1.sets.size() == 1);
  CHECK(p1.sets[0].size() == 4);

  // Pairwise anti-commuting strings need one colour each.
  CommutingPartition p2 = greedy_color(build_graph(terms_from({"X", "Y", "Z"})));
  CHECK(p2.sets.size() == 3);
  for (const auto &set : p2.sets) CHECK(set.size() == 1);
}

TEST_CASE("partition covers the input with mutually commuting sets") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PauliTerm> terms = testing::random_terms(5, 12, rng);
    PauliGraph g = build_graph(terms);
    CommutingPartition p = greedy_color(g);

    std::size_t total = 0;
    std::multiset<std::string> seen, expected;
    unsigned max_degree = 0;
    for (std::size_t v = 0; v < terms.size(); ++v) {
      expected.insert(terms[v].string.to_string());
      unsigned degree = 0;
      for (std::size_t u = 0; u < terms.size(); ++u) {
        if (g.adjacency[v][u]) ++degree;
      }
      max_degree = std::max(max_degree, degree);
    }
    for (const auto &set : p.sets) {
      total += set.size();
      for (const PauliTerm &t : set) seen.insert(t.string.to_string());
      for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
          CHECK(commutes(set[i].string, set[j].string));
        }
      }
    }
    CHECK(total == terms.size());
    CHECK(seen == expected);
    CHECK(p.sets.size() <= std::size_t{max_degree} + 1);
  }
}

TEST_CASE("sequence flattens colour by colour in lexicographic order") {
  CommutingPartition p;
  p.sets = {{term("ZZ", 0.1), term("IX", 0.2)}};
  std::vector<PauliTerm> seq = sequence(p);
  REQUIRE(seq.size() == 2);
  CHECK(seq[0].string.to_string() == "IX");
  CHECK(seq[1].string.to_string() == "ZZ");

  CHECK(sequence(CommutingPartition{}).empty());
}

TEST_CASE("the twelve-string example partitions into the published ordering") {
  std::vector<std::string> strings = {
      "IIXY", "IIYX", "XYII", "YXII", "XXXY", "XXYX",
      "XYXX", "XYYY", "YXXX", "YXYY", "YYXY", "YYYX"};
  std::vector<PauliTerm> seq =
      sequence(greedy_color(build_graph(terms_from(strings))));
  REQUIRE(seq.size() == 12);
  std::vector<std::string> got;
  for (const PauliTerm &t : seq) got.push_back(t.string.to_string());
  CHECK(got == strings);
}

}  // namespace
}  // namespace psyn
