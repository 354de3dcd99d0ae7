// Copyright 2026 The qgraph Authors
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

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qgraph/io.hpp"
#include "test_support.hpp"

using namespace qgraph;

namespace {

LabeledGraph parse_str(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

}  // namespace

TEST_CASE("graph text round trip") {
  test_support::Rng rng(73);
  for (Residue p : {2u, 3u, 7u}) {
    Fp f(p);
    for (int trial = 0; trial < 10; ++trial) {
      LabeledGraph g = test_support::random_graph(rng, f, 1 + rng.below(5));
      CHECK(parse_str(format_graph(g)) == g);
    }
  }
}

TEST_CASE("graph text parsing errors") {
  CHECK_THROWS_AS(parse_str(""), ParseError);
  CHECK_THROWS_AS(parse_str("4 3\n"), ParseError);       // non-prime modulus
  CHECK_THROWS_AS(parse_str("3\n"), ParseError);         // missing n
  CHECK_THROWS_AS(parse_str("3 2 9\n"), ParseError);     // trailing token
  CHECK_THROWS_AS(parse_str("3 2\n0 0 1\n"), ParseError);  // self-loop
  CHECK_THROWS_AS(parse_str("3 2\n0 5 1\n"), ParseError);  // vertex range
  CHECK_THROWS_AS(parse_str("3 2\n0 1 0\n"), ParseError);  // zero label
  CHECK_THROWS_AS(parse_str("3 2\n0 1 3\n"), ParseError);  // label >= p
  CHECK_THROWS_AS(parse_str("3 2\n0 1 1\n1 0 2\n"), ParseError);  // dup pair
  CHECK_THROWS_AS(parse_str("3 2\n0 1 1 7\n"), ParseError);  // extra column

  LabeledGraph g = parse_str("5 3\n0 2 4\n\n1 2 1\n");
  CHECK(g.label(0, 2) == 4);
  CHECK(g.label(1, 2) == 1);
  CHECK(g.label(0, 1) == 0);
}

TEST_CASE("graph JSON mirror") {
  LabeledGraph g = parse_str(R"({"p":3,"n":3,"edges":[[0,1,2],[1,2,1]]})");
  CHECK(g.field().modulus() == 3);
  CHECK(g.label(0, 1) == 2);

  // JSON emitted by graph_to_json parses back identically
  std::istringstream in(graph_to_json(g).dump());
  CHECK(parse_graph(in) == g);

  CHECK_THROWS_AS(parse_str(R"({"p":3})"), ParseError);
  CHECK_THROWS_AS(parse_str(R"({"p":3,"n":2,"edges":[[0,1]]})"), ParseError);
  CHECK_THROWS_AS(parse_str("{not json"), ParseError);
}

TEST_CASE("generator matrix round trip") {
  test_support::Rng rng(79);
  Fp f5(5);
  for (int trial = 0; trial < 8; ++trial) {
    GeneratorMatrix gm =
        test_support::random_generator_matrix(rng, f5, 1 + rng.below(4));
    std::istringstream in(format_generator_matrix(gm));
    GeneratorMatrix back = parse_generator_matrix(in);
    CHECK(back.n == gm.n);
    CHECK(back.k == gm.k);
    CHECK(back.a == gm.a);
  }
  std::istringstream bad("3 2 1\n1 0 0");
  CHECK_THROWS_AS(parse_generator_matrix(bad), ParseError);
}

TEST_CASE("witness JSON round trip") {
  Fp f3(3);
  LabeledGraph e1(f3, 2), e2(f3, 2);
  e1.set_label(0, 1, 1);
  e2.set_label(0, 1, 2);
  EquivalenceVerdict v = are_equivalent(e1, e2);
  REQUIRE(v.witness.has_value());
  Witness back = witness_from_json(f3, witness_to_json(*v.witness));
  CHECK(verify_witness(e1, e2, back));
  CHECK_THROWS_AS(witness_from_json(f3, json{{"E", {1}}}), ParseError);
}
