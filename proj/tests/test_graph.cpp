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

#include "qgraph/graph.hpp"
#include "test_support.hpp"

using namespace qgraph;

namespace {

LabeledGraph triangle(Fp f, Residue label = 1) {
  LabeledGraph g(f, 3);
  g.set_label(0, 1, label);
  g.set_label(0, 2, label);
  g.set_label(1, 2, label);
  return g;
}

LabeledGraph path3(Fp f) {
  LabeledGraph g(f, 3);
  g.set_label(0, 1, 1);
  g.set_label(1, 2, 1);
  return g;
}

LabeledGraph complete(Fp f, std::size_t n) {
  LabeledGraph g(f, n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.set_label(i, j, 1);
  return g;
}

/// Independent reference for p=2 local complementation: complement the
/// subgraph induced by the neighborhood of v, edge by edge.
LabeledGraph classical_local_complement(const LabeledGraph& g, Vertex v) {
  LabeledGraph r = g;
  std::vector<Vertex> nbrs;
  for (Vertex u = 0; u < g.size(); ++u)
    if (g.label(v, u) != 0) nbrs.push_back(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      r.set_label(nbrs[i], nbrs[j], 1 - g.label(nbrs[i], nbrs[j]));
  return r;
}

}  // namespace

TEST_CASE("label matrix invariants enforced") {
  Fp f3(3);
  FieldMatrix bad(f3, 2, 2);
  bad.at(0, 0) = 1;
  CHECK_THROWS_AS(LabeledGraph(f3, bad), InvalidInput);
  FieldMatrix asym(f3, 2, 2);
  asym.at(0, 1) = 1;
  CHECK_THROWS_AS(LabeledGraph(f3, asym), InvalidInput);
}

TEST_CASE("scale_op") {
  Fp f5(5);
  LabeledGraph t = triangle(f5);
  LabeledGraph s = scale_op(t, 0, 2);
  CHECK(s.label(0, 1) == 2);
  CHECK(s.label(0, 2) == 2);
  CHECK(s.label(1, 2) == 1);

  CHECK(scale_op(t, 1, 1) == t);

  Fp f3(3);
  LabeledGraph e(f3, 2);
  e.set_label(0, 1, 1);
  CHECK(scale_op(e, 0, 2).label(0, 1) == 2);

  CHECK_THROWS_AS(scale_op(t, 0, 0), InvalidParameter);
}

TEST_CASE("complement_op") {
  Fp f3(3);
  LabeledGraph p = path3(f3);
  LabeledGraph c = complement_op(p, 1, 1);
  CHECK(c == triangle(f3));

  CHECK(complement_op(p, 0, 0) == p);
}

TEST_CASE("complement_op at p=2 is classical local complementation") {
  Fp f2(2);
  // exhaustive over all graphs with n <= 4
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t pairs = n * (n - 1) / 2;
    for (std::size_t mask = 0; mask < (1u << pairs); ++mask) {
      LabeledGraph g(f2, n);
      std::size_t bit = 0;
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
          g.set_label(i, j, (mask >> bit++) & 1);
      for (Vertex v = 0; v < n; ++v)
        CHECK(complement_op(g, v, 1) == classical_local_complement(g, v));
    }
  }
}

TEST_CASE("zero_star") {
  Fp f3(3);
  LabeledGraph e(f3, 2);
  e.set_label(0, 1, 1);
  CHECK(zero_star(e, 0) == LabeledGraph(f3, 2));

  LabeledGraph iso(f3, 1);
  CHECK(zero_star(iso, 0) == iso);

  LabeledGraph t = triangle(f3);
  LabeledGraph d0 = zero_star(t, 0);
  CHECK(d0.label(1, 2) == 1);
  CHECK(d0.label(0, 1) == 0);
  CHECK(d0.label(0, 2) == 0);
}

TEST_CASE("operator composition laws") {
  test_support::Rng rng(7);
  for (Residue p : {3u, 5u}) {
    Fp f(p);
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 2 + rng.below(3);
      LabeledGraph g = test_support::random_graph(rng, f, n);
      Vertex v = rng.below(n);
      Residue b = rng.nonzero(f), b2 = rng.nonzero(f);
      CHECK(scale_op(scale_op(g, v, b), v, b2) == scale_op(g, v, f.mul(b, b2)));
      CHECK(scale_op(scale_op(g, v, b), v, f.inv(b)) == g);

      Residue a = rng.residue(f), a2 = rng.residue(f);
      CHECK(complement_op(complement_op(g, v, a), v, a2) ==
            complement_op(g, v, f.add(a, a2)));
      LabeledGraph rep = g;
      for (Residue k = 0; k < p; ++k) rep = complement_op(rep, v, a);
      CHECK(rep == g);

      // zero/nonzero adjacency pattern at v and component structure survive
      LabeledGraph m1 = scale_op(g, v, b), m2 = complement_op(g, v, a);
      for (Vertex u = 0; u < n; ++u) {
        CHECK((m1.label(v, u) != 0) == (g.label(v, u) != 0));
        CHECK((m2.label(v, u) != 0) == (g.label(v, u) != 0));
      }
      CHECK(connected_components(m1) == connected_components(g));
      CHECK(connected_components(m2) == connected_components(g));
    }
  }
}

TEST_CASE("connected components") {
  Fp f3(3);
  CHECK(connected_components(LabeledGraph(f3, 3)).size() == 3);
  CHECK(connected_components(triangle(f3)).size() == 1);
  LabeledGraph g(f3, 3);
  g.set_label(0, 1, 2);
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<Vertex>{0, 1});
  CHECK(comps[1] == std::vector<Vertex>{2});
}

TEST_CASE("isomorphism") {
  Fp f3(3);
  LabeledGraph p = path3(f3);
  auto self = is_isomorphic(p, p);
  REQUIRE(self.has_value());
  CHECK(*self == std::vector<Vertex>{0, 1, 2});

  // path relabeled: 1-0-2 (center at 0)
  LabeledGraph q(f3, 3);
  q.set_label(1, 0, 1);
  q.set_label(0, 2, 1);
  auto w = is_isomorphic(p, q);
  REQUIRE(w.has_value());
  for (Vertex i = 0; i < 3; ++i)
    for (Vertex j = 0; j < 3; ++j)
      CHECK(p.label((*w)[i], (*w)[j]) == q.label(i, j));

  Fp f2(2);
  LabeledGraph path4(f2, 4), star4(f2, 4);
  path4.set_label(0, 1, 1);
  path4.set_label(1, 2, 1);
  path4.set_label(2, 3, 1);
  star4.set_label(0, 1, 1);
  star4.set_label(0, 2, 1);
  star4.set_label(0, 3, 1);
  CHECK_FALSE(is_isomorphic(path4, star4).has_value());
}

TEST_CASE("orbit sizes") {
  Fp f2(2);
  CHECK(orbit(complete(f2, 4)).size() == 5);
  CHECK(orbit(LabeledGraph(f2, 3)).size() == 1);

  Fp f3(3);
  CHECK(orbit(LabeledGraph(f3, 4)).size() == 1);
  LabeledGraph e(f3, 2);
  e.set_label(0, 1, 1);
  auto orb = orbit(e);
  REQUIRE(orb.size() == 2);
  // the two labelings of the single edge
  CHECK(orb[0].label(0, 1) + orb[1].label(0, 1) == 3);
}

TEST_CASE("orbit is independent of expansion order") {
  // second ordering: complement moves before scale moves, descending coeffs
  test_support::Rng rng(42);
  Fp f3(3);
  for (int trial = 0; trial < 5; ++trial) {
    LabeledGraph g = test_support::random_graph(rng, f3, 3);
    auto keys = orbit_keys(g);

    std::set<std::string> alt;
    std::vector<LabeledGraph> frontier{g};
    alt.insert(g.encode());
    while (!frontier.empty()) {
      std::vector<LabeledGraph> next;
      for (const LabeledGraph& cur : frontier)
        for (std::size_t vi = cur.size(); vi-- > 0;)
          for (Residue c = f3.modulus() - 1; c >= 1; --c)
            for (LabeledGraph moved : {complement_op(cur, vi, c), scale_op(cur, vi, c)})
              if (alt.insert(moved.encode()).second) next.push_back(std::move(moved));
      frontier = std::move(next);
    }
    CHECK(alt == keys);
  }
}

TEST_CASE("orbit guard") {
  Fp f2(2);
  CHECK_THROWS_AS(orbit_keys(complete(f2, 5), 3), ResourceLimit);
}
