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

#include "qgraph/field.hpp"
#include "test_support.hpp"

using namespace qgraph;

TEST_CASE("modulus validation") {
  CHECK_NOTHROW(Fp(2));
  CHECK_NOTHROW(Fp(32749));  // largest prime below 2^15
  CHECK_THROWS_AS(Fp(1), InvalidParameter);
  CHECK_THROWS_AS(Fp(4), InvalidParameter);
  CHECK_THROWS_AS(Fp(32768), InvalidParameter);
  CHECK_THROWS_AS(Fp(32771), InvalidParameter);  // prime but >= 2^15
}

TEST_CASE("field element inverse") {
  CHECK(Fp(5).inv(2) == 3);
  CHECK(Fp(7).inv(1) == 1);
  CHECK(Fp(7).inv(4) == 2);
  CHECK_THROWS_AS(Fp(5).inv(0), NotInvertible);

  // exhaustive a * inv(a) == 1
  for (Residue p : {2u, 3u, 5u, 7u, 11u}) {
    Fp f(p);
    for (Residue a = 1; a < p; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("rref basics") {
  Fp f3(3);
  auto id = FieldMatrix::identity(f3, 4);
  RrefResult r = rref(id);
  CHECK(r.matrix == id);
  CHECK(r.rank == 4);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2, 3});

  FieldMatrix zero(f3, 3, 3);
  r = rref(zero);
  CHECK(r.matrix == zero);
  CHECK(r.rank == 0);
  CHECK(r.pivots.empty());

  // [[1,1],[2,2]] over F_3: row 2 = 2 * row 1
  FieldMatrix m(f3, 2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 0) = 2;
  m.at(1, 1) = 2;
  r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref is idempotent on random matrices") {
  test_support::Rng rng(1234);
  for (int trial = 0; trial < 50; ++trial) {
    Fp f(trial % 2 ? 3 : 7);
    FieldMatrix m = test_support::random_matrix(rng, f, 1 + rng.below(5), 1 + rng.below(6));
    FieldMatrix once = rref(m).matrix;
    CHECK(rref(once).matrix == once);
  }
}

TEST_CASE("nullspace basics") {
  Fp f3(3);
  CHECK(nullspace_basis(FieldMatrix::identity(f3, 3)).empty());

  FieldMatrix row(f3, 1, 2);
  row.at(0, 0) = 1;
  row.at(0, 1) = 1;
  auto basis = nullspace_basis(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == FieldVector{1, 2});  // leading entry normalized

  FieldMatrix zero(f3, 2, 2);
  basis = nullspace_basis(zero);
  REQUIRE(basis.size() == 2);
  FieldMatrix span(f3, 2, 2);
  span.set_row(0, basis[0]);
  span.set_row(1, basis[1]);
  CHECK(rank(span) == 2);
}

TEST_CASE("rank-nullity and exact kernel membership") {
  test_support::Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Fp f(trial % 3 == 0 ? 2 : (trial % 3 == 1 ? 3 : 5));
    FieldMatrix m = test_support::random_matrix(rng, f, 1 + rng.below(5), 1 + rng.below(6));
    auto basis = nullspace_basis(m);
    CHECK(rank(m) + basis.size() == m.cols());
    for (const FieldVector& v : basis)
      CHECK(m.apply(v) == FieldVector(m.rows(), 0));
  }
}

TEST_CASE("matrix inverse") {
  Fp f5(5);
  auto id = FieldMatrix::identity(f5, 3);
  CHECK(invert_matrix(id) == id);

  FieldMatrix d(f5, 2, 2);
  d.at(0, 0) = 2;
  d.at(1, 1) = 1;
  FieldMatrix dinv = invert_matrix(d);
  CHECK(dinv.at(0, 0) == 3);
  CHECK(dinv.at(1, 1) == 1);

  Fp f3(3);
  FieldMatrix u(f3, 2, 2);
  u.at(0, 0) = 1;
  u.at(0, 1) = 1;
  u.at(1, 1) = 1;
  FieldMatrix uinv = invert_matrix(u);
  CHECK(uinv.at(0, 0) == 1);
  CHECK(uinv.at(0, 1) == 2);
  CHECK(uinv.at(1, 0) == 0);
  CHECK(uinv.at(1, 1) == 1);
  CHECK(u * uinv == FieldMatrix::identity(f3, 2));

  FieldMatrix sing(f3, 2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 2;
  CHECK_THROWS_AS(invert_matrix(sing), NotInvertible);
}
