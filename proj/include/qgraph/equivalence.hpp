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

#pragma once

// Local-equivalence decision for graph states over F_p, p odd.
//
// The orthogonality conditions between (Id | N) and (Id | M) Y form a
// linear system in the 4n diagonal entries of Y. A witness is any kernel
// vector that additionally satisfies the per-index determinant condition
// E x F' - E' x F = (1, ..., 1); when the graphs are equivalent one is
// always reachable as a combination of at most 5 kernel basis vectors,
// so the bounded search is complete. The orbit BFS brute force serves as
// an independent oracle and as the p = 2 fallback.

#include <cstddef>
#include <optional>
#include <vector>

#include "qgraph/errors.hpp"
#include "qgraph/field.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/stabilizer.hpp"

namespace qgraph {

constexpr std::size_t kWitnessSearchDepth = 5;

struct Witness {
  LocalCliffordDiag y;
};

/// n^2 x 4n coefficient matrix, one row per ordered pair (i, j) including
/// i = j, columns ordered [E | F | E' | F']. Row (i, j) encodes
///   E.(delta_i x N_j) - F.(delta_i x delta_j)
///   + E'.(M_i x N_j) - F'.(M_i x delta_j) = 0.
inline FieldMatrix build_system(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.field() != h.field()) throw InvalidInput("moduli differ");
  if (g.size() != h.size()) throw InvalidInput("vertex counts differ");
  const Fp f = g.field();
  if (!f.odd()) throw UnsupportedModulus("equivalence system requires odd p");
  const std::size_t n = g.size();
  FieldMatrix sys(f, n * n, 4 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        Residue mi = g.label(i, k), nj = h.label(j, k);
        Residue di = (k == i) ? 1 : 0, dj = (k == j) ? 1 : 0;
        sys.at(r, k) = f.mul(di, nj);                    // E
        sys.at(r, n + k) = f.neg(f.mul(di, dj));         // F
        sys.at(r, 2 * n + k) = f.mul(mi, nj);            // E'
        sys.at(r, 3 * n + k) = f.neg(f.mul(mi, dj));     // F'
      }
    }
  return sys;
}

namespace detail {

/// E x F' - E' x F == all-ones, on a packed [E | F | E' | F'] vector.
inline bool satisfies_det_condition(const Fp& f, const FieldVector& v,
                                    std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    Residue det = f.sub(f.mul(v[i], v[3 * n + i]), f.mul(v[2 * n + i], v[n + i]));
    if (det != 1) return false;
  }
  return true;
}

inline std::optional<Witness> witness_from_vector(const Fp& f,
                                                  const FieldVector& v,
                                                  std::size_t n) {
  if (!satisfies_det_condition(f, v, n)) return std::nullopt;
  FieldVector E(v.begin(), v.begin() + n);
  FieldVector F(v.begin() + n, v.begin() + 2 * n);
  FieldVector Ep(v.begin() + 2 * n, v.begin() + 3 * n);
  FieldVector Fp_(v.begin() + 3 * n, v.end());
  return Witness{LocalCliffordDiag(f, std::move(E), std::move(F), std::move(Ep),
                                   std::move(Fp_))};
}

}  // namespace detail

/// Enumerate combinations of at most kWitnessSearchDepth basis vectors
/// (subsets in lexicographic order, coefficients odometer with the first
/// coefficient nonzero) and return the first satisfying the determinant
/// condition. Deterministic by construction.
inline std::optional<Witness> search_witness(const std::vector<FieldVector>& basis,
                                             const Fp& f, std::size_t n) {
  const std::size_t b = basis.size();
  const Residue p = f.modulus();
  const std::size_t len = 4 * n;

  std::vector<std::size_t> subset;
  std::optional<Witness> found;

  // Coefficient odometer for the fixed subset: the first coefficient is
  // nonzero (a zero there duplicates a lexicographically earlier subset),
  // later positions range over all of F_p.
  auto sweep = [&](auto&& self, std::size_t pos, const FieldVector& acc) -> bool {
    if (pos == subset.size()) {
      found = detail::witness_from_vector(f, acc, n);
      return found.has_value();
    }
    const FieldVector& v = basis[subset[pos]];
    FieldVector cur = acc;
    Residue start = (pos == 0) ? 1 : 0;
    if (start == 1)
      for (std::size_t t = 0; t < len; ++t) cur[t] = f.add(cur[t], v[t]);
    for (Residue c = start; c < p; ++c) {
      if (self(self, pos + 1, cur)) return true;
      if (c + 1 < p)
        for (std::size_t t = 0; t < len; ++t) cur[t] = f.add(cur[t], v[t]);
    }
    return false;
  };

  // Subsets in lexicographic (DFS prefix) order, size capped at the
  // completeness bound.
  auto extend = [&](auto&& self, std::size_t next) -> bool {
    if (!subset.empty() && sweep(sweep, 0, FieldVector(len, 0))) return true;
    if (subset.size() == kWitnessSearchDepth) return false;
    for (std::size_t idx = next; idx < b; ++idx) {
      subset.push_back(idx);
      if (self(self, idx + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  extend(extend, 0);
  return found;
}

/// Independent of how the witness was found: per-index determinants must
/// all be 1, and every row of (Id | N) must be symplectically orthogonal
/// to every row of (Id | M) Y.
inline bool verify_witness(const LabeledGraph& g, const LabeledGraph& h,
                           const Witness& w) {
  const Fp f = g.field();
  const std::size_t n = g.size();
  if (h.size() != n || h.field() != f || w.y.qupits() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Residue det = f.sub(f.mul(w.y.e[i], w.y.fp[i]), f.mul(w.y.fvec[i], w.y.ep[i]));
    if (det != 1) return false;
  }
  FieldMatrix my = GeneratorMatrix::graph_form(g).a * w.y.matrix();
  FieldMatrix nb = GeneratorMatrix::graph_form(h).a;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (symplectic_product(f, nb.row(i), my.row(j)) != 0) return false;
  return true;
}

struct EquivalenceVerdict {
  bool equivalent;
  std::optional<Witness> witness;
};

bool are_equivalent_components(const LabeledGraph& g, const LabeledGraph& h);

/// Decide local equivalence via the linear system + bounded witness
/// search. Connected inputs get a witness; disconnected inputs are routed
/// to the componentwise check (no global witness in that case).
inline EquivalenceVerdict are_equivalent(const LabeledGraph& g,
                                         const LabeledGraph& h) {
  if (g.field() != h.field()) throw InvalidInput("moduli differ");
  if (g.size() != h.size()) throw InvalidInput("vertex counts differ");
  if (!g.field().odd())
    throw UnsupportedModulus("are_equivalent requires odd p; use the orbit oracle");
  if (!is_connected(g) || !is_connected(h))
    return {are_equivalent_components(g, h), std::nullopt};
  FieldMatrix sys = build_system(g, h);
  std::vector<FieldVector> basis = nullspace_basis(sys);
  std::optional<Witness> w = search_witness(basis, g.field(), g.size());
  if (!w) return {false, std::nullopt};
  return {true, std::move(w)};
}

namespace detail {

inline LabeledGraph induced_subgraph(const LabeledGraph& g,
                                     const std::vector<Vertex>& verts) {
  LabeledGraph sub(g.field(), verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      sub.set_label(i, j, g.label(verts[i], verts[j]));
  return sub;
}

}  // namespace detail

/// Componentwise equivalence. Components are matched only when their
/// vertex sets are identical as index sets (local moves never relabel
/// vertices), then each matched pair is compared after index compaction.
inline bool are_equivalent_components(const LabeledGraph& g,
                                      const LabeledGraph& h) {
  if (g.field() != h.field() || g.size() != h.size()) return false;
  auto cg = connected_components(g);
  auto ch = connected_components(h);
  if (cg != ch) return false;
  for (const auto& comp : cg) {
    if (comp.size() == 1) continue;
    LabeledGraph a = detail::induced_subgraph(g, comp);
    LabeledGraph b = detail::induced_subgraph(h, comp);
    if (!are_equivalent(a, b).equivalent) return false;
  }
  return true;
}

/// Orbit BFS oracle: h lies in the closure of g under all local moves.
inline bool equivalent_bruteforce(const LabeledGraph& g, const LabeledGraph& h,
                                  std::size_t limit = kOrbitStateLimit) {
  if (g.field() != h.field() || g.size() != h.size()) return false;
  return orbit_keys(g, limit).count(h.encode()) > 0;
}

}  // namespace qgraph
