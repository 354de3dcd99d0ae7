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

// Labeled graphs over F_p and the local rewrite operators:
//   scale_op      (circ_b v)  -- multiply every edge label at v by b != 0
//   complement_op (star_a v)  -- add a * M[v][j] * M[v][k] to each edge {j,k}
//   zero_star     (d(v))      -- zero every edge label at v
// plus brute-force oracles: backtracking isomorphism and BFS orbit closure.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qgraph/errors.hpp"
#include "qgraph/field.hpp"

namespace qgraph {

using Vertex = std::size_t;

/// Graph on n vertices with edge labels in F_p: a symmetric label matrix
/// with zero diagonal. Label 0 means "no edge".
class LabeledGraph {
 public:
  LabeledGraph(Fp field, std::size_t n)
      : field_(field), n_(n), m_(field, n, n) {}

  LabeledGraph(Fp field, FieldMatrix m) : field_(field), n_(m.rows()), m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw InvalidInput("label matrix must be square");
    check_invariants();
  }

  const Fp& field() const { return field_; }
  std::size_t size() const { return n_; }
  const FieldMatrix& labels() const { return m_; }

  Residue label(Vertex u, Vertex v) const { return m_.at(u, v); }

  void set_label(Vertex u, Vertex v, Residue w) {
    if (u == v) throw InvalidInput("self-loops are not allowed");
    w %= field_.modulus();
    m_.at(u, v) = w;
    m_.at(v, u) = w;
  }

  bool operator==(const LabeledGraph& o) const {
    return n_ == o.n_ && m_ == o.m_;
  }
  bool operator!=(const LabeledGraph& o) const { return !(*this == o); }

  /// Upper-triangle labels in row-major order, one byte per entry.
  /// Injective for fixed (p, n); used as the orbit dedup key.
  std::string encode() const {
    std::string key;
    key.reserve(n_ * (n_ - 1) / 2);
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex j = i + 1; j < n_; ++j)
        key.push_back(static_cast<char>(m_.at(i, j)));
    return key;
  }

  static LabeledGraph decode(Fp field, std::size_t n, const std::string& key) {
    LabeledGraph g(field, n);
    std::size_t k = 0;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        g.set_label(i, j, static_cast<unsigned char>(key.at(k++)));
    return g;
  }

  void check_invariants() const {
    for (Vertex i = 0; i < n_; ++i) {
      if (m_.at(i, i) != 0) throw InvalidInput("nonzero diagonal in label matrix");
      for (Vertex j = 0; j < n_; ++j)
        if (m_.at(i, j) != m_.at(j, i))
          throw InvalidInput("label matrix not symmetric");
    }
  }

 private:
  Fp field_;
  std::size_t n_;
  FieldMatrix m_;
};

/// circ_b v: conjugate the label matrix by diag(1,..,b,..,1). Only labels
/// at v change (each multiplied by b); the diagonal stays zero.
inline LabeledGraph scale_op(const LabeledGraph& g, Vertex v, Residue b) {
  const Fp f = g.field();
  b %= f.modulus();
  if (b == 0) throw InvalidParameter("scale_op requires b != 0");
  if (v >= g.size()) throw InvalidParameter("vertex out of range");
  LabeledGraph r = g;
  for (Vertex j = 0; j < g.size(); ++j)
    if (j != v) r.set_label(v, j, f.mul(b, g.label(v, j)));
  return r;
}

/// star_a v: generalized local complementation of the neighborhood of v.
/// a = 0 is allowed and is the identity.
inline LabeledGraph complement_op(const LabeledGraph& g, Vertex v, Residue a) {
  const Fp f = g.field();
  a %= f.modulus();
  if (v >= g.size()) throw InvalidParameter("vertex out of range");
  LabeledGraph r = g;
  for (Vertex j = 0; j < g.size(); ++j)
    for (Vertex k = j + 1; k < g.size(); ++k)
      r.set_label(j, k, f.add(g.label(j, k),
                              f.mul(a, f.mul(g.label(v, j), g.label(v, k)))));
  return r;
}

/// d(v): zero row and column v, decoupling the vertex.
inline LabeledGraph zero_star(const LabeledGraph& g, Vertex v) {
  if (v >= g.size()) throw InvalidParameter("vertex out of range");
  LabeledGraph r = g;
  for (Vertex j = 0; j < g.size(); ++j)
    if (j != v) r.set_label(v, j, 0);
  return r;
}

/// Components under the relation "label(i,j) != 0", each sorted, ordered
/// by smallest member.
inline std::vector<std::vector<Vertex>> connected_components(const LabeledGraph& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Vertex> stack{s}, members;
    comp[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w = 0; w < g.size(); ++w)
        if (g.label(u, w) != 0 && comp[w] < 0) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

inline bool is_connected(const LabeledGraph& g) {
  return connected_components(g).size() <= 1;
}

namespace detail {

inline bool iso_backtrack(const LabeledGraph& g, const LabeledGraph& h,
                          std::vector<Vertex>& pi, std::vector<bool>& used,
                          Vertex next) {
  const std::size_t n = g.size();
  if (next == n) return true;
  for (Vertex cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (Vertex j = 0; j < next && ok; ++j)
      ok = g.label(pi[j], cand) == h.label(j, next);
    if (!ok) continue;
    pi[next] = cand;
    used[cand] = true;
    if (iso_backtrack(g, h, pi, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

inline std::vector<std::size_t> degree_profile(const LabeledGraph& g) {
  std::vector<std::size_t> deg(g.size(), 0);
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = 0; j < g.size(); ++j)
      if (g.label(i, j) != 0) ++deg[i];
  return deg;
}

}  // namespace detail

/// Backtracking isomorphism test with degree-sequence pruning; meant for
/// small graphs (n <= 10). When isomorphic, returns pi with
/// g.label(pi[i], pi[j]) == h.label(i, j).
inline std::optional<std::vector<Vertex>> is_isomorphic(const LabeledGraph& g,
                                                        const LabeledGraph& h) {
  if (g.field() != h.field() || g.size() != h.size()) return std::nullopt;
  auto dg = detail::degree_profile(g), dh = detail::degree_profile(h);
  auto sg = dg, sh = dh;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  std::vector<Vertex> pi(g.size());
  std::vector<bool> used(g.size(), false);
  if (detail::iso_backtrack(g, h, pi, used, 0)) return pi;
  return std::nullopt;
}

constexpr std::size_t kOrbitStateLimit = 10'000'000;

/// BFS closure of {g} under all circ_b (b in F_p*) and star_a (a in F_p*)
/// moves, keyed by the canonical byte encoding. Iteration order of the
/// returned set is the deterministic key order.
inline std::set<std::string> orbit_keys(const LabeledGraph& g,
                                        std::size_t limit = kOrbitStateLimit) {
  const Fp f = g.field();
  const std::size_t n = g.size();
  std::set<std::string> seen;
  std::vector<std::string> frontier{g.encode()};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const std::string& key : frontier) {
      LabeledGraph cur = LabeledGraph::decode(f, n, key);
      for (Vertex v = 0; v < n; ++v) {
        for (Residue c = 1; c < f.modulus(); ++c) {
          for (const LabeledGraph& moved :
               {scale_op(cur, v, c), complement_op(cur, v, c)}) {
            std::string k = moved.encode();
            if (seen.insert(k).second) {
              if (seen.size() > limit)
                throw ResourceLimit("orbit exceeds " + std::to_string(limit) +
                                    " states");
              next.push_back(std::move(k));
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::vector<LabeledGraph> orbit(const LabeledGraph& g,
                                       std::size_t limit = kOrbitStateLimit) {
  std::vector<LabeledGraph> out;
  for (const std::string& key : orbit_keys(g, limit))
    out.push_back(LabeledGraph::decode(g.field(), g.size(), key));
  return out;
}

}  // namespace qgraph
