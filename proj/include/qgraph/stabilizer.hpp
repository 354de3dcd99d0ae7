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

// Phase-tracked Pauli algebra over F_p (p odd), generator matrices with
// their symplectic structure, the local Clifford action A -> A*Y for
// block-diagonal Y, and canonicalization of a full-rank generator matrix
// to graph form (Id | M).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgraph/errors.hpp"
#include "qgraph/field.hpp"
#include "qgraph/graph.hpp"

namespace qgraph {

/// omega^c X(a) Z(b) in X-before-Z normal form; the phase exponent c
/// lives in F_p (valid for odd p, where g^p = Id).
struct PauliElement {
  Fp field;
  Residue phase;  // exponent of omega
  FieldVector a;
  FieldVector b;

  PauliElement(Fp f, Residue c, FieldVector av, FieldVector bv)
      : field(f), phase(c % f.modulus()), a(std::move(av)), b(std::move(bv)) {
    if (a.size() != b.size()) throw InvalidInput("pauli a/b length mismatch");
    for (auto& x : a) x %= field.modulus();
    for (auto& x : b) x %= field.modulus();
  }

  static PauliElement identity(Fp f, std::size_t n) {
    return PauliElement(f, 0, FieldVector(n, 0), FieldVector(n, 0));
  }

  std::size_t qupits() const { return a.size(); }

  /// (a | b) as a length-2n symplectic row.
  FieldVector row() const {
    FieldVector r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
  }

  bool operator==(const PauliElement& o) const {
    return field == o.field && phase == o.phase && a == o.a && b == o.b;
  }
};

/// <(a,b), (a',b')> = a.b' - b.a'. Zero exactly when the Paulis commute.
inline Residue symplectic_product(const Fp& f, const FieldVector& r1,
                                  const FieldVector& r2) {
  if (r1.size() != r2.size() || r1.size() % 2 != 0)
    throw InvalidInput("symplectic rows must have equal even length");
  const std::size_t n = r1.size() / 2;
  Residue s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s = f.add(s, f.mul(r1[i], r2[n + i]));
    s = f.sub(s, f.mul(r1[n + i], r2[i]));
  }
  return s;
}

/// Product g1*g2 in normal form. Moving Z(b1) past X(a2) costs omega^(b1.a2).
inline PauliElement pauli_compose(const PauliElement& g1, const PauliElement& g2) {
  if (g1.field != g2.field || g1.qupits() != g2.qupits())
    throw InvalidInput("pauli compose dimension mismatch");
  const Fp f = g1.field;
  const std::size_t n = g1.qupits();
  Residue c = f.add(g1.phase, g2.phase);
  c = f.add(c, dot(f, g1.b, g2.a));
  FieldVector a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = f.add(g1.a[i], g2.a[i]);
    b[i] = f.add(g1.b[i], g2.b[i]);
  }
  return PauliElement(f, c, std::move(a), std::move(b));
}

/// g^k = omega^(kc + C(k,2) a.b) X(ka) Z(kb).
inline PauliElement pauli_power(const PauliElement& g, std::uint64_t k) {
  const Fp f = g.field;
  const std::size_t n = g.qupits();
  Residue kr = f.reduce(static_cast<std::int64_t>(k % f.modulus()));
  // C(k,2) mod p, computed before reduction since k(k-1)/2 is an integer.
  Residue binom = f.reduce(static_cast<std::int64_t>(
      ((k % (2 * f.modulus())) * ((k + 2 * f.modulus() - 1) % (2 * f.modulus())) / 2) %
      f.modulus()));
  Residue c = f.mul(kr, g.phase);
  c = f.add(c, f.mul(binom, dot(f, g.a, g.b)));
  FieldVector a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = f.mul(kr, g.a[i]);
    b[i] = f.mul(kr, g.b[i]);
  }
  return PauliElement(f, c, std::move(a), std::move(b));
}

inline bool commutes(const PauliElement& g1, const PauliElement& g2) {
  return symplectic_product(g1.field, g1.row(), g2.row()) == 0;
}

/// Diagonals (E, F, E', F') of the block matrix Y; per-index determinant
/// e_i f'_i - f_i e'_i must be 1.
struct LocalCliffordDiag {
  Fp field;
  FieldVector e, fvec, ep, fp;

  LocalCliffordDiag(Fp f, FieldVector E, FieldVector F, FieldVector Ep, FieldVector Fp_)
      : field(f), e(std::move(E)), fvec(std::move(F)), ep(std::move(Ep)), fp(std::move(Fp_)) {
    if (e.size() != fvec.size() || e.size() != ep.size() || e.size() != fp.size())
      throw InvalidInput("local Clifford diagonals must have equal length");
    for (auto* v : {&e, &fvec, &ep, &fp})
      for (auto& x : *v) x %= field.modulus();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (field.sub(field.mul(e[i], fp[i]), field.mul(fvec[i], ep[i])) != 1)
        throw InvalidParameter("per-index determinant != 1 at index " +
                               std::to_string(i));
  }

  static LocalCliffordDiag identity(Fp f, std::size_t n) {
    return LocalCliffordDiag(f, FieldVector(n, 1), FieldVector(n, 0),
                             FieldVector(n, 0), FieldVector(n, 1));
  }

  std::size_t qupits() const { return e.size(); }

  bool is_identity() const {
    for (std::size_t i = 0; i < qupits(); ++i)
      if (e[i] != 1 || fvec[i] != 0 || ep[i] != 0 || fp[i] != 1) return false;
    return true;
  }

  /// The full 2n x 2n matrix Y = [[E, F], [E', F']].
  FieldMatrix matrix() const {
    const std::size_t n = qupits();
    FieldMatrix y(field, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      y.at(i, i) = e[i];
      y.at(i, n + i) = fvec[i];
      y.at(n + i, i) = ep[i];
      y.at(n + i, n + i) = fp[i];
    }
    return y;
  }

  /// Composition so that A * compose(y1, y2).matrix() == A * y1 * y2.
  static LocalCliffordDiag compose(const LocalCliffordDiag& y1,
                                   const LocalCliffordDiag& y2) {
    const Fp f = y1.field;
    const std::size_t n = y1.qupits();
    FieldVector E(n), F(n), Ep(n), Fp_(n);
    for (std::size_t i = 0; i < n; ++i) {
      E[i] = f.add(f.mul(y1.e[i], y2.e[i]), f.mul(y1.fvec[i], y2.ep[i]));
      F[i] = f.add(f.mul(y1.e[i], y2.fvec[i]), f.mul(y1.fvec[i], y2.fp[i]));
      Ep[i] = f.add(f.mul(y1.ep[i], y2.e[i]), f.mul(y1.fp[i], y2.ep[i]));
      Fp_[i] = f.add(f.mul(y1.ep[i], y2.fvec[i]), f.mul(y1.fp[i], y2.fp[i]));
    }
    return LocalCliffordDiag(f, std::move(E), std::move(F), std::move(Ep),
                             std::move(Fp_));
  }
};

/// k x 2n matrix whose rows are the (a | b) exponent vectors of a minimal
/// generating set, phases dropped.
struct GeneratorMatrix {
  Fp field;
  std::size_t n, k;
  FieldMatrix a;  // k x 2n

  GeneratorMatrix(Fp f, std::size_t n_, FieldMatrix m)
      : field(f), n(n_), k(m.rows()), a(std::move(m)) {
    if (a.cols() != 2 * n) throw InvalidInput("generator matrix must be k x 2n");
  }

  /// (Id | M) for a graph.
  static GeneratorMatrix graph_form(const LabeledGraph& g) {
    const std::size_t n = g.size();
    FieldMatrix m(g.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      m.at(i, i) = 1;
      for (std::size_t j = 0; j < n; ++j) m.at(i, n + j) = g.label(i, j);
    }
    return GeneratorMatrix(g.field(), n, std::move(m));
  }

  PauliElement row_pauli(std::size_t r) const {
    FieldVector av(n), bv(n);
    for (std::size_t j = 0; j < n; ++j) {
      av[j] = a.at(r, j);
      bv[j] = a.at(r, n + j);
    }
    return PauliElement(field, 0, std::move(av), std::move(bv));
  }
};

struct ValidationReport {
  bool ok = true;
  std::string detail;
};

/// Checks rank k and pairwise symplectic orthogonality of the rows.
inline ValidationReport validate(const GeneratorMatrix& gm) {
  if (rank(gm.a) != gm.k)
    return {false, "rank deficit: rank < k = " + std::to_string(gm.k)};
  for (std::size_t i = 0; i < gm.k; ++i)
    for (std::size_t j = i + 1; j < gm.k; ++j)
      if (symplectic_product(gm.field, gm.a.row(i), gm.a.row(j)) != 0)
        return {false, "rows " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not symplectically orthogonal"};
  return {};
}

namespace detail {
inline void require_odd(const Fp& f, const char* what) {
  if (!f.odd())
    throw UnsupportedModulus(std::string(what) + " requires an odd modulus");
}
}  // namespace detail

/// A -> A * Y. Y is invertible, so validity is preserved.
inline GeneratorMatrix apply_local_clifford(const GeneratorMatrix& gm,
                                            const LocalCliffordDiag& y) {
  detail::require_odd(gm.field, "apply_local_clifford");
  if (y.qupits() != gm.n) throw InvalidInput("local Clifford size mismatch");
  return GeneratorMatrix(gm.field, gm.n, gm.a * y.matrix());
}

/// A -> U * A for invertible U; the row space (the group) is unchanged.
inline GeneratorMatrix row_transform(const GeneratorMatrix& gm,
                                     const FieldMatrix& u) {
  if (u.rows() != gm.k || u.cols() != gm.k)
    throw InvalidInput("row transform must be k x k");
  if (rank(u) != gm.k) throw NotInvertible("row transform is singular");
  return GeneratorMatrix(gm.field, gm.n, u * gm.a);
}

struct GraphFormResult {
  LabeledGraph graph;
  LocalCliffordDiag y;  // applied on the right
  FieldMatrix u;        // applied on the left: u * a * y.matrix() == (Id | M)
};

/// Canonicalize a full-rank (k = n) generator matrix to (Id | M).
///
/// Per-qupit column swaps (a, b) -> (b, -a) are applied greedily to make
/// the left block invertible; each swap is kept only when it strictly
/// raises the left-block rank. Then U = inverse of the left block, and a
/// trivial Y (E = Id, E' = 0) clears the diagonal of the right block.
inline GraphFormResult to_graph_form(const GeneratorMatrix& gm) {
  detail::require_odd(gm.field, "to_graph_form");
  if (gm.k != gm.n) throw InvalidInput("to_graph_form requires k = n");
  {
    ValidationReport rep = validate(gm);
    if (!rep.ok) throw InvalidInput("invalid generator matrix: " + rep.detail);
  }
  const Fp f = gm.field;
  const std::size_t n = gm.n;

  auto left_rank = [&](const FieldMatrix& m) {
    FieldMatrix left(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) left.at(i, j) = m.at(i, j);
    return rank(left);
  };

  FieldMatrix work = gm.a;
  LocalCliffordDiag y = LocalCliffordDiag::identity(f, n);

  auto swap_pair = [&](FieldMatrix& m, std::size_t i) {
    for (std::size_t r = 0; r < n; ++r) {
      Residue av = m.at(r, i);
      m.at(r, i) = m.at(r, n + i);
      m.at(r, n + i) = f.neg(av);
    }
  };
  auto record_swap = [&](std::size_t i) {
    FieldVector E(n, 1), F(n, 0), Ep(n, 0), Fp_(n, 1);
    E[i] = 0;
    F[i] = f.neg(1);
    Ep[i] = 1;
    Fp_[i] = 0;
    y = LocalCliffordDiag::compose(y, LocalCliffordDiag(f, E, F, Ep, Fp_));
  };

  std::size_t cur = left_rank(work);
  while (cur < n) {
    bool progressed = false;
    for (std::size_t i = 0; i < n && !progressed; ++i) {
      FieldMatrix trial = work;
      swap_pair(trial, i);
      if (left_rank(trial) > cur) {
        work = std::move(trial);
        cur = left_rank(work);
        record_swap(i);
        progressed = true;
      }
    }
    // No single swap helps; try pairs before giving up.
    for (std::size_t i = 0; i < n && !progressed; ++i)
      for (std::size_t j = i + 1; j < n && !progressed; ++j) {
        FieldMatrix trial = work;
        swap_pair(trial, i);
        swap_pair(trial, j);
        if (left_rank(trial) > cur) {
          work = std::move(trial);
          cur = left_rank(work);
          record_swap(i);
          record_swap(j);
          progressed = true;
        }
      }
    if (!progressed)
      throw InternalError("left block cannot be made invertible by column swaps");
  }

  FieldMatrix left(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) left.at(i, j) = work.at(i, j);
  FieldMatrix u = invert_matrix(left);
  FieldMatrix reduced = u * work;

  // Right block is symmetric (rows are orthogonal); clear its diagonal
  // with a trivial Y: F_i = -diag_i, everything else identity.
  FieldVector F(n, 0);
  bool diag_clear = true;
  for (std::size_t i = 0; i < n; ++i) {
    F[i] = f.neg(reduced.at(i, n + i));
    if (F[i] != 0) diag_clear = false;
  }
  if (!diag_clear) {
    LocalCliffordDiag trivial(f, FieldVector(n, 1), F, FieldVector(n, 0),
                              FieldVector(n, 1));
    y = LocalCliffordDiag::compose(y, trivial);
    reduced = reduced * trivial.matrix();
  }

  FieldMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = reduced.at(i, n + j);
  return {LabeledGraph(f, std::move(m)), std::move(y), std::move(u)};
}

}  // namespace qgraph
