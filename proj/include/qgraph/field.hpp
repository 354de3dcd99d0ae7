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

// Arithmetic and dense linear algebra over the prime field F_p.
//
// Elements are plain uint32_t residues, always kept reduced in [0, p);
// the Fp object carries the modulus and provides the operations. The
// modulus is a runtime value validated (deterministic primality, p < 2^15)
// at construction, so products of two residues never overflow 32 bits.

#include <cstdint>
#include <string>
#include <vector>

#include "qgraph/errors.hpp"

namespace qgraph {

using Residue = std::uint32_t;
using FieldVector = std::vector<Residue>;

/// The prime field F_p. Value type; cheap to copy.
class Fp {
 public:
  explicit Fp(Residue p) : p_(p) {
    if (p < 2 || !is_prime(p))
      throw InvalidParameter("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1u << 15))
      throw InvalidParameter("modulus " + std::to_string(p) + " exceeds 2^15");
  }

  Residue modulus() const { return p_; }
  bool odd() const { return p_ != 2; }

  Residue reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }

  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }

  Residue pow(Residue a, std::uint64_t e) const {
    Residue r = 1, base = a % p_;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// Multiplicative inverse; zero has none.
  Residue inv(Residue a) const {
    a %= p_;
    if (a == 0) throw NotInvertible("0 has no inverse mod " + std::to_string(p_));
    return pow(a, p_ - 2);
  }

  bool operator==(const Fp& o) const { return p_ == o.p_; }
  bool operator!=(const Fp& o) const { return p_ != o.p_; }

  static bool is_prime(Residue n) {
    if (n < 2) return false;
    for (Residue d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  Residue p_;
};

/// Dense row-major matrix over F_p. Entries are kept reduced.
class FieldMatrix {
 public:
  FieldMatrix(Fp field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static FieldMatrix identity(Fp field, std::size_t n) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  const Fp& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  FieldVector row(std::size_t r) const {
    return FieldVector(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
  }
  void set_row(std::size_t r, const FieldVector& v) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c] % field_.modulus();
  }

  bool operator==(const FieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ &&
           field_ == o.field_;
  }
  bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

  FieldMatrix operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
      throw InvalidInput("matrix product shape mismatch");
    FieldMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        Residue aik = at(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
      }
    return r;
  }

  FieldVector apply(const FieldVector& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
    FieldVector r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
    return r;
  }

  void scale_row(std::size_t r, Residue s) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = field_.mul(at(r, c), s);
  }
  /// row dst += s * row src
  void add_scaled_row(std::size_t dst, std::size_t src, Residue s) {
    for (std::size_t c = 0; c < cols_; ++c)
      at(dst, c) = field_.add(at(dst, c), field_.mul(s, at(src, c)));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
  }

 private:
  Fp field_;
  std::size_t rows_, cols_;
  std::vector<Residue> e_;
};

struct RrefResult {
  FieldMatrix matrix;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination. Pivot choice is
/// the first nonzero entry top-to-bottom, left-to-right, so the output is
/// deterministic.
inline RrefResult rref(FieldMatrix m) {
  const Fp f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(r, sel);
    m.scale_row(r, f.inv(m.at(r, c)));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      m.add_scaled_row(i, r, f.neg(m.at(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const FieldMatrix& m) { return rref(m).rank; }

/// Kernel basis in free-variable index order: the basis vector for free
/// column c has a 1 at c and the negated pivot-row entries elsewhere.
inline std::vector<FieldVector> nullspace_basis(const FieldMatrix& m) {
  const Fp f = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<FieldVector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    FieldVector v(m.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i)
      v[rr.pivots[i]] = f.neg(rr.matrix.at(i, c));
    // normalize the leading nonzero entry to 1
    for (Residue x : v)
      if (x != 0) {
        Residue s = f.inv(x);
        for (Residue& y : v) y = f.mul(y, s);
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse of a square matrix; throws NotInvertible when singular.
inline FieldMatrix invert_matrix(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  FieldMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = rref(std::move(aug));
  // invertible iff the first n pivots land in the left block
  for (std::size_t i = 0; i < n; ++i)
    if (i >= rr.pivots.size() || rr.pivots[i] != i)
      throw NotInvertible("singular matrix");
  FieldMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.matrix.at(i, n + j);
  return inv;
}

inline Residue dot(const Fp& f, const FieldVector& a, const FieldVector& b) {
  if (a.size() != b.size()) throw InvalidInput("dot product length mismatch");
  Residue s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace qgraph
