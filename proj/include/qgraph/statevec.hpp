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

// Dense state-vector oracle for p^n-dimensional systems. This is a
// correctness reference, not a simulator product: everything is O(p^n)
// or worse and guarded accordingly.
//
// Basis index convention: qupit 0 is the most significant base-p digit
// of the amplitude index. Projector and matrix cross-checks depend on
// this ordering.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "qgraph/errors.hpp"
#include "qgraph/field.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/stabilizer.hpp"

namespace qgraph {

using Complex = std::complex<double>;

constexpr double kTolerance = 1e-9;
constexpr std::size_t kStateDimLimit = 1'000'000;
constexpr std::size_t kProjectorDimLimit = 2048;

inline Complex omega_power(Residue p, Residue exponent) {
  const double theta = 2.0 * std::numbers::pi * (exponent % p) / p;
  return {std::cos(theta), std::sin(theta)};
}

class StateVector {
 public:
  StateVector(Fp field, std::size_t n)
      : field_(field), n_(n), dim_(checked_dim(field, n)), amp_(dim_, 0.0) {}

  static StateVector basis_state(Fp field, const FieldVector& digits) {
    StateVector s(field, digits.size());
    s.amp_[s.index_of(digits)] = 1.0;
    return s;
  }

  const Fp& field() const { return field_; }
  std::size_t qupits() const { return n_; }
  std::size_t dim() const { return dim_; }
  Complex& amp(std::size_t i) { return amp_[i]; }
  Complex amp(std::size_t i) const { return amp_[i]; }

  /// Digit of basis index i at qupit q (qupit 0 most significant).
  Residue digit(std::size_t i, std::size_t q) const {
    std::size_t shift = n_ - 1 - q;
    std::size_t d = i;
    for (std::size_t s = 0; s < shift; ++s) d /= field_.modulus();
    return static_cast<Residue>(d % field_.modulus());
  }

  std::size_t index_of(const FieldVector& digits) const {
    std::size_t i = 0;
    for (std::size_t q = 0; q < n_; ++q)
      i = i * field_.modulus() + digits[q] % field_.modulus();
    return i;
  }

  double norm() const {
    double s = 0;
    for (const Complex& c : amp_) s += std::norm(c);
    return std::sqrt(s);
  }

  void normalize() {
    double nrm = norm();
    if (nrm < kTolerance) throw InvalidParameter("cannot normalize zero vector");
    for (Complex& c : amp_) c /= nrm;
  }

  double distance(const StateVector& o) const {
    double s = 0;
    for (std::size_t i = 0; i < dim_; ++i) s += std::norm(amp_[i] - o.amp_[i]);
    return std::sqrt(s);
  }

 private:
  static std::size_t checked_dim(const Fp& field, std::size_t n) {
    std::size_t d = 1;
    for (std::size_t i = 0; i < n; ++i) {
      d *= field.modulus();
      if (d > kStateDimLimit)
        throw ResourceLimit("state dimension exceeds " +
                            std::to_string(kStateDimLimit));
    }
    return d;
  }

  Fp field_;
  std::size_t n_, dim_;
  std::vector<Complex> amp_;
};

/// X(a) on qupit i: |x> -> |x + a> on that digit.
inline StateVector apply_x(const StateVector& s, std::size_t i, Residue a) {
  const Fp f = s.field();
  a %= f.modulus();
  StateVector r(f, s.qupits());
  std::size_t stride = 1;
  for (std::size_t q = s.qupits() - 1; q > i; --q) stride *= f.modulus();
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    Residue d = s.digit(idx, i);
    std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(f.add(d, a)) -
                           static_cast<std::ptrdiff_t>(d);
    r.amp(idx + delta * static_cast<std::ptrdiff_t>(stride)) = s.amp(idx);
  }
  return r;
}

/// Z(b) on qupit i: |x> -> omega^(b x) |x> on that digit.
inline StateVector apply_z(const StateVector& s, std::size_t i, Residue b) {
  const Fp f = s.field();
  StateVector r = s;
  for (std::size_t idx = 0; idx < s.dim(); ++idx)
    r.amp(idx) *= omega_power(f.modulus(), f.mul(b % f.modulus(), s.digit(idx, i)));
  return r;
}

/// omega^c X(a) Z(b): Z factors first, then X factors, then the phase.
inline StateVector apply_pauli(const StateVector& s, const PauliElement& g) {
  if (g.field != s.field() || g.qupits() != s.qupits())
    throw InvalidInput("pauli/state dimension mismatch");
  StateVector r = s;
  for (std::size_t i = 0; i < g.qupits(); ++i)
    if (g.b[i] != 0) r = apply_z(r, i, g.b[i]);
  for (std::size_t i = 0; i < g.qupits(); ++i)
    if (g.a[i] != 0) r = apply_x(r, i, g.a[i]);
  if (g.phase != 0) {
    Complex ph = omega_power(g.field.modulus(), g.phase);
    for (std::size_t idx = 0; idx < r.dim(); ++idx) r.amp(idx) *= ph;
  }
  return r;
}

/// Graph state amplitudes p^(-n/2) omega^(q(x)), q(x) = sum_{i<j} M_ij x_i x_j.
/// The result is a +1 eigenvector of X(delta_v) Z(M_v) for every vertex v.
inline StateVector build_graph_state(const LabeledGraph& g) {
  const Fp f = g.field();
  const std::size_t n = g.size();
  StateVector s(f, n);
  const double scale = std::pow(static_cast<double>(f.modulus()), -0.5 * n);
  for (std::size_t idx = 0; idx < s.dim(); ++idx) {
    Residue q = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Residue xi = s.digit(idx, i);
      if (xi == 0) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        q = f.add(q, f.mul(g.label(i, j), f.mul(xi, s.digit(idx, j))));
    }
    s.amp(idx) = scale * omega_power(f.modulus(), q);
  }
  return s;
}

inline bool is_stabilized(const StateVector& s, const PauliElement& g) {
  return apply_pauli(s, g).distance(s) < kTolerance;
}

/// Dense p^n x p^n complex matrix; only built at guarded sizes.
class Projector {
 public:
  Projector(Fp field, std::size_t n)
      : field_(field), n_(n), dim_(checked_dim(field, n)),
        m_(dim_ * dim_, 0.0) {}

  const Fp& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  Complex& at(std::size_t r, std::size_t c) { return m_[r * dim_ + c]; }
  Complex at(std::size_t r, std::size_t c) const { return m_[r * dim_ + c]; }

  StateVector apply(const StateVector& s) const {
    if (s.dim() != dim_) throw InvalidInput("projector/state dimension mismatch");
    StateVector r(field_, n_);
    for (std::size_t i = 0; i < dim_; ++i) {
      Complex acc = 0;
      for (std::size_t j = 0; j < dim_; ++j) acc += at(i, j) * s.amp(j);
      r.amp(i) = acc;
    }
    return r;
  }

  Projector multiply(const Projector& o) const {
    if (o.dim() != dim_) throw InvalidInput("projector dimension mismatch");
    Projector r(field_, n_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        Complex aik = at(i, k);
        if (std::abs(aik) < 1e-15) continue;
        for (std::size_t j = 0; j < dim_; ++j)
          r.at(i, j) += aik * o.at(k, j);
      }
    return r;
  }

  Complex trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < dim_; ++i) t += at(i, i);
    return t;
  }

 private:
  static std::size_t checked_dim(const Fp& field, std::size_t n) {
    std::size_t d = 1;
    for (std::size_t i = 0; i < n; ++i) {
      d *= field.modulus();
      if (d > kProjectorDimLimit)
        throw ResourceLimit("projector dimension exceeds " +
                            std::to_string(kProjectorDimLimit));
    }
    return d;
  }

  Fp field_;
  std::size_t n_, dim_;
  std::vector<Complex> m_;
};

/// Dense matrix of omega^c X(a) Z(b); used by the algebra cross-checks.
inline Projector pauli_matrix(const PauliElement& g) {
  const Fp f = g.field;
  Projector m(f, g.qupits());
  for (std::size_t col = 0; col < m.dim(); ++col) {
    // column = action on basis state |col>
    Residue phase = g.phase;
    std::size_t row = 0;
    std::size_t rem = col;
    std::vector<Residue> digits(g.qupits());
    for (std::size_t q = g.qupits(); q-- > 0;) {
      digits[q] = static_cast<Residue>(rem % f.modulus());
      rem /= f.modulus();
    }
    for (std::size_t q = 0; q < g.qupits(); ++q) {
      phase = f.add(phase, f.mul(g.b[q], digits[q]));
      row = row * f.modulus() + f.add(digits[q], g.a[q]);
    }
    m.at(row, col) = omega_power(f.modulus(), phase);
  }
  return m;
}

/// P_j = (1/p) sum_k omega^(-kj) g^k, the projector on the omega^j
/// eigenspace of g. Requires g to not be a scalar multiple of identity.
inline Projector eigenprojector(const PauliElement& g, Residue j) {
  const Fp f = g.field;
  bool scalar = true;
  for (std::size_t i = 0; i < g.qupits() && scalar; ++i)
    scalar = g.a[i] == 0 && g.b[i] == 0;
  if (scalar) throw InvalidParameter("eigenprojector of a scalar operator");
  Projector sum(f, g.qupits());
  for (Residue k = 0; k < f.modulus(); ++k) {
    Projector gk = pauli_matrix(pauli_power(g, k));
    Complex w = omega_power(f.modulus(), f.neg(f.mul(k, j % f.modulus())));
    for (std::size_t r = 0; r < sum.dim(); ++r)
      for (std::size_t c = 0; c < sum.dim(); ++c)
        sum.at(r, c) += w * gk.at(r, c) / static_cast<double>(f.modulus());
  }
  return sum;
}

/// Product of per-generator eigenprojectors at the given outcomes; its
/// rank (= trace) is p^(n-k) for a valid generator matrix.
inline Projector stab_projector(const GeneratorMatrix& gm,
                                const FieldVector& outcomes) {
  if (outcomes.size() != gm.k)
    throw InvalidInput("one outcome per generator required");
  Projector acc(gm.field, gm.n);
  for (std::size_t i = 0; i < acc.dim(); ++i) acc.at(i, i) = 1.0;
  for (std::size_t r = 0; r < gm.k; ++r)
    acc = acc.multiply(eigenprojector(gm.row_pauli(r), outcomes[r]));
  return acc;
}

}  // namespace qgraph
