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

// Dense-simulation cross-checks composing statevec with the algebraic
// modules. These are the ground-truth paths behind `--oracle` flags and
// the verification suites; all of them are dimension-guarded.

#include "qgraph/graph.hpp"
#include "qgraph/measurement.hpp"
#include "qgraph/stabilizer.hpp"
#include "qgraph/statevec.hpp"

namespace qgraph {

/// The graph state must be fixed by every generator row with phase 0.
inline bool graph_state_stabilized(const LabeledGraph& g) {
  StateVector s = build_graph_state(g);
  GeneratorMatrix gm = GeneratorMatrix::graph_form(g);
  for (std::size_t r = 0; r < gm.k; ++r)
    if (!is_stabilized(s, gm.row_pauli(r))) return false;
  return true;
}

/// Project the graph state on the outcome-0 eigenspace of the measured
/// operator and check that the phase-tracked updated generators stabilize
/// the result. This validates the constructive measurement route without
/// assuming anything about the graph-rewrite shortcuts.
inline bool measurement_statevec_check(const LabeledGraph& g,
                                       const MeasurementSpec& spec) {
  const Fp f = g.field();
  PauliElement h = measured_operator(f, g.size(), spec);
  StateVector psi = eigenprojector(h, 0).apply(build_graph_state(g));
  psi.normalize();  // outcome 0 has probability 1/p or 1, never 0
  for (const PauliElement& row : stabilizer_update(g, spec))
    if (!is_stabilized(psi, row)) return false;
  return true;
}

/// Exact algebraic round trip of canonicalization: U A Y == (Id | M).
inline bool graph_form_round_trip(const GeneratorMatrix& gm,
                                  const GraphFormResult& res) {
  FieldMatrix lhs = res.u * gm.a * res.y.matrix();
  return lhs == GeneratorMatrix::graph_form(res.graph).a;
}

}  // namespace qgraph
