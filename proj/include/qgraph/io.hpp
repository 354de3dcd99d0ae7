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

// File formats.
//
// Graph text format:   line 1 "p n", then lines "u v label" (0-based,
// label in [1, p)); pairs not listed have label 0; a duplicated pair is a
// parse error. A JSON mirror {"p":..,"n":..,"edges":[[u,v,label],..]} is
// accepted interchangeably (detected by a leading '{').
//
// Generator matrix text format: line 1 "p n k", then k lines of 2n
// space-separated residues.
//
// Witness JSON: {"E":[..],"F":[..],"Ep":[..],"Fp":[..]} of residues.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qgraph/equivalence.hpp"
#include "qgraph/errors.hpp"
#include "qgraph/field.hpp"
#include "qgraph/graph.hpp"
#include "qgraph/stabilizer.hpp"

namespace qgraph {

using json = nlohmann::json;

namespace detail {

inline Fp parse_modulus(long long p) {
  if (p < 2) throw ParseError("modulus must be a prime >= 2");
  try {
    return Fp(static_cast<Residue>(p));
  } catch (const InvalidParameter& e) {
    throw ParseError(e.what());
  }
}

inline void add_edge_checked(LabeledGraph& g, long long u, long long v,
                             long long label) {
  const long long n = static_cast<long long>(g.size());
  const long long p = g.field().modulus();
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw ParseError("vertex index out of range");
  if (u == v) throw ParseError("self-loop edge");
  if (label < 1 || label >= p) throw ParseError("edge label must be in [1, p)");
  if (g.label(static_cast<Vertex>(u), static_cast<Vertex>(v)) != 0)
    throw ParseError("duplicate edge {" + std::to_string(u) + "," +
                     std::to_string(v) + "}");
  g.set_label(static_cast<Vertex>(u), static_cast<Vertex>(v),
              static_cast<Residue>(label));
}

}  // namespace detail

inline LabeledGraph parse_graph_json(const json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("n"))
    throw ParseError("graph JSON needs \"p\" and \"n\"");
  Fp f = detail::parse_modulus(j.at("p").get<long long>());
  long long n = j.at("n").get<long long>();
  if (n < 0) throw ParseError("negative vertex count");
  LabeledGraph g(f, static_cast<std::size_t>(n));
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3)
        throw ParseError("edge entries must be [u, v, label]");
      detail::add_edge_checked(g, e[0].get<long long>(), e[1].get<long long>(),
                               e[2].get<long long>());
    }
  return g;
}

inline LabeledGraph parse_graph(std::istream& in) {
  // Peek past whitespace: '{' selects the JSON mirror.
  char c;
  while (in.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) break;
  }
  if (!in) throw ParseError("empty graph input");
  in.putback(c);
  if (c == '{') {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
    return parse_graph_json(j);
  }

  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header line");
  std::istringstream head(line);
  long long p = 0, n = -1;
  if (!(head >> p >> n)) throw ParseError("header must be \"p n\"");
  std::string extra;
  if (head >> extra) throw ParseError("trailing tokens in header");
  Fp f = detail::parse_modulus(p);
  if (n < 0) throw ParseError("negative vertex count");
  LabeledGraph g(f, static_cast<std::size_t>(n));
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    long long u, v, label;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v >> label) || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected \"u v label\"");
    detail::add_edge_checked(g, u, v, label);
  }
  return g;
}

inline std::string format_graph(const LabeledGraph& g) {
  std::ostringstream out;
  out << g.field().modulus() << ' ' << g.size() << '\n';
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = i + 1; j < g.size(); ++j)
      if (g.label(i, j) != 0)
        out << i << ' ' << j << ' ' << g.label(i, j) << '\n';
  return out.str();
}

inline json graph_to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (Vertex i = 0; i < g.size(); ++i)
    for (Vertex j = i + 1; j < g.size(); ++j)
      if (g.label(i, j) != 0) edges.push_back({i, j, g.label(i, j)});
  return {{"p", g.field().modulus()}, {"n", g.size()}, {"edges", edges}};
}

inline GeneratorMatrix parse_generator_matrix(std::istream& in) {
  long long p = 0, n = -1, k = -1;
  if (!(in >> p >> n >> k)) throw ParseError("header must be \"p n k\"");
  Fp f = detail::parse_modulus(p);
  if (n < 0 || k < 0) throw ParseError("negative dimension");
  FieldMatrix m(f, static_cast<std::size_t>(k), 2 * static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      long long x;
      if (!(in >> x)) throw ParseError("expected " + std::to_string(2 * n) +
                                       " residues per generator row");
      m.at(r, c) = f.reduce(x);
    }
  return GeneratorMatrix(f, static_cast<std::size_t>(n), std::move(m));
}

inline std::string format_generator_matrix(const GeneratorMatrix& gm) {
  std::ostringstream out;
  out << gm.field.modulus() << ' ' << gm.n << ' ' << gm.k << '\n';
  for (std::size_t r = 0; r < gm.k; ++r) {
    for (std::size_t c = 0; c < 2 * gm.n; ++c)
      out << (c ? " " : "") << gm.a.at(r, c);
    out << '\n';
  }
  return out.str();
}

inline json witness_to_json(const Witness& w) {
  return {{"E", w.y.e}, {"F", w.y.fvec}, {"Ep", w.y.ep}, {"Fp", w.y.fp}};
}

inline Witness witness_from_json(const Fp& f, const json& j) {
  try {
    return Witness{LocalCliffordDiag(f, j.at("E").get<FieldVector>(),
                                     j.at("F").get<FieldVector>(),
                                     j.at("Ep").get<FieldVector>(),
                                     j.at("Fp").get<FieldVector>())};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad witness JSON: ") + e.what());
  }
}

}  // namespace qgraph
