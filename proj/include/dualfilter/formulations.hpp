#pragma once

// Linear programs built from instances, incompatible-edge families, and the
// two synthetic instance constructions (0/1 encoding of a cost-free
// constraint, and the worst-case assignment instance).

#include "dualfilter/lp.hpp"
#include "dualfilter/model.hpp"
#include "dualfilter/support.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dualfilter {

/// Role of a row of the primal program; the dual variable of that row
/// inherits the same tag.
enum class RowRole {
  Variable,  // AllDiff: variable i takes exactly one value
  Value,     // AllDiff: value j is taken at most / exactly once
  Source,    // Path: one unit of flow leaves the source
  Vertex,    // Path: flow conservation at an internal vertex
  Forced,    // restricted program: x_kl = 1
};

struct RowTag {
  RowRole role;
  int index;

  friend bool operator==(const RowTag&, const RowTag&) = default;
};

inline std::string to_string(const RowTag& tag) {
  switch (tag.role) {
    case RowRole::Variable: return "U" + std::to_string(tag.index);
    case RowRole::Value: return "V" + std::to_string(tag.index);
    case RowRole::Source: return "S" + std::to_string(tag.index);
    case RowRole::Vertex: return "N" + std::to_string(tag.index);
    case RowRole::Forced: return "F" + std::to_string(tag.index);
  }
  return "?";
}

inline std::string column_tag(const EdgeId& e) { return "x" + to_string(e); }

/// Value rows are equalities when |V| = |U| and "<= 1" otherwise.
inline bool square_assignment(const WeightedInstance& instance) {
  return static_cast<int>(instance.values.size()) == instance.n_vars;
}

/// Row layout of the primal program, in row order.
inline std::vector<RowTag> primal_rows(const WeightedInstance& instance) {
  std::vector<RowTag> rows;
  if (instance.kind == ConstraintKind::AllDiff) {
    for (int i = 0; i < instance.n_vars; ++i) rows.push_back({RowRole::Variable, i});
    for (int j : instance.values) rows.push_back({RowRole::Value, j});
  } else {
    const auto& meta = instance.path.value();
    rows.push_back({RowRole::Source, meta.source});
    for (int v : instance.values)
      if (v != meta.source && v != meta.sink) rows.push_back({RowRole::Vertex, v});
  }
  return rows;
}

/// Minimum-cost program over one 0/1-relaxed column per edge, columns in
/// the instance's edge order. AllDiff: one row per variable and per value.
/// Path: one source row and one flow-conservation row per internal vertex;
/// the sink has no row.
inline lp::LinearProgram primal_program(const WeightedInstance& instance) {
  if (instance.kind == ConstraintKind::Path && !instance.path)
    throw InvalidInstance("path instance without source/sink");
  lp::LinearProgram prog;
  prog.sense = lp::Sense::Minimize;
  for (std::size_t k = 0; k < instance.edges.size(); ++k)
    prog.add_column(column_tag(instance.edges[k]), Rational(instance.costs[k]));

  const std::size_t width = instance.edges.size();
  for (const auto& tag : primal_rows(instance)) {
    std::vector<Rational> coeffs(width, Rational(0));
    lp::Relation rel = lp::Relation::Equal;
    Rational rhs(0);
    for (std::size_t k = 0; k < width; ++k) {
      const auto& e = instance.edges[k];
      switch (tag.role) {
        case RowRole::Variable:
          if (e.i == tag.index) coeffs[k] = 1;
          break;
        case RowRole::Value:
          if (e.j == tag.index) coeffs[k] = 1;
          break;
        case RowRole::Source:
          if (e.i == tag.index) coeffs[k] = 1;
          break;
        case RowRole::Vertex:
          if (e.i == tag.index) coeffs[k] += 1;
          if (e.j == tag.index) coeffs[k] -= 1;
          break;
        case RowRole::Forced: break;
      }
    }
    if (tag.role == RowRole::Variable || tag.role == RowRole::Source) rhs = 1;
    if (tag.role == RowRole::Value) {
      rhs = 1;
      if (!square_assignment(instance)) rel = lp::Relation::LessEqual;
    }
    prog.add_row(std::move(coeffs), rel, std::move(rhs), to_string(tag));
  }
  return prog;
}

/// Dual of a minimisation program whose columns are all non-negative:
/// one column per primal row (sign from the row relation) and one
/// "<= c_j" row per primal column.
inline lp::LinearProgram dualize(const lp::LinearProgram& primal) {
  if (primal.sense != lp::Sense::Minimize)
    throw std::invalid_argument("dualize expects a minimisation program");
  lp::LinearProgram dual;
  dual.sense = lp::Sense::Maximize;
  dual.objective_offset = primal.objective_offset;
  for (const auto& row : primal.rows) {
    lp::Bound bound = lp::Bound::Free;
    if (row.relation == lp::Relation::GreaterEqual) bound = lp::Bound::NonNegative;
    if (row.relation == lp::Relation::LessEqual) bound = lp::Bound::NonPositive;
    dual.add_column(row.tag, row.rhs, bound);
  }
  for (std::size_t j = 0; j < primal.columns.size(); ++j) {
    if (primal.columns[j].bound != lp::Bound::NonNegative)
      throw std::invalid_argument("dualize expects non-negative primal columns");
    std::vector<Rational> coeffs;
    coeffs.reserve(primal.rows.size());
    for (const auto& row : primal.rows) coeffs.push_back(row.coeffs[j]);
    dual.add_row(std::move(coeffs), lp::Relation::LessEqual, primal.objective[j],
                 primal.columns[j].tag);
  }
  return dual;
}

inline lp::LinearProgram dual_program(const WeightedInstance& instance) {
  return dualize(primal_program(instance));
}

/// The primal program with x_kl pinned to 1 by an extra equality row.
inline lp::LinearProgram restricted_program(const WeightedInstance& instance, const EdgeId& kl) {
  const std::size_t col = instance.edge_index(kl);
  auto prog = primal_program(instance);
  std::vector<Rational> coeffs(prog.column_count(), Rational(0));
  coeffs[col] = 1;
  prog.add_row(std::move(coeffs), lp::Relation::Equal, Rational(1), "F" + to_string(kl));
  return prog;
}

// ---------------------------------------------------------------------------
// Incompatible-edge families

enum class FamilyStrategy { Domains, Layers };

inline std::string to_string(FamilyStrategy s) {
  return s == FamilyStrategy::Domains ? "domains" : "layers";
}

/// A set of pairwise incompatible edges. `covering` means every support of
/// the constraint uses at least one edge of the set.
struct EdgeSet {
  std::vector<EdgeId> edges;
  bool covering = false;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

struct IncompatibleFamily {
  FamilyStrategy strategy = FamilyStrategy::Domains;
  std::vector<EdgeSet> sets;
};

/// True iff no support avoids every edge of `edges`.
inline bool is_covering(const WeightedInstance& instance, std::span<const EdgeId> edges) {
  const std::set<EdgeId> excluded(edges.begin(), edges.end());
  std::vector<EdgeId> rest;
  for (const auto& e : instance.edges)
    if (!excluded.contains(e)) rest.push_back(e);
  return !find_support(instance, rest).has_value();
}

/// Longest-path depth (in arcs) of every vertex reachable from the source.
inline std::map<int, int> layer_depths(const WeightedInstance& instance) {
  const auto order = topological_order(instance);
  if (!order) throw InvalidInstance("arc set contains a cycle");
  std::map<int, int> depth;
  depth[instance.path.value().source] = 0;
  for (int v : *order) {
    auto it = depth.find(v);
    if (it == depth.end()) continue;
    for (const auto& e : instance.edges) {
      if (e.i != v) continue;
      auto [slot, inserted] = depth.try_emplace(e.j, it->second + 1);
      if (!inserted) slot->second = std::max(slot->second, it->second + 1);
    }
  }
  return depth;
}

/// Domains: one set per variable with a non-empty domain. Layers (Path
/// only): arcs grouped by the longest-path depth of their tail, which
/// strictly increases along any path.
inline IncompatibleFamily family(const WeightedInstance& instance, FamilyStrategy strategy) {
  IncompatibleFamily fam;
  fam.strategy = strategy;
  if (strategy == FamilyStrategy::Domains) {
    for (int k : instance.variables()) {
      auto edges = edges_of_variable(instance, k);
      if (!edges.empty()) fam.sets.push_back({std::move(edges), false});
    }
  } else {
    if (instance.kind != ConstraintKind::Path)
      throw std::invalid_argument("layers family requires a path instance");
    const auto depth = layer_depths(instance);
    std::map<int, std::vector<EdgeId>> layers;
    for (const auto& e : instance.edges) {
      auto it = depth.find(e.i);
      if (it == depth.end()) throw InvalidInstance("arc " + to_string(e) + " is unreachable");
      layers[it->second].push_back(e);
    }
    for (auto& [d, edges] : layers) fam.sets.push_back({std::move(edges), false});
  }
  for (auto& set : fam.sets) set.covering = is_covering(instance, set.edges);
  return fam;
}

// ---------------------------------------------------------------------------
// Synthetic instances

/// Complete variable-value graph with cost 0 on the original edges, 1
/// elsewhere, and bound 0.
inline WeightedInstance bg01_encode(const SatisfactionInstance& sat) {
  if (static_cast<int>(sat.values.size()) < sat.n_vars)
    throw InvalidInstance("fewer values than variables");
  const std::set<EdgeId> original(sat.edges.begin(), sat.edges.end());
  WeightedInstance out;
  out.kind = ConstraintKind::AllDiff;
  out.n_vars = sat.n_vars;
  out.values = sat.values;
  out.z_max = 0;
  for (int i = 0; i < sat.n_vars; ++i) {
    for (int j : sat.values) {
      out.edges.push_back({i, j});
      out.costs.push_back(original.contains({i, j}) ? 0 : 1);
    }
  }
  return out;
}

struct WorstCase {
  WeightedInstance instance;
  std::vector<EdgeId> cycle;  // L: no single optimal dual is exact on two of these
};

/// (n+1) x (n+1) complete assignment with c_ij = 0 when j <= i and 1
/// otherwise; the cycle is {(i, i-1) : 1 <= i <= n} plus (0, n). Every edge
/// can be forced at extra cost at most 1, so z_max = 1 keeps all values.
inline WorstCase worst_case_alldiff(int n) {
  if (n < 2) throw std::invalid_argument("worst-case instance needs n >= 2");
  WorstCase wc;
  auto& inst = wc.instance;
  inst.kind = ConstraintKind::AllDiff;
  inst.n_vars = n + 1;
  for (int j = 0; j <= n; ++j) inst.values.push_back(j);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      inst.edges.push_back({i, j});
      inst.costs.push_back(j <= i ? 0 : 1);
    }
  }
  inst.z_max = 1;
  for (int i = 1; i <= n; ++i) wc.cycle.push_back({i, i - 1});
  wc.cycle.push_back({0, n});
  return wc;
}

}  // namespace dualfilter
