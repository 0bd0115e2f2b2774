#pragma once

#include "dualfilter/error.hpp"
#include "dualfilter/rational.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace dualfilter {

/// One edge of the variable-value graph: value `j` belongs to the domain of
/// variable `i`. For path instances `i` is the tail vertex and `j` the head.
struct EdgeId {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
  friend bool operator==(const EdgeId&, const EdgeId&) = default;
};

inline std::string to_string(const EdgeId& e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

enum class ConstraintKind { AllDiff, Path };

inline std::string to_string(ConstraintKind kind) {
  return kind == ConstraintKind::AllDiff ? "alldiff" : "path";
}

struct PathMeta {
  int source = 0;
  int sink = 0;

  friend bool operator==(const PathMeta&, const PathMeta&) = default;
};

/// A weighted constraint: domains given extensionally as the edge set, one
/// non-negative integer cost per edge, and the cost bound `z_max`.
///
/// AllDiff: variables are 0..n_vars-1, `values` is the value universe.
/// Path: `values` lists every vertex of the DAG; each vertex except the sink
/// carries a successor variable, so n_vars = |values| - 1.
struct WeightedInstance {
  ConstraintKind kind = ConstraintKind::AllDiff;
  int n_vars = 0;
  std::vector<int> values;
  std::vector<EdgeId> edges;
  std::vector<Cost> costs;  // parallel to `edges`
  Cost z_max = 0;
  std::optional<PathMeta> path;

  friend bool operator==(const WeightedInstance&, const WeightedInstance&) = default;

  std::size_t edge_count() const { return edges.size(); }

  std::optional<std::size_t> find_edge(const EdgeId& e) const {
    const auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) return std::nullopt;
    return static_cast<std::size_t>(it - edges.begin());
  }

  std::size_t edge_index(const EdgeId& e) const {
    if (auto idx = find_edge(e)) return *idx;
    throw std::invalid_argument("edge " + to_string(e) + " is not in E");
  }

  Cost cost(const EdgeId& e) const { return costs[edge_index(e)]; }

  /// The variable set U.
  std::vector<int> variables() const {
    std::vector<int> out;
    if (kind == ConstraintKind::AllDiff) {
      for (int i = 0; i < n_vars; ++i) out.push_back(i);
    } else {
      for (int v : values)
        if (!path || v != path->sink) out.push_back(v);
    }
    return out;
  }

  Cost total_cost() const {
    Cost sum = 0;
    for (Cost c : costs) sum += c;
    return sum;
  }
};

/// A cost-free AllDiff constraint over variables 0..n_vars-1.
struct SatisfactionInstance {
  int n_vars = 0;
  std::vector<int> values;
  std::vector<EdgeId> edges;

  friend bool operator==(const SatisfactionInstance&, const SatisfactionInstance&) = default;
};

/// The domain of variable `k`, i.e. every edge whose first component is `k`.
inline std::vector<EdgeId> edges_of_variable(const WeightedInstance& instance, int k) {
  const auto vars = instance.variables();
  if (std::find(vars.begin(), vars.end(), k) == vars.end())
    throw std::invalid_argument("unknown variable index " + std::to_string(k));
  std::vector<EdgeId> out;
  for (const auto& e : instance.edges)
    if (e.i == k) out.push_back(e);
  return out;
}

}  // namespace dualfilter
