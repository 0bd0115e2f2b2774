#pragma once

// Combinatorial support search: augmenting-path matching for AllDiff and
// depth-first s-t path search for Path. No costs are involved; the caller
// chooses which edges are admissible.

#include "dualfilter/model.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <vector>

namespace dualfilter {

/// A feasible solution of the cost-free constraint, as its chosen edges.
/// AllDiff supports list one edge per variable in variable order; Path
/// supports list the arcs of one s-t path from source to sink.
struct Support {
  std::vector<EdgeId> edges;
  Cost cost = 0;

  friend bool operator==(const Support&, const Support&) = default;

  bool contains(const EdgeId& e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  }
};

inline Cost support_cost(const WeightedInstance& instance, std::span<const EdgeId> edges) {
  Cost sum = 0;
  for (const auto& e : edges) sum += instance.cost(e);
  return sum;
}

/// Kahn's algorithm, smallest vertex id first. Empty optional on a cycle.
inline std::optional<std::vector<int>> topological_order(const WeightedInstance& instance) {
  std::map<int, int> indegree;
  std::map<int, std::vector<int>> out;
  for (int v : instance.values) indegree[v] = 0;
  for (const auto& e : instance.edges) {
    indegree[e.i];
    ++indegree[e.j];
    out[e.i].push_back(e.j);
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (const auto& [v, d] : indegree)
    if (d == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() != indegree.size()) return std::nullopt;
  return order;
}

namespace detail {

inline std::optional<Support> find_matching(const WeightedInstance& instance,
                                            const std::vector<EdgeId>& allowed,
                                            const std::optional<EdgeId>& forced,
                                            std::span<const int> required_values) {
  const int n = instance.n_vars;
  const int n_values = static_cast<int>(instance.values.size());
  if (n_values < n) return std::nullopt;

  std::map<int, int> value_slot;
  for (int s = 0; s < n_values; ++s) value_slot[instance.values[s]] = s;
  const std::set<int> required(required_values.begin(), required_values.end());

  const int forced_slot = forced ? value_slot.at(forced->j) : -1;
  // Left side: real variables, then one dummy per value left unused.
  const int n_dummy = n_values - n;
  std::vector<std::vector<int>> adj(n + n_dummy);
  for (const auto& e : allowed) {
    if (forced && (e.i == forced->i || e.j == forced->j)) continue;
    adj[e.i].push_back(value_slot.at(e.j));
  }
  for (int d = 0; d < n_dummy; ++d)
    for (int s = 0; s < n_values; ++s)
      if (s != forced_slot && !required.contains(instance.values[s])) adj[n + d].push_back(s);
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::vector<int> match_value(n_values, -1);
  if (forced) match_value[forced_slot] = forced->i;
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int left) {
    for (int s : adj[left]) {
      if (seen[s]) continue;
      seen[s] = 1;
      if (match_value[s] == -1 || (!(forced && s == forced_slot) && augment(match_value[s]))) {
        match_value[s] = left;
        return true;
      }
    }
    return false;
  };
  for (int left = 0; left < n + n_dummy; ++left) {
    if (forced && left == forced->i) continue;
    seen.assign(n_values, 0);
    if (!augment(left)) return std::nullopt;
  }

  std::vector<int> value_of(n, 0);
  for (int s = 0; s < n_values; ++s)
    if (match_value[s] >= 0 && match_value[s] < n) value_of[match_value[s]] = instance.values[s];
  Support support;
  for (int i = 0; i < n; ++i) support.edges.push_back({i, value_of[i]});
  support.cost = support_cost(instance, support.edges);
  return support;
}

inline std::optional<std::vector<EdgeId>> find_path(const std::map<int, std::vector<int>>& out,
                                                    int from, int to) {
  std::set<int> dead;
  std::vector<EdgeId> trail;
  std::function<bool(int)> dfs = [&](int v) {
    if (v == to) return true;
    if (dead.contains(v)) return false;
    if (auto it = out.find(v); it != out.end()) {
      for (int w : it->second) {
        trail.push_back({v, w});
        if (dfs(w)) return true;
        trail.pop_back();
      }
    }
    dead.insert(v);
    return false;
  };
  if (!dfs(from)) return std::nullopt;
  return trail;
}

inline std::optional<Support> find_st_path(const WeightedInstance& instance,
                                           const std::vector<EdgeId>& allowed,
                                           const std::optional<EdgeId>& forced) {
  const auto& meta = instance.path.value();
  std::map<int, std::vector<int>> out;
  for (const auto& e : allowed) out[e.i].push_back(e.j);
  for (auto& [v, heads] : out) std::sort(heads.begin(), heads.end());

  Support support;
  if (!forced) {
    auto p = find_path(out, meta.source, meta.sink);
    if (!p) return std::nullopt;
    support.edges = std::move(*p);
  } else {
    auto head = find_path(out, meta.source, forced->i);
    if (!head) return std::nullopt;
    auto tail = find_path(out, forced->j, meta.sink);
    if (!tail) return std::nullopt;
    support.edges = std::move(*head);
    support.edges.push_back(*forced);
    support.edges.insert(support.edges.end(), tail->begin(), tail->end());
  }
  support.cost = support_cost(instance, support.edges);
  return support;
}

}  // namespace detail

/// Looks for a support of the cost-free constraint that uses only `allowed`
/// edges and contains `forced` when given. For AllDiff, every value listed in
/// `required_values` must additionally be taken by some variable.
inline std::optional<Support> find_support(const WeightedInstance& instance,
                                           std::span<const EdgeId> allowed,
                                           std::optional<EdgeId> forced = std::nullopt,
                                           std::span<const int> required_values = {}) {
  std::vector<EdgeId> usable;
  for (const auto& e : allowed)
    if (instance.find_edge(e)) usable.push_back(e);
  std::sort(usable.begin(), usable.end());
  usable.erase(std::unique(usable.begin(), usable.end()), usable.end());
  if (forced && !std::binary_search(usable.begin(), usable.end(), *forced))
    throw std::invalid_argument("forced edge " + to_string(*forced) + " is not allowed");

  if (instance.kind == ConstraintKind::AllDiff)
    return detail::find_matching(instance, usable, forced, required_values);
  if (!instance.path) throw InvalidInstance("path instance without source/sink");
  return detail::find_st_path(instance, usable, forced);
}

}  // namespace dualfilter
