#pragma once

#include "dualfilter/model.hpp"
#include "dualfilter/support.hpp"

#include <set>
#include <string>
#include <vector>

namespace dualfilter {

/// Every violated invariant of `instance`, empty when the instance is usable.
/// Includes the structural arc-consistency check: each edge must lie on at
/// least one support of the cost-free constraint.
inline std::vector<std::string> validate(const WeightedInstance& instance) {
  std::vector<std::string> violations;
  auto fail = [&](std::string msg) { violations.push_back(std::move(msg)); };

  if (instance.n_vars < 0) fail("n_vars is negative");
  if (instance.z_max < 0) fail("z_max is negative");
  if (instance.costs.size() != instance.edges.size()) {
    fail("cost list and edge list differ in length");
    return violations;
  }
  const std::set<int> values(instance.values.begin(), instance.values.end());
  if (values.size() != instance.values.size()) fail("value list has duplicates");

  bool indices_ok = true;
  std::set<EdgeId> seen;
  for (std::size_t k = 0; k < instance.edges.size(); ++k) {
    const auto& e = instance.edges[k];
    if (!seen.insert(e).second) fail("duplicate edge " + to_string(e));
    if (instance.costs[k] < 0) fail("negative cost on edge " + to_string(e));
    if (!values.contains(e.j)) {
      fail("edge " + to_string(e) + " points to unknown value " + std::to_string(e.j));
      indices_ok = false;
    }
    if (instance.kind == ConstraintKind::AllDiff) {
      if (e.i < 0 || e.i >= instance.n_vars) {
        fail("edge " + to_string(e) + " names unknown variable " + std::to_string(e.i));
        indices_ok = false;
      }
    } else {
      if (!values.contains(e.i)) {
        fail("arc " + to_string(e) + " leaves unknown vertex " + std::to_string(e.i));
        indices_ok = false;
      }
      if (e.i == e.j) {
        fail("self-loop " + to_string(e) + " is not an arc");
        indices_ok = false;
      }
    }
  }

  if (instance.kind == ConstraintKind::AllDiff) {
    if (instance.path) fail("alldiff instance carries path metadata");
    if (static_cast<int>(instance.values.size()) < instance.n_vars)
      fail("fewer values than variables");
    for (int i = 0; i < instance.n_vars; ++i) {
      bool any = false;
      for (const auto& e : instance.edges) any = any || e.i == i;
      if (!any) fail("variable " + std::to_string(i) + " has an empty domain");
    }
  } else {
    if (!instance.path) {
      fail("path instance without source/sink");
      return violations;
    }
    const auto& meta = *instance.path;
    if (!values.contains(meta.source)) fail("source is not a vertex");
    if (!values.contains(meta.sink)) fail("sink is not a vertex");
    if (meta.source == meta.sink) fail("source equals sink");
    if (instance.n_vars != static_cast<int>(instance.values.size()) - 1)
      fail("n_vars must equal the vertex count minus one (the sink has no successor)");
    if (indices_ok && !topological_order(instance)) {
      fail("arc set contains a cycle");
      indices_ok = false;
    }
    if (!values.contains(meta.source) || !values.contains(meta.sink) || meta.source == meta.sink)
      indices_ok = false;
  }

  if (indices_ok && violations.empty()) {
    if (!find_support(instance, instance.edges)) {
      fail("no support exists, so every edge lies on no support");
      return violations;
    }
    for (const auto& e : instance.edges)
      if (!find_support(instance, instance.edges, e))
        fail("edge " + to_string(e) + " lies on no support");
  }
  return violations;
}

inline void require_valid(const WeightedInstance& instance) {
  const auto violations = validate(instance);
  if (violations.empty()) return;
  std::string msg = "invalid instance:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw InvalidInstance(msg);
}

}  // namespace dualfilter
