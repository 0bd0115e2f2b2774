#pragma once

// Worked instances and random instance generators shared by the test suites.

#include "dualfilter/dualfilter.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace fixtures {

using namespace dualfilter;

inline WeightedInstance alldiff(int n_vars, std::vector<int> values,
                                std::vector<std::tuple<int, int, Cost>> edges, Cost z_max) {
  WeightedInstance inst;
  inst.kind = ConstraintKind::AllDiff;
  inst.n_vars = n_vars;
  inst.values = std::move(values);
  for (auto [i, j, c] : edges) {
    inst.edges.push_back({i, j});
    inst.costs.push_back(c);
  }
  inst.z_max = z_max;
  return inst;
}

inline WeightedInstance dag(int n_vertices, std::vector<std::tuple<int, int, Cost>> arcs, Cost z_max) {
  WeightedInstance inst;
  inst.kind = ConstraintKind::Path;
  inst.n_vars = n_vertices - 1;
  for (int v = 0; v < n_vertices; ++v) inst.values.push_back(v);
  for (auto [i, j, c] : arcs) {
    inst.edges.push_back({i, j});
    inst.costs.push_back(c);
  }
  inst.z_max = z_max;
  inst.path = PathMeta{0, n_vertices - 1};
  return inst;
}

// Three variables, seven edges, z* = 0; four edges are filtered at z_max = 1.
inline WeightedInstance filtering_alldiff() {
  return alldiff(3, {0, 1, 2},
                 {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {1, 1, 0}, {1, 2, 1}, {2, 1, 2}, {2, 2, 0}}, 1);
}

inline DualSolution filtering_alldiff_dual(const WeightedInstance& inst) {
  return alldiff_dual(inst, {0, 1, 3}, {0, -1, -3});
}

// s = 0, vertices 1..4, t = 5.
inline WeightedInstance filtering_path() {
  return dag(6,
             {{0, 1, 0}, {0, 2, 2}, {0, 3, 1}, {1, 5, 2}, {1, 2, 0}, {3, 4, 0}, {2, 5, 0}, {4, 5, 1}},
             1);
}

inline DualSolution filtering_path_dual(const WeightedInstance& inst) {
  return path_dual(inst, {{0, 0}, {1, 0}, {2, 0}, {3, -1}, {4, 1}});
}

// Instances whose optimal duals certify one exact reduced cost each.
inline WeightedInstance certificate_alldiff() {
  return alldiff(3, {0, 1, 2},
                 {{0, 0, 0}, {0, 1, 2}, {0, 2, 0}, {1, 0, 1}, {1, 1, 0}, {1, 2, 1}, {2, 1, 1}, {2, 2, 0}},
                 1);
}

inline DualSolution certificate_alldiff_dual(const WeightedInstance& inst) {
  return alldiff_dual(inst, {0, -1, 0}, {0, 1, 0});
}

// s = 0, vertices 1..3, t = 4.
inline WeightedInstance certificate_path() {
  return dag(5, {{0, 1, 1}, {0, 2, 2}, {0, 3, 0}, {1, 4, 1}, {1, 2, 0}, {2, 4, 1}, {3, 4, 0}}, 1);
}

inline DualSolution certificate_path_dual(const WeightedInstance& inst) {
  return path_dual(inst, {{0, 0}, {1, -1}, {2, -1}, {3, 0}});
}

// Topology of the filtering path instance with every cost 0.
inline WeightedInstance layers_path() {
  auto inst = filtering_path();
  std::fill(inst.costs.begin(), inst.costs.end(), 0);
  inst.z_max = 0;
  return inst;
}

inline WeightedInstance complete_alldiff(int n, Cost cost = 0) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 0);
  std::vector<std::tuple<int, int, Cost>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) edges.emplace_back(i, j, cost);
  return alldiff(n, values, edges, 0);
}

inline std::vector<EdgeId> edge_set(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<EdgeId> out;
  for (auto [i, j] : pairs) out.push_back({i, j});
  return out;
}

inline std::vector<EdgeId> sorted(std::vector<EdgeId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------------------
// Random instances. Pruning uses brute-force enumeration so that generated
// instances satisfy the structural AC precondition independently of the
// library's support search.

inline void prune_to_supports(WeightedInstance& inst) {
  std::set<EdgeId> used;
  for (const auto& s : oracle::all_supports(inst))
    for (const auto& e : s.edges) used.insert(e);
  WeightedInstance pruned = inst;
  pruned.edges.clear();
  pruned.costs.clear();
  for (std::size_t k = 0; k < inst.edges.size(); ++k) {
    if (!used.contains(inst.edges[k])) continue;
    pruned.edges.push_back(inst.edges[k]);
    pruned.costs.push_back(inst.costs[k]);
  }
  inst = std::move(pruned);
}

inline Cost random_z_max(std::mt19937& rng, const WeightedInstance& inst) {
  const auto supports = oracle::all_supports(inst);
  Cost z = supports.front().cost;
  for (const auto& s : supports) z = std::min(z, s.cost);
  std::uniform_int_distribution<int> offset(-2, 10);
  return std::max<Cost>(0, z + offset(rng));
}

inline WeightedInstance random_alldiff(std::mt19937& rng, int max_vars = 5) {
  std::uniform_int_distribution<int> pick_n(1, max_vars);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Cost> cost(0, 9);
  const int n = pick_n(rng);
  const int n_values = unit(rng) < 0.3 ? n + 1 : n;
  const double density = 0.35 + 0.55 * unit(rng);

  std::vector<int> values(n_values);
  std::iota(values.begin(), values.end(), 0);
  std::vector<int> perm = values;
  std::shuffle(perm.begin(), perm.end(), rng);

  WeightedInstance inst;
  inst.kind = ConstraintKind::AllDiff;
  inst.n_vars = n;
  inst.values = values;
  for (int i = 0; i < n; ++i) {
    for (int j : values) {
      if (perm[i] == j || unit(rng) < density) {
        inst.edges.push_back({i, j});
        inst.costs.push_back(cost(rng));
      }
    }
  }
  prune_to_supports(inst);
  inst.z_max = random_z_max(rng, inst);
  return inst;
}

inline WeightedInstance random_dag(std::mt19937& rng, int max_vertices = 8) {
  std::uniform_int_distribution<int> pick_n(3, max_vertices);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<Cost> cost(0, 9);
  const int n = pick_n(rng);
  const double density = 0.3 + 0.5 * unit(rng);

  // A random increasing chain guarantees one s-t path.
  std::set<std::pair<int, int>> chain;
  int at = 0;
  while (at != n - 1) {
    std::uniform_int_distribution<int> step(at + 1, n - 1);
    const int next = step(rng);
    chain.insert({at, next});
    at = next;
  }

  WeightedInstance inst;
  inst.kind = ConstraintKind::Path;
  inst.n_vars = n - 1;
  for (int v = 0; v < n; ++v) inst.values.push_back(v);
  inst.path = PathMeta{0, n - 1};
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (chain.contains({i, j}) || unit(rng) < density) {
        inst.edges.push_back({i, j});
        inst.costs.push_back(cost(rng));
      }
    }
  }
  prune_to_supports(inst);
  inst.z_max = random_z_max(rng, inst);
  return inst;
}

inline SatisfactionInstance random_satisfaction(std::mt19937& rng, int max_vars = 4) {
  std::uniform_int_distribution<int> pick_n(1, max_vars);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = pick_n(rng);
  const int n_values = unit(rng) < 0.25 ? n + 1 : n;
  const double density = 0.25 + 0.5 * unit(rng);

  SatisfactionInstance sat;
  sat.n_vars = n;
  for (int j = 0; j < n_values; ++j) sat.values.push_back(j);
  std::vector<int> perm = sat.values;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i)
    for (int j : sat.values)
      if (perm[i] == j || unit(rng) < density) sat.edges.push_back({i, j});
  return sat;
}

}  // namespace fixtures
