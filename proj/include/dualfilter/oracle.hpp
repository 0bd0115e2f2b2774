#pragma once

// Brute-force ground truth. Enumerates every support and derives z*, the
// restricted optima, the exact reduced costs, and the arc-consistent edges.
// Deliberately naive: no pruning, no LP, nothing shared with the solver path.

#include "dualfilter/error.hpp"
#include "dualfilter/model.hpp"
#include "dualfilter/support.hpp"

#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace dualfilter::oracle {

inline constexpr int kMaxAllDiffVariables = 8;
inline constexpr int kMaxPathVertices = 12;

/// Per-edge vectors are parallel to `instance.edges`; an empty optional
/// means the edge lies on no support.
struct OracleReport {
  std::vector<Support> supports;
  Rational z_star{0};
  std::vector<std::optional<Rational>> z_restricted;
  std::vector<std::optional<Rational>> exact_rc;
  std::vector<bool> consistent;

  std::vector<EdgeId> ac_set(const WeightedInstance& instance) const {
    std::vector<EdgeId> out;
    for (std::size_t k = 0; k < consistent.size(); ++k)
      if (consistent[k]) out.push_back(instance.edges[k]);
    return out;
  }
};

inline void check_size(const WeightedInstance& instance) {
  if (instance.kind == ConstraintKind::AllDiff && instance.n_vars > kMaxAllDiffVariables)
    throw SizeGuardExceeded("oracle enumerates at most " + std::to_string(kMaxAllDiffVariables) +
                            " alldiff variables");
  if (instance.kind == ConstraintKind::Path &&
      static_cast<int>(instance.values.size()) > kMaxPathVertices)
    throw SizeGuardExceeded("oracle enumerates at most " + std::to_string(kMaxPathVertices) +
                            " path vertices");
}

/// Every support: injective domain-respecting assignments (AllDiff) or
/// source-to-sink paths (Path).
inline std::vector<Support> all_supports(const WeightedInstance& instance) {
  check_size(instance);
  std::vector<Support> out;
  std::vector<EdgeId> chosen;
  Cost cost = 0;

  if (instance.kind == ConstraintKind::AllDiff) {
    std::set<int> used;
    std::function<void(int)> assign = [&](int var) {
      if (var == instance.n_vars) {
        out.push_back({chosen, cost});
        return;
      }
      for (std::size_t k = 0; k < instance.edges.size(); ++k) {
        const auto& e = instance.edges[k];
        if (e.i != var || used.contains(e.j)) continue;
        used.insert(e.j);
        chosen.push_back(e);
        cost += instance.costs[k];
        assign(var + 1);
        cost -= instance.costs[k];
        chosen.pop_back();
        used.erase(e.j);
      }
    };
    assign(0);
  } else {
    const auto& meta = instance.path.value();
    std::function<void(int)> walk = [&](int v) {
      if (v == meta.sink) {
        out.push_back({chosen, cost});
        return;
      }
      if (chosen.size() > instance.edges.size()) return;  // cycle guard
      for (std::size_t k = 0; k < instance.edges.size(); ++k) {
        const auto& e = instance.edges[k];
        if (e.i != v) continue;
        chosen.push_back(e);
        cost += instance.costs[k];
        walk(e.j);
        cost -= instance.costs[k];
        chosen.pop_back();
      }
    };
    walk(meta.source);
  }
  return out;
}

inline OracleReport enumerate(const WeightedInstance& instance) {
  OracleReport report;
  report.supports = all_supports(instance);
  if (report.supports.empty()) throw InfeasibleConstraint("the constraint has no support");

  report.z_star = report.supports.front().cost;
  for (const auto& s : report.supports) report.z_star = std::min(report.z_star, Rational(s.cost));

  const std::size_t m = instance.edges.size();
  report.z_restricted.assign(m, std::nullopt);
  for (const auto& s : report.supports) {
    for (const auto& e : s.edges) {
      auto& slot = report.z_restricted[instance.edge_index(e)];
      if (!slot || Rational(s.cost) < *slot) slot = Rational(s.cost);
    }
  }
  report.exact_rc.assign(m, std::nullopt);
  report.consistent.assign(m, false);
  for (std::size_t k = 0; k < m; ++k) {
    if (!report.z_restricted[k]) continue;
    report.exact_rc[k] = *report.z_restricted[k] - report.z_star;
    report.consistent[k] = *report.z_restricted[k] <= Rational(instance.z_max);
  }
  return report;
}

/// True iff no support contains two edges of `edges`.
inline bool check_incompatible(const WeightedInstance& instance, std::span<const EdgeId> edges) {
  const std::set<EdgeId> set(edges.begin(), edges.end());
  for (const auto& s : all_supports(instance)) {
    int hits = 0;
    for (const auto& e : s.edges) hits += set.contains(e) ? 1 : 0;
    if (hits > 1) return false;
  }
  return true;
}

}  // namespace dualfilter::oracle
