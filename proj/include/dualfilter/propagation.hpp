#pragma once

// Arc-consistency by dual solves: one family dual program per incompatible
// set, each solution filtering the whole edge set.

#include "dualfilter/duality.hpp"
#include "dualfilter/formulations.hpp"
#include "dualfilter/model.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <vector>

namespace dualfilter {

enum class Mark { Unmarked, Consistent, Inconsistent };

inline std::string to_string(Mark m) {
  switch (m) {
    case Mark::Unmarked: return "unmarked";
    case Mark::Consistent: return "consistent";
    case Mark::Inconsistent: return "inconsistent";
  }
  return "?";
}

enum class SetOrder {
  Greedy,    // most unmarked edges first, recomputed after every solve
  AsListed,  // family order
};

struct FilterOptions {
  std::optional<std::size_t> budget;  // maximum number of dual solves
  SetOrder order = SetOrder::Greedy;
  bool parallel = false;  // solve every pending set concurrently, merge in family order
};

struct UsedDual {
  std::size_t set_index = 0;
  DualSolution dual;

  friend bool operator==(const UsedDual&, const UsedDual&) = default;
};

/// Marks are parallel to `instance.edges`. `failed` reports that no support
/// fits under z_max (or that the constraint has no support at all).
struct FilterResult {
  std::vector<Mark> marks;
  std::optional<Rational> z_lb;
  std::vector<UsedDual> duals_used;
  bool complete = false;
  bool failed = false;

  friend bool operator==(const FilterResult&, const FilterResult&) = default;

  std::size_t dual_solves() const { return duals_used.size(); }

  std::size_t count(Mark m) const {
    return static_cast<std::size_t>(std::count(marks.begin(), marks.end(), m));
  }
};

namespace detail {

inline std::size_t unmarked_in(const WeightedInstance& instance, const EdgeSet& set,
                               const std::vector<Mark>& marks) {
  std::size_t n = 0;
  for (const auto& e : set.edges)
    if (marks[instance.edge_index(e)] == Mark::Unmarked) ++n;
  return n;
}

// Applies one solved dual. Returns false once the bound proves z* > z_max.
inline bool absorb(const WeightedInstance& instance, const EdgeSet& set, std::size_t set_index,
                   DualSolution u, FilterResult& result) {
  const auto r = reduced_costs(instance, u);
  const Rational& w = u.objective;
  const Rational z_max(instance.z_max);

  // Any feasible dual gives w <= z*; a covering set gives z* exactly.
  Rational bound = w;
  if (set.covering) {
    Rational least = r[instance.edge_index(set.edges.front())];
    for (const auto& e : set.edges) least = std::min(least, r[instance.edge_index(e)]);
    bound = w + least;
  }
  if (!result.z_lb || bound > *result.z_lb) result.z_lb = bound;

  for (std::size_t k = 0; k < instance.edges.size(); ++k)
    if (result.marks[k] == Mark::Unmarked && w + r[k] > z_max) result.marks[k] = Mark::Inconsistent;
  for (const auto& e : set.edges) {
    const std::size_t k = instance.edge_index(e);
    if (result.marks[k] == Mark::Unmarked && w + r[k] <= z_max) result.marks[k] = Mark::Consistent;
  }
  result.duals_used.push_back({set_index, std::move(u)});
  return *result.z_lb <= z_max;
}

inline void finish(FilterResult& result) {
  result.complete = std::none_of(result.marks.begin(), result.marks.end(),
                                 [](Mark m) { return m == Mark::Unmarked; });
  if (result.complete && !result.marks.empty() &&
      std::all_of(result.marks.begin(), result.marks.end(),
                  [](Mark m) { return m == Mark::Inconsistent; }))
    result.failed = true;
}

}  // namespace detail

/// Filters every edge of `instance` with one family dual solve per
/// incompatible set. Inconsistency is marked for any edge with
/// w + r > z_max; consistency only for edges of the set just solved, where
/// w + r is exact. Stops early with `failed` once z* > z_max is proven.
inline FilterResult ac_by_lp(const WeightedInstance& instance, const IncompatibleFamily& fam,
                             const FilterOptions& options = {}) {
  FilterResult result;
  result.marks.assign(instance.edges.size(), Mark::Unmarked);
  const std::size_t budget = options.budget.value_or(fam.sets.size() + 1);

  if (options.parallel) {
    std::vector<std::size_t> pending;
    for (std::size_t s = 0; s < fam.sets.size() && pending.size() < budget; ++s)
      if (!fam.sets[s].edges.empty()) pending.push_back(s);
    std::vector<std::future<DualSolution>> solves;
    for (std::size_t s : pending)
      solves.push_back(std::async(std::launch::async, [&instance, &fam, s] {
        return solve_family_dual(instance, fam.sets[s].edges);
      }));
    bool alive = true;
    for (std::size_t p = 0; p < pending.size(); ++p) {
      try {
        auto u = solves[p].get();
        if (alive) alive = detail::absorb(instance, fam.sets[pending[p]], pending[p], std::move(u), result);
      } catch (const InfeasibleConstraint&) {
        result.failed = true;
        alive = false;
      }
    }
    if (!alive) result.failed = true;
    detail::finish(result);
    return result;
  }

  while (result.dual_solves() < budget) {
    std::optional<std::size_t> next;
    std::size_t best = 0;
    for (std::size_t s = 0; s < fam.sets.size(); ++s) {
      const std::size_t open = detail::unmarked_in(instance, fam.sets[s], result.marks);
      if (open == 0) continue;
      if (options.order == SetOrder::AsListed) {
        next = s;
        break;
      }
      if (!next || open > best) {
        next = s;
        best = open;
      }
    }
    if (!next) break;

    DualSolution u;
    try {
      u = solve_family_dual(instance, fam.sets[*next].edges);
    } catch (const InfeasibleConstraint&) {
      result.failed = true;
      break;
    }
    if (!detail::absorb(instance, fam.sets[*next], *next, std::move(u), result)) {
      result.failed = true;
      break;
    }
  }
  detail::finish(result);
  return result;
}

/// z* from the first covering set of the family.
inline Rational lower_bound(const WeightedInstance& instance, const IncompatibleFamily& fam) {
  for (const auto& set : fam.sets) {
    if (!set.covering || set.edges.empty()) continue;
    return zstar_from_family_dual(instance, set, solve_family_dual(instance, set.edges));
  }
  throw std::invalid_argument("family has no covering set");
}

}  // namespace dualfilter
