#pragma once

// Reduced costs, exact reduced costs, exactness certificates, and the
// constructions of optimal dual solutions that carry exact reduced costs:
// one edge at a time (cost-shifted primal), a whole incompatible set at a
// time (the family dual programs), and the averaged dual for 0/1 encodings.

#include "dualfilter/formulations.hpp"
#include "dualfilter/lp.hpp"
#include "dualfilter/model.hpp"
#include "dualfilter/support.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace dualfilter {

/// Dual values in the row layout of `primal_rows(instance)`, with the
/// dual objective w = sum of rhs * value.
struct DualSolution {
  std::vector<Rational> values;
  Rational objective{0};

  friend bool operator==(const DualSolution&, const DualSolution&) = default;
};

inline DualSolution make_dual(const WeightedInstance& instance, std::vector<Rational> values) {
  const auto prog = primal_program(instance);
  DualSolution u;
  u.objective = lp::dual_objective(prog, values);
  u.values = std::move(values);
  return u;
}

/// Builds an AllDiff dual from per-variable values `u` and per-value values
/// `v` (indexed like `instance.values`).
inline DualSolution alldiff_dual(const WeightedInstance& instance, const std::vector<Rational>& u,
                                 const std::vector<Rational>& v) {
  if (instance.kind != ConstraintKind::AllDiff) throw std::invalid_argument("not an alldiff instance");
  if (static_cast<int>(u.size()) != instance.n_vars || v.size() != instance.values.size())
    throw std::invalid_argument("dual dimension mismatch");
  std::vector<Rational> values(u);
  values.insert(values.end(), v.begin(), v.end());
  return make_dual(instance, std::move(values));
}

/// Builds a Path dual from vertex potentials. The sink has no row, so its
/// potential must be absent or zero.
inline DualSolution path_dual(const WeightedInstance& instance,
                              const std::map<int, Rational>& potential) {
  if (instance.kind != ConstraintKind::Path) throw std::invalid_argument("not a path instance");
  if (auto it = potential.find(instance.path->sink); it != potential.end() && it->second != 0)
    throw std::invalid_argument("sink potential is fixed to 0");
  std::vector<Rational> values;
  for (const auto& tag : primal_rows(instance)) {
    auto it = potential.find(tag.index);
    values.push_back(it == potential.end() ? Rational(0) : it->second);
  }
  return make_dual(instance, std::move(values));
}

/// Per-vertex potentials of a Path dual, with the sink padded as 0.
inline std::map<int, Rational> vertex_potentials(const WeightedInstance& instance,
                                                 const DualSolution& u) {
  std::map<int, Rational> out;
  const auto rows = primal_rows(instance);
  for (std::size_t r = 0; r < rows.size(); ++r) out[rows[r].index] = u.values.at(r);
  out[instance.path.value().sink] = 0;
  return out;
}

/// r_ij = c_ij - sum_rows a_row,ij u_row for every edge, in edge order.
inline std::vector<Rational> reduced_costs(const WeightedInstance& instance, const DualSolution& u) {
  return lp::column_slacks(primal_program(instance), u.values);
}

inline Rational reduced_cost(const WeightedInstance& instance, const DualSolution& u,
                             const EdgeId& ij) {
  const std::size_t k = instance.edge_index(ij);
  return reduced_costs(instance, u)[k];
}

inline bool dual_feasible(const WeightedInstance& instance, const DualSolution& u) {
  return lp::dual_feasible(primal_program(instance), u.values);
}

/// z*: optimal value of the primal program.
inline Rational optimal_value(const WeightedInstance& instance) {
  const auto sol = lp::solve(primal_program(instance));
  if (!sol.optimal()) throw InfeasibleConstraint("the constraint has no support");
  return sol.objective;
}

/// z*_{|kl}, or nothing when no support contains kl.
inline std::optional<Rational> restricted_optimum(const WeightedInstance& instance,
                                                  const EdgeId& kl) {
  const auto sol = lp::solve(restricted_program(instance, kl));
  if (!sol.optimal()) return std::nullopt;
  return sol.objective;
}

/// R_kl = z*_{|kl} - z*.
inline Rational exact_reduced_cost(const WeightedInstance& instance, const EdgeId& kl) {
  const auto restricted = restricted_optimum(instance, kl);
  if (!restricted) throw std::invalid_argument("edge " + to_string(kl) + " lies on no support");
  return *restricted - optimal_value(instance);
}

/// R for every edge in edge order; empty entries for edges on no support.
inline std::vector<std::optional<Rational>> exact_reduced_costs(const WeightedInstance& instance) {
  const Rational z = optimal_value(instance);
  std::vector<std::optional<Rational>> out;
  for (const auto& e : instance.edges) {
    auto restricted = restricted_optimum(instance, e);
    out.push_back(restricted ? std::optional<Rational>(*restricted - z) : std::nullopt);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exactness certificate

enum class Verdict { Exact, NotProven };

struct ExactnessCertificate {
  EdgeId edge;
  Verdict verdict = Verdict::NotProven;
  Rational reduced_cost{0};
  std::optional<Support> witness;  // present iff verdict == Exact
};

/// Decides whether r_kl under the optimal dual `u` equals R_kl by searching
/// for a support through kl whose other edges all have zero reduced cost,
/// then checking cost(witness) = w + r_kl. For non-square AllDiff, values
/// with a non-zero dual must be taken, since an unused value has slack -v_j.
inline ExactnessCertificate exactness_certificate(const WeightedInstance& instance,
                                                  const DualSolution& u, const EdgeId& kl) {
  const std::size_t kl_index = instance.edge_index(kl);
  if (!dual_feasible(instance, u)) throw std::invalid_argument("dual solution is infeasible");
  if (u.objective != optimal_value(instance))
    throw std::invalid_argument("dual solution is not optimal");

  const auto r = reduced_costs(instance, u);
  std::vector<EdgeId> allowed;
  for (std::size_t k = 0; k < instance.edges.size(); ++k)
    if (r[k] == 0 || k == kl_index) allowed.push_back(instance.edges[k]);

  std::vector<int> required;
  if (instance.kind == ConstraintKind::AllDiff && !square_assignment(instance)) {
    const auto rows = primal_rows(instance);
    for (std::size_t row = 0; row < rows.size(); ++row)
      if (rows[row].role == RowRole::Value && u.values[row] != 0) required.push_back(rows[row].index);
  }

  ExactnessCertificate cert;
  cert.edge = kl;
  cert.reduced_cost = r[kl_index];
  auto witness = find_support(instance, allowed, kl, required);
  if (witness && Rational(witness->cost) == u.objective + cert.reduced_cost) {
    cert.verdict = Verdict::Exact;
    cert.witness = std::move(witness);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Optimal duals carrying exact reduced costs

/// Solves the primal with c_kl lowered by R_kl; its optimal dual is optimal
/// for the original dual program and has r_kl = R_kl.
inline DualSolution shifted_cost_dual(const WeightedInstance& instance, const EdgeId& kl) {
  const Rational exact = exact_reduced_cost(instance, kl);
  auto prog = primal_program(instance);
  prog.objective[instance.edge_index(kl)] -= exact;
  const auto sol = lp::solve(prog);
  if (!sol.optimal()) throw InfeasibleConstraint("cost-shifted program has no optimum");
  return make_dual(instance, sol.dual);
}

enum class FamilyDualMode {
  WithZStar,  // maximise sum of r over I subject to w = z*
  BigM,       // maximise w + mean r over I with r_kl <= M on I
};

/// 1 + sum of all costs: strictly above the cost of any support.
inline Rational big_m(const WeightedInstance& instance) {
  return Rational(1 + instance.total_cost());
}

/// The dual program specialised to the incompatible set `edges`. With
/// `WithZStar`, `z_star` is used when given and computed otherwise.
inline lp::LinearProgram family_dual_program(const WeightedInstance& instance,
                                             std::span<const EdgeId> edges,
                                             FamilyDualMode mode = FamilyDualMode::BigM,
                                             std::optional<Rational> z_star = std::nullopt) {
  if (edges.empty()) throw std::invalid_argument("incompatible set is empty");
  const auto base = dual_program(instance);
  lp::LinearProgram prog = base;

  std::vector<Rational> r_gradient(prog.column_count(), Rational(0));
  Rational r_constant(0);
  for (const auto& kl : edges) {
    const auto& row = base.rows[instance.edge_index(kl)];
    for (std::size_t c = 0; c < row.coeffs.size(); ++c) r_gradient[c] -= row.coeffs[c];
    r_constant += row.rhs;
  }

  if (mode == FamilyDualMode::BigM) {
    const Rational weight(1, static_cast<long>(edges.size()));
    for (std::size_t c = 0; c < prog.column_count(); ++c)
      prog.objective[c] += weight * r_gradient[c];
    prog.objective_offset += weight * r_constant;
    const Rational m = big_m(instance);
    for (const auto& kl : edges) {
      const auto& row = base.rows[instance.edge_index(kl)];
      prog.add_row(row.coeffs, lp::Relation::GreaterEqual, row.rhs - m, "cap" + to_string(kl));
    }
  } else {
    const Rational z = z_star ? *z_star : optimal_value(instance);
    prog.add_row(base.objective, lp::Relation::Equal, z, "zstar");
    prog.objective = r_gradient;
    prog.objective_offset = r_constant;
  }
  return prog;
}

/// Optimal dual of the family program: for every ij in `edges`,
/// w + r_ij = z*_{|ij}.
inline DualSolution solve_family_dual(const WeightedInstance& instance,
                                      std::span<const EdgeId> edges,
                                      FamilyDualMode mode = FamilyDualMode::BigM) {
  const auto sol = lp::solve(family_dual_program(instance, edges, mode));
  if (!sol.optimal())
    throw InfeasibleConstraint("family dual program is " + lp::to_string(sol.status));
  return make_dual(instance, sol.primal);
}

/// z* = w + min over the set of r, valid when the set is covering.
inline Rational zstar_from_family_dual(const WeightedInstance& instance, const EdgeSet& set,
                                       const DualSolution& u) {
  if (!set.covering) throw std::invalid_argument("edge set is not covering");
  if (set.edges.empty()) throw std::invalid_argument("incompatible set is empty");
  const auto r = reduced_costs(instance, u);
  Rational best = r[instance.edge_index(set.edges.front())];
  for (const auto& e : set.edges) best = std::min(best, r[instance.edge_index(e)]);
  return u.objective + best;
}

/// Optimal dual of the 0/1 encoding of `sat` whose reduced cost is positive
/// exactly on the edges that lie on no zero-cost support: the average of
/// one cost-shifted dual per such edge.
inline DualSolution averaged_satisfaction_dual(const SatisfactionInstance& sat) {
  const auto encoded = bg01_encode(sat);
  if (!find_support(encoded, sat.edges)) throw InfeasibleConstraint("the constraint has no support");

  const auto exact = exact_reduced_costs(encoded);
  std::vector<EdgeId> filtered;
  for (std::size_t k = 0; k < encoded.edges.size(); ++k)
    if (exact[k] && *exact[k] > 0) filtered.push_back(encoded.edges[k]);
  if (filtered.empty()) return make_dual(encoded, lp::solve(primal_program(encoded)).dual);

  std::vector<Rational> sum(primal_rows(encoded).size(), Rational(0));
  for (const auto& e : filtered) {
    const auto u = shifted_cost_dual(encoded, e);
    for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += u.values[r];
  }
  const Rational count(static_cast<long>(filtered.size()));
  for (auto& v : sum) v /= count;
  return make_dual(encoded, std::move(sum));
}

}  // namespace dualfilter
