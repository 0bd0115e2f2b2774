#pragma once

// Exact-arithmetic two-phase primal simplex on a dense tableau.
//
// Every pivot uses Bland's rule (smallest entering index, smallest leaving
// basic index on ratio ties), so the method terminates on degenerate input
// and is fully deterministic. Dual values are read off the columns that
// formed the initial identity basis, which makes them exact shadow prices.

#include "dualfilter/rational.hpp"

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dualfilter::lp {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Bound { NonNegative, Free, NonPositive };

struct Column {
  std::string tag;
  Bound bound = Bound::NonNegative;
};

struct Row {
  std::vector<Rational> coeffs;  // one entry per column
  Relation relation = Relation::Equal;
  Rational rhs;
  std::string tag;
};

struct LinearProgram {
  Sense sense = Sense::Minimize;
  std::vector<Column> columns;
  std::vector<Rational> objective;
  Rational objective_offset{0};
  std::vector<Row> rows;

  std::size_t add_column(std::string tag, Rational cost, Bound bound = Bound::NonNegative) {
    columns.push_back({std::move(tag), bound});
    objective.push_back(std::move(cost));
    for (auto& row : rows) row.coeffs.emplace_back(0);
    return columns.size() - 1;
  }

  std::size_t add_row(std::vector<Rational> coeffs, Relation relation, Rational rhs,
                      std::string tag) {
    if (coeffs.size() != columns.size())
      throw std::invalid_argument("row '" + tag + "' has wrong width");
    rows.push_back({std::move(coeffs), relation, std::move(rhs), std::move(tag)});
    return rows.size() - 1;
  }

  std::size_t column_count() const { return columns.size(); }
  std::size_t row_count() const { return rows.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

/// `dual` holds one shadow price per row: the rate of change of the optimal
/// objective with respect to that row's right-hand side.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  Rational objective{0};

  bool optimal() const { return status == LpStatus::Optimal; }
};

inline void check_well_formed(const LinearProgram& lp) {
  if (lp.objective.size() != lp.columns.size())
    throw std::invalid_argument("objective width does not match column count");
  std::set<std::string> col_tags, row_tags;
  for (const auto& c : lp.columns)
    if (!col_tags.insert(c.tag).second)
      throw std::invalid_argument("duplicate column tag '" + c.tag + "'");
  for (const auto& r : lp.rows) {
    if (r.coeffs.size() != lp.columns.size())
      throw std::invalid_argument("row '" + r.tag + "' has wrong width");
    if (!row_tags.insert(r.tag).second)
      throw std::invalid_argument("duplicate row tag '" + r.tag + "'");
  }
}

namespace detail {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : lp_(lp) { build(); }

  LpSolution run() {
    if (has_artificials_) {
      std::vector<Rational> phase1(width_, Rational(0));
      for (std::size_t j = 0; j < width_; ++j)
        if (artificial_[j]) phase1[j] = 1;
      price(phase1);
      if (!iterate()) throw std::logic_error("phase one cannot be unbounded");
      if (objective_value() != 0) return LpSolution{LpStatus::Infeasible, {}, {}, Rational(0)};
      drive_out_artificials();
    }
    price(std_cost_);
    if (!iterate()) return LpSolution{LpStatus::Unbounded, {}, {}, Rational(0)};
    return extract();
  }

 private:
  struct StdColumn {
    std::size_t original;
    int sign;
  };

  void build() {
    const int sense_sign = lp_.sense == Sense::Minimize ? 1 : -1;
    for (std::size_t j = 0; j < lp_.columns.size(); ++j) {
      switch (lp_.columns[j].bound) {
        case Bound::NonNegative: structural_.push_back({j, 1}); break;
        case Bound::NonPositive: structural_.push_back({j, -1}); break;
        case Bound::Free:
          structural_.push_back({j, 1});
          structural_.push_back({j, -1});
          break;
      }
    }
    const std::size_t m = lp_.rows.size();
    const std::size_t n_struct = structural_.size();

    // Orient every row so that rhs >= 0, preferring <= for zero rhs.
    std::vector<Relation> relation(m);
    flip_.assign(m, 1);
    std::size_t n_slack = 0, n_art = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = lp_.rows[i];
      Relation rel = row.relation;
      if (row.rhs < 0 || (row.rhs == 0 && rel == Relation::GreaterEqual)) {
        flip_[i] = -1;
        if (rel == Relation::LessEqual) rel = Relation::GreaterEqual;
        else if (rel == Relation::GreaterEqual) rel = Relation::LessEqual;
      }
      relation[i] = rel;
      if (rel != Relation::Equal) ++n_slack;
      if (rel != Relation::LessEqual) ++n_art;
    }
    width_ = n_struct + n_slack + n_art;
    has_artificials_ = n_art > 0;
    artificial_.assign(width_, false);
    tableau_.assign(m, std::vector<Rational>(width_ + 1, Rational(0)));
    basis_.assign(m, 0);
    identity_.assign(m, 0);

    std::size_t next_slack = n_struct, next_art = n_struct + n_slack;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = lp_.rows[i];
      auto& t = tableau_[i];
      for (std::size_t k = 0; k < n_struct; ++k) {
        const auto& sc = structural_[k];
        t[k] = row.coeffs[sc.original] * (sc.sign * flip_[i]);
      }
      t[width_] = row.rhs * flip_[i];
      if (relation[i] == Relation::LessEqual) {
        t[next_slack] = 1;
        identity_[i] = next_slack++;
      } else {
        if (relation[i] == Relation::GreaterEqual) t[next_slack++] = -1;
        t[next_art] = 1;
        artificial_[next_art] = true;
        identity_[i] = next_art++;
      }
      basis_[i] = identity_[i];
    }

    std_cost_.assign(width_, Rational(0));
    for (std::size_t k = 0; k < n_struct; ++k) {
      const auto& sc = structural_[k];
      std_cost_[k] = lp_.objective[sc.original] * (sc.sign * sense_sign);
    }
  }

  // Reduced-cost row for the given cost vector under the current basis.
  void price(const std::vector<Rational>& cost) {
    reduced_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < width_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      const auto& t = tableau_[i];
      for (std::size_t j = 0; j <= width_; ++j)
        if (t[j] != 0) reduced_[j] -= cb * t[j];
    }
  }

  Rational objective_value() const { return -reduced_[width_]; }

  // Returns false when the objective is unbounded below.
  bool iterate() {
    for (;;) {
      std::size_t entering = width_;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!artificial_[j] && reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == width_) return true;

      std::size_t leaving = tableau_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < tableau_.size(); ++i) {
        const Rational& a = tableau_[i][entering];
        if (a <= 0) continue;
        Rational ratio = tableau_[i][width_] / a;
        if (leaving == tableau_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == tableau_.size()) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    auto& prow = tableau_[r];
    const Rational inv = 1 / prow[e];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j] == 0) continue;
      prow[j] *= inv;
      nz.push_back(j);
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[e] == 0) return;
      const Rational factor = row[e];
      for (std::size_t j : nz) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < tableau_.size(); ++i)
      if (i != r) eliminate(tableau_[i]);
    eliminate(reduced_);
    basis_[r] = e;
  }

  // Artificials left basic at zero level after phase one are pivoted out
  // where possible; rows with no structural entry are redundant and keep theirs.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < tableau_.size(); ++i) {
      if (!artificial_[basis_[i]]) continue;
      for (std::size_t j = 0; j < width_; ++j) {
        if (!artificial_[j] && tableau_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  LpSolution extract() const {
    LpSolution sol;
    sol.status = LpStatus::Optimal;
    std::vector<Rational> std_value(width_, Rational(0));
    for (std::size_t i = 0; i < tableau_.size(); ++i) std_value[basis_[i]] = tableau_[i][width_];
    sol.primal.assign(lp_.columns.size(), Rational(0));
    for (std::size_t k = 0; k < structural_.size(); ++k)
      if (std_value[k] != 0)
        sol.primal[structural_[k].original] += std_value[k] * structural_[k].sign;

    const int sense_sign = lp_.sense == Sense::Minimize ? 1 : -1;
    sol.dual.resize(lp_.rows.size());
    for (std::size_t i = 0; i < lp_.rows.size(); ++i)
      sol.dual[i] = -reduced_[identity_[i]] * (flip_[i] * sense_sign);

    sol.objective = lp_.objective_offset;
    for (std::size_t j = 0; j < lp_.columns.size(); ++j)
      if (sol.primal[j] != 0) sol.objective += lp_.objective[j] * sol.primal[j];
    return sol;
  }

  const LinearProgram& lp_;
  std::vector<StdColumn> structural_;
  std::vector<int> flip_;
  std::vector<bool> artificial_;
  std::vector<std::size_t> identity_;
  std::vector<std::size_t> basis_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> std_cost_;
  std::vector<Rational> reduced_;
  std::size_t width_ = 0;
  bool has_artificials_ = false;
};

}  // namespace detail

/// Solves `lp` exactly. On `Optimal`, primal and dual values satisfy strong
/// duality and complementary slackness without tolerance.
inline LpSolution solve(const LinearProgram& lp) {
  check_well_formed(lp);
  return detail::Tableau(lp).run();
}

/// b.y + objective offset.
inline Rational dual_objective(const LinearProgram& lp, std::span<const Rational> row_duals) {
  if (row_duals.size() != lp.rows.size()) throw std::invalid_argument("dual dimension mismatch");
  Rational w = lp.objective_offset;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) w += lp.rows[i].rhs * row_duals[i];
  return w;
}

/// c_j - sum_i a_ij y_i for every column.
inline std::vector<Rational> column_slacks(const LinearProgram& lp,
                                           std::span<const Rational> row_duals) {
  if (row_duals.size() != lp.rows.size()) throw std::invalid_argument("dual dimension mismatch");
  std::vector<Rational> slack = lp.objective;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (row_duals[i] == 0) continue;
    const auto& coeffs = lp.rows[i].coeffs;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] != 0) slack[j] -= coeffs[j] * row_duals[i];
  }
  return slack;
}

/// True iff the row prices `row_duals` are feasible for the dual of `lp`:
/// sign restrictions per row relation and per column bound hold exactly.
inline bool dual_feasible(const LinearProgram& lp, std::span<const Rational> row_duals) {
  check_well_formed(lp);
  if (row_duals.size() != lp.rows.size()) throw std::invalid_argument("dual dimension mismatch");
  const bool minimize = lp.sense == Sense::Minimize;
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    const Rational& y = row_duals[i];
    switch (lp.rows[i].relation) {
      case Relation::Equal: break;
      case Relation::GreaterEqual:
        if (minimize ? y < 0 : y > 0) return false;
        break;
      case Relation::LessEqual:
        if (minimize ? y > 0 : y < 0) return false;
        break;
    }
  }
  const auto slack = column_slacks(lp, row_duals);
  for (std::size_t j = 0; j < lp.columns.size(); ++j) {
    switch (lp.columns[j].bound) {
      case Bound::Free:
        if (slack[j] != 0) return false;
        break;
      case Bound::NonNegative:
        if (minimize ? slack[j] < 0 : slack[j] > 0) return false;
        break;
      case Bound::NonPositive:
        if (minimize ? slack[j] > 0 : slack[j] < 0) return false;
        break;
    }
  }
  return true;
}

inline bool is_integral(std::span<const Rational> values) {
  for (const auto& v : values)
    if (!is_integer(v)) return false;
  return true;
}

}  // namespace dualfilter::lp
