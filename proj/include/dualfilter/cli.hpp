#pragma once

#include "dualfilter/io.hpp"
#include "dualfilter/oracle.hpp"
#include "dualfilter/propagation.hpp"
#include "dualfilter/report.hpp"
#include "dualfilter/validate.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace dualfilter::cli {

enum class Command { Filter, Oracle, Verify, Bound };
enum class OutputFormat { Json, Text };

struct RunConfig {
  std::string instance_path;
  Command command = Command::Filter;
  FamilyStrategy family = FamilyStrategy::Domains;
  std::optional<long long> budget;
  bool emit_duals = false;
  OutputFormat format = OutputFormat::Json;
  SetOrder order = SetOrder::Greedy;
  bool parallel = false;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidInstance = 2;
inline constexpr int kInfeasible = 3;
inline constexpr int kMismatch = 4;
inline constexpr int kSizeGuard = 5;
}  // namespace exit_code

namespace detail {

inline int filter(const WeightedInstance& instance, const RunConfig& config, std::ostream& out) {
  const auto fam = family(instance, config.family);
  FilterOptions options;
  if (config.budget) options.budget = static_cast<std::size_t>(*config.budget);
  options.order = config.order;
  options.parallel = config.parallel;
  const auto result = ac_by_lp(instance, fam, options);
  if (config.format == OutputFormat::Json)
    out << report::filter_json(instance, fam, result, config.emit_duals).dump(2) << "\n";
  else
    out << report::filter_text(instance, fam, result, config.emit_duals);
  return result.failed ? exit_code::kInfeasible : exit_code::kOk;
}

inline int run_oracle(const WeightedInstance& instance, const RunConfig& config, std::ostream& out) {
  const auto rep = oracle::enumerate(instance);
  if (config.format == OutputFormat::Json)
    out << report::oracle_json(instance, rep).dump(2) << "\n";
  else
    out << report::oracle_text(instance, rep);
  return exit_code::kOk;
}

// Placed marks must agree with the oracle; a failed filter must meet an
// empty oracle AC set. Unmarked edges only count against a run with no budget.
inline int verify(const WeightedInstance& instance, const RunConfig& config, std::ostream& out) {
  const auto rep = oracle::enumerate(instance);
  const auto fam = family(instance, config.family);
  FilterOptions options;
  if (config.budget) options.budget = static_cast<std::size_t>(*config.budget);
  options.order = config.order;
  options.parallel = config.parallel;
  const auto result = ac_by_lp(instance, fam, options);
  const auto expected = report::oracle_marks(rep);

  std::vector<std::string> mismatches;
  const bool oracle_empty = std::none_of(rep.consistent.begin(), rep.consistent.end(), [](bool c) { return c; });
  if (result.failed) {
    if (!oracle_empty) mismatches.push_back("filter failed but the oracle finds supports within z_max");
  } else {
    for (std::size_t k = 0; k < instance.edges.size(); ++k) {
      const Mark got = result.marks[k];
      if (got == expected[k]) continue;
      if (got == Mark::Unmarked && config.budget) continue;
      mismatches.push_back(to_string(instance.edges[k]) + ": filter " + to_string(got) + ", oracle " +
                           to_string(expected[k]));
    }
  }

  if (config.format == OutputFormat::Json) {
    report::Json j;
    j["command"] = "verify";
    j["match"] = mismatches.empty();
    j["filter_status"] = result.failed ? "failed" : "ok";
    j["dual_solves"] = result.dual_solves();
    j["mismatches"] = mismatches;
    out << j.dump(2) << "\n";
  } else {
    if (mismatches.empty()) {
      out << (result.failed ? "marks identical (constraint infeasible under z_max)\n" : "marks identical\n");
    } else {
      out << "marks differ:\n";
      for (const auto& m : mismatches) out << "  " << m << "\n";
    }
  }
  return mismatches.empty() ? exit_code::kOk : exit_code::kMismatch;
}

inline int bound(const WeightedInstance& instance, const RunConfig& config, std::ostream& out) {
  const auto z = lower_bound(instance, family(instance, config.family));
  if (config.format == OutputFormat::Json) {
    report::Json j;
    j["command"] = "bound";
    j["z_star"] = to_string(z);
    out << j.dump(2) << "\n";
  } else {
    out << "z*: " << report::pretty(z) << "\n";
  }
  return exit_code::kOk;
}

}  // namespace detail

/// Executes one command; the report goes to `out`, diagnostics to `err`.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.budget && *config.budget < 0) {
      err << "error: budget must be non-negative\n";
      return exit_code::kUsage;
    }
    const auto instance = io::load_instance(config.instance_path);
    const auto violations = validate(instance);
    if (!violations.empty()) {
      err << "error: invalid instance\n";
      for (const auto& v : violations) err << "  " << v << "\n";
      return exit_code::kInvalidInstance;
    }
    if (config.family == FamilyStrategy::Layers && instance.kind != ConstraintKind::Path) {
      err << "error: the layers family applies to path instances only\n";
      return exit_code::kUsage;
    }
    switch (config.command) {
      case Command::Filter: return detail::filter(instance, config, out);
      case Command::Oracle: return detail::run_oracle(instance, config, out);
      case Command::Verify: return detail::verify(instance, config, out);
      case Command::Bound: return detail::bound(instance, config, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const InvalidInstance& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInvalidInstance;
  } catch (const InfeasibleConstraint& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInfeasible;
  } catch (const SizeGuardExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kSizeGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace dualfilter::cli
