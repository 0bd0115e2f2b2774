#pragma once

// Machine-readable (JSON) and human-readable (text) reports. Rationals are
// always written as "p/q" strings in JSON.

#include "dualfilter/duality.hpp"
#include "dualfilter/error.hpp"
#include "dualfilter/formulations.hpp"
#include "dualfilter/oracle.hpp"
#include "dualfilter/propagation.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>
#include <string>

namespace dualfilter::report {

using Json = nlohmann::ordered_json;

inline Json rational_or_null(const std::optional<Rational>& v) {
  return v ? Json(to_string(*v)) : Json(nullptr);
}

inline std::string pretty(const Rational& v) {
  return is_integer(v) ? boost::multiprecision::numerator(v).str() : to_string(v);
}

inline Json edge_json(const EdgeId& e) { return Json::array({e.i, e.j}); }

inline Json marks_json(const WeightedInstance& instance, const std::vector<Mark>& marks) {
  Json out = Json::array();
  for (std::size_t k = 0; k < instance.edges.size(); ++k)
    out.push_back({{"edge", edge_json(instance.edges[k])}, {"mark", to_string(marks[k])}});
  return out;
}

inline Json dual_json(const WeightedInstance& instance, const UsedDual& used) {
  Json d;
  d["set"] = used.set_index;
  Json rows = Json::array(), values = Json::array();
  const auto tags = primal_rows(instance);
  for (std::size_t r = 0; r < tags.size(); ++r) {
    rows.push_back(to_string(tags[r]));
    values.push_back(to_string(used.dual.values.at(r)));
  }
  d["rows"] = std::move(rows);
  d["values"] = std::move(values);
  d["objective"] = to_string(used.dual.objective);
  if (instance.kind == ConstraintKind::Path) {
    Json pot = Json::array();
    for (const auto& [v, p] : vertex_potentials(instance, used.dual)) pot.push_back({v, to_string(p)});
    d["potentials"] = std::move(pot);
  }
  return d;
}

inline Json filter_json(const WeightedInstance& instance, const IncompatibleFamily& fam,
                        const FilterResult& result, bool emit_duals) {
  Json j;
  j["command"] = "filter";
  j["kind"] = to_string(instance.kind);
  j["family"] = to_string(fam.strategy);
  j["z_max"] = instance.z_max;
  j["status"] = result.failed ? "failed" : "ok";
  j["complete"] = result.complete;
  j["z_lb"] = rational_or_null(result.z_lb);
  j["dual_solves"] = result.dual_solves();
  j["marks"] = marks_json(instance, result.marks);
  if (emit_duals) {
    Json duals = Json::array();
    for (const auto& used : result.duals_used) duals.push_back(dual_json(instance, used));
    j["duals"] = std::move(duals);
  }
  return j;
}

inline Mark parse_mark(const std::string& s) {
  if (s == "unmarked") return Mark::Unmarked;
  if (s == "consistent") return Mark::Consistent;
  if (s == "inconsistent") return Mark::Inconsistent;
  throw ParseError("unknown mark '" + s + "'");
}

/// Rebuilds a FilterResult from `filter_json` output. Dual solutions are
/// recovered only when the report was written with duals.
inline FilterResult parse_filter_json(const Json& j) {
  try {
    FilterResult result;
    for (const auto& m : j.at("marks")) result.marks.push_back(parse_mark(m.at("mark").get<std::string>()));
    if (!j.at("z_lb").is_null()) result.z_lb = parse_rational(j.at("z_lb").get<std::string>());
    result.complete = j.at("complete").get<bool>();
    result.failed = j.at("status").get<std::string>() == "failed";
    if (j.contains("duals")) {
      for (const auto& d : j.at("duals")) {
        UsedDual used;
        used.set_index = d.at("set").get<std::size_t>();
        for (const auto& v : d.at("values")) used.dual.values.push_back(parse_rational(v.get<std::string>()));
        used.dual.objective = parse_rational(d.at("objective").get<std::string>());
        result.duals_used.push_back(std::move(used));
      }
    }
    return result;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed filter report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed filter report: ") + e.what());
  }
}

inline std::vector<Mark> oracle_marks(const oracle::OracleReport& rep) {
  std::vector<Mark> marks;
  for (bool c : rep.consistent) marks.push_back(c ? Mark::Consistent : Mark::Inconsistent);
  return marks;
}

inline Json oracle_json(const WeightedInstance& instance, const oracle::OracleReport& rep) {
  Json j;
  j["command"] = "oracle";
  j["kind"] = to_string(instance.kind);
  j["z_max"] = instance.z_max;
  j["z_star"] = to_string(rep.z_star);
  Json supports = Json::array();
  for (const auto& s : rep.supports) {
    Json edges = Json::array();
    for (const auto& e : s.edges) edges.push_back(edge_json(e));
    supports.push_back({{"edges", std::move(edges)}, {"cost", to_string(Rational(s.cost))}});
  }
  j["supports"] = std::move(supports);
  Json edges = Json::array();
  for (std::size_t k = 0; k < instance.edges.size(); ++k)
    edges.push_back({{"edge", edge_json(instance.edges[k])},
                     {"z_restricted", rational_or_null(rep.z_restricted[k])},
                     {"exact_rc", rational_or_null(rep.exact_rc[k])}});
  j["edges"] = std::move(edges);
  j["marks"] = marks_json(instance, oracle_marks(rep));
  return j;
}

inline std::string filter_text(const WeightedInstance& instance, const IncompatibleFamily& fam,
                               const FilterResult& result, bool emit_duals) {
  std::ostringstream out;
  out << "family:      " << to_string(fam.strategy) << " (" << fam.sets.size() << " sets)\n";
  out << "status:      " << (result.failed ? "failed (no support within z_max)" : "ok") << "\n";
  out << "complete:    " << (result.complete ? "yes" : "no") << "\n";
  out << "z_lb:        " << (result.z_lb ? pretty(*result.z_lb) : "none") << "\n";
  out << "dual solves: " << result.dual_solves() << "\n";
  out << "inconsistent " << result.count(Mark::Inconsistent) << ", consistent "
      << result.count(Mark::Consistent) << ", unmarked " << result.count(Mark::Unmarked) << "\n";
  for (std::size_t k = 0; k < instance.edges.size(); ++k)
    out << "  " << std::left << std::setw(10) << to_string(instance.edges[k])
        << " cost " << std::setw(4) << instance.costs[k] << to_string(result.marks[k]) << "\n";
  if (emit_duals) {
    const auto tags = primal_rows(instance);
    for (const auto& used : result.duals_used) {
      out << "dual for set " << used.set_index << ": w = " << pretty(used.dual.objective) << "\n ";
      if (instance.kind == ConstraintKind::Path) {
        for (const auto& [v, p] : vertex_potentials(instance, used.dual))
          out << " u" << v << "=" << pretty(p);
      } else {
        for (std::size_t r = 0; r < tags.size(); ++r)
          out << " " << to_string(tags[r]) << "=" << pretty(used.dual.values[r]);
      }
      out << "\n";
    }
  }
  return out.str();
}

inline std::string oracle_text(const WeightedInstance& instance, const oracle::OracleReport& rep) {
  std::ostringstream out;
  out << "supports: " << rep.supports.size() << "\n";
  out << "z*:       " << pretty(rep.z_star) << "\n";
  for (std::size_t k = 0; k < instance.edges.size(); ++k) {
    out << "  " << std::left << std::setw(10) << to_string(instance.edges[k]) << " z|=";
    out << std::setw(6) << (rep.z_restricted[k] ? pretty(*rep.z_restricted[k]) : "none");
    out << " R=" << std::setw(6) << (rep.exact_rc[k] ? pretty(*rep.exact_rc[k]) : "none");
    out << (rep.consistent[k] ? "consistent" : "inconsistent") << "\n";
  }
  return out.str();
}

}  // namespace dualfilter::report
