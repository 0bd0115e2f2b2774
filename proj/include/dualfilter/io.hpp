#pragma once

// Instance files: UTF-8 JSON
//   {"kind":"alldiff"|"path","n_vars":N,"values":[...],"edges":[[i,j,cost],...],
//    "z_max":Z,"path":{"source":s,"sink":t}}
// "path" is present only for path instances, whose edges are arcs tail->head.

#include "dualfilter/error.hpp"
#include "dualfilter/model.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace dualfilter::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const WeightedInstance& instance) {
  Json j;
  j["kind"] = to_string(instance.kind);
  j["n_vars"] = instance.n_vars;
  j["values"] = instance.values;
  Json edges = Json::array();
  for (std::size_t k = 0; k < instance.edges.size(); ++k)
    edges.push_back({instance.edges[k].i, instance.edges[k].j, instance.costs[k]});
  j["edges"] = std::move(edges);
  j["z_max"] = instance.z_max;
  if (instance.path) j["path"] = {{"source", instance.path->source}, {"sink", instance.path->sink}};
  return j;
}

inline WeightedInstance from_json(const Json& j) {
  try {
    WeightedInstance instance;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "alldiff") instance.kind = ConstraintKind::AllDiff;
    else if (kind == "path") instance.kind = ConstraintKind::Path;
    else throw ParseError("unknown constraint kind '" + kind + "'");
    instance.n_vars = j.at("n_vars").get<int>();
    instance.values = j.at("values").get<std::vector<int>>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("edge entries must be [i, j, cost]");
      instance.edges.push_back({e[0].get<int>(), e[1].get<int>()});
      instance.costs.push_back(e[2].get<Cost>());
    }
    instance.z_max = j.at("z_max").get<Cost>();
    if (j.contains("path")) {
      const auto& p = j.at("path");
      instance.path = PathMeta{p.at("source").get<int>(), p.at("sink").get<int>()};
    }
    return instance;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  }
}

/// Compact single-line JSON followed by a newline.
inline std::string write_instance(const WeightedInstance& instance) {
  return to_json(instance).dump() + "\n";
}

inline WeightedInstance read_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

inline WeightedInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_instance(buffer.str());
}

}  // namespace dualfilter::io
