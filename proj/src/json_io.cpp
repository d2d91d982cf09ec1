// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dupmatch/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupmatch {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed instance: " + what);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    malformed(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

int int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) malformed(std::string("'") + key + "' not an integer");
  return v.get<int>();
}

Value value_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (v.is_string()) return Value::parse(v.get<std::string>());
  if (v.is_number_integer()) return Value::from_int(v.get<std::int64_t>());
  malformed(std::string("'") + key + "' must be a decimal string");
}

std::vector<int> id_list(const json& j) {
  if (!j.is_array()) malformed("expected an array of edge ids");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) malformed("edge id must be an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

json matroid_spec_to_json(const MatroidSpec& spec) {
  if (const auto* cap = std::get_if<CapacitySpec>(&spec)) {
    return {{"type", "capacity"}, {"q", cap->q}};
  }
  if (const auto* lam = std::get_if<LaminarSpec>(&spec)) {
    json sets = json::array();
    for (const auto& s : lam->sets) {
      sets.push_back({{"edges", s.edges}, {"quota", s.quota}});
    }
    return {{"type", "laminar"}, {"sets", sets}};
  }
  const auto& ex = std::get<ExplicitSpec>(spec);
  return {{"type", "explicit"}, {"independent_sets", ex.independent_sets}};
}

MatroidSpec matroid_spec_from_json(const json& j) {
  const json& type = field(j, "type");
  if (!type.is_string()) malformed("constraint type must be a string");
  const auto kind = type.get<std::string>();
  if (kind == "capacity") return CapacitySpec{int_field(j, "q")};
  if (kind == "laminar") {
    LaminarSpec spec;
    const json& sets = field(j, "sets");
    if (!sets.is_array()) malformed("laminar 'sets' must be an array");
    for (const auto& s : sets) {
      spec.sets.push_back({id_list(field(s, "edges")), int_field(s, "quota")});
    }
    return spec;
  }
  if (kind == "explicit") {
    ExplicitSpec spec;
    const json& sets = field(j, "independent_sets");
    if (!sets.is_array()) malformed("'independent_sets' must be an array");
    for (const auto& s : sets) spec.independent_sets.push_back(id_list(s));
    return spec;
  }
  malformed("unknown constraint type '" + kind + "'");
}

json instance_to_json(const Instance& instance) {
  json crit = json::array();
  for (const auto& v : instance.critical_vertices) {
    crit.push_back({{"side", v.side == Side::kU ? "U" : "W"}, {"index", v.index}});
  }
  std::vector<const Edge*> by_id;
  for (const auto& e : instance.edges) by_id.push_back(&e);
  std::stable_sort(by_id.begin(), by_id.end(),
                   [](const Edge* a, const Edge* b) { return a->id < b->id; });
  json edges = json::array();
  for (const Edge* e : by_id) {
    edges.push_back({{"id", e->id},
                     {"u", e->u},
                     {"w", e->w},
                     {"p_u", e->p_u.to_string()},
                     {"p_w", e->p_w.to_string()},
                     {"gamma_u", e->gamma_u.to_string()},
                     {"delta_u", e->delta_u.to_string()},
                     {"gamma_w", e->gamma_w.to_string()},
                     {"delta_w", e->delta_w.to_string()},
                     {"critical", e->critical}});
  }
  json constraints = json::object();
  for (const auto& [v, spec] : instance.constraints) {
    constraints[to_string(v)] = matroid_spec_to_json(spec);
  }
  return {{"u_count", instance.u_count},
          {"w_count", instance.w_count},
          {"critical_vertices", crit},
          {"edges", edges},
          {"constraints", constraints}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string serialize_instance(const Instance& instance) {
  return dump_canonical(instance_to_json(instance));
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) malformed("top level must be an object");
  Instance out;
  out.u_count = int_field(j, "u_count");
  out.w_count = int_field(j, "w_count");
  if (j.contains("critical_vertices")) {
    const json& crit = j.at("critical_vertices");
    if (!crit.is_array()) malformed("'critical_vertices' must be an array");
    for (const auto& c : crit) {
      const json& side = field(c, "side");
      if (!side.is_string() || (side != "U" && side != "W")) {
        malformed("critical vertex side must be \"U\" or \"W\"");
      }
      out.critical_vertices.push_back(
          {side == "U" ? Side::kU : Side::kW, int_field(c, "index")});
    }
    std::sort(out.critical_vertices.begin(), out.critical_vertices.end());
  }
  const json& edges = field(j, "edges");
  if (!edges.is_array()) malformed("'edges' must be an array");
  for (const auto& e : edges) {
    Edge edge;
    edge.id = int_field(e, "id");
    edge.u = int_field(e, "u");
    edge.w = int_field(e, "w");
    edge.p_u = value_field(e, "p_u");
    edge.p_w = value_field(e, "p_w");
    edge.gamma_u = value_field(e, "gamma_u");
    edge.delta_u = value_field(e, "delta_u");
    edge.gamma_w = value_field(e, "gamma_w");
    edge.delta_w = value_field(e, "delta_w");
    if (e.contains("critical")) {
      if (!e.at("critical").is_boolean()) malformed("'critical' must be a boolean");
      edge.critical = e.at("critical").get<bool>();
    }
    out.edges.push_back(edge);
  }
  std::stable_sort(out.edges.begin(), out.edges.end(),
                   [](const Edge& a, const Edge& b) { return a.id < b.id; });
  if (j.contains("constraints")) {
    const json& cons = j.at("constraints");
    if (!cons.is_object()) malformed("'constraints' must be an object");
    for (const auto& [key, spec] : cons.items()) {
      out.constraints[parse_vertex_ref(key)] = matroid_spec_from_json(spec);
    }
  }
  return out;
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& err) {
    throw std::invalid_argument(std::string("malformed JSON: ") + err.what());
  }
  return instance_from_json(j);
}

Matching matching_from_json(const json& j) {
  if (j.is_array()) return make_matching(id_list(j));
  if (j.is_object() && j.contains("edge_ids")) {
    return make_matching(id_list(j.at("edge_ids")));
  }
  if (j.is_object() && j.contains("matching")) {
    return make_matching(id_list(j.at("matching")));
  }
  throw std::invalid_argument(
      "matching must be an id array or an object with 'edge_ids'/'matching'");
}

}  // namespace dupmatch
