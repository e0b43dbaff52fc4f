#pragma once

// JSON form of an annular diagram:
//   {"n_strands": 3,
//    "strands": [[{"c": 1, "role": "u"}, ...], ...],
//    "signs": {"1": -1, ...},
//    "inner_order": [1, 2, 3], "outer_order": [1, 2, 3]}

#include <fstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "borromean/errors.hpp"
#include "borromean/tangle.hpp"

namespace borromean {

inline nlohmann::json diagram_to_json(const AnnularDiagram& d) {
  nlohmann::json j;
  j["n_strands"] = d.n_strands;
  j["strands"] = nlohmann::json::array();
  for (const auto& strand : d.strands) {
    auto arr = nlohmann::json::array();
    for (const auto& p : strand) {
      arr.push_back({{"c", p.crossing}, {"role", p.role == Role::over ? "o" : "u"}});
    }
    j["strands"].push_back(arr);
  }
  j["signs"] = nlohmann::json::object();
  for (const auto& [id, sign] : d.signs) j["signs"][std::to_string(id)] = sign;
  j["inner_order"] = d.inner_order;
  j["outer_order"] = d.outer_order;
  return j;
}

inline AnnularDiagram diagram_from_json(const nlohmann::json& j) {
  try {
    AnnularDiagram d;
    d.n_strands = j.at("n_strands").get<int>();
    for (const auto& strand : j.at("strands")) {
      std::vector<Passage> list;
      for (const auto& p : strand) {
        const auto role = p.at("role").get<std::string>();
        if (role != "o" && role != "u") throw UsageError("passage role must be \"o\" or \"u\", got \"" + role + "\"");
        list.push_back({p.at("c").get<int>(), role == "o" ? Role::over : Role::under});
      }
      d.strands.push_back(std::move(list));
    }
    for (const auto& [key, value] : j.at("signs").items()) {
      std::size_t used = 0;
      const int id = std::stoi(key, &used);
      if (used != key.size()) throw UsageError("crossing id '" + key + "' is not an integer");
      d.signs[id] = value.get<int>();
    }
    d.inner_order = j.at("inner_order").get<std::vector<int>>();
    d.outer_order = j.at("outer_order").get<std::vector<int>>();
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed diagram JSON: ") + e.what());
  } catch (const std::logic_error&) {
    throw UsageError("malformed diagram JSON: crossing ids must be integers");
  }
}

inline AnnularDiagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open diagram file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("cannot parse '" + path + "': " + e.what());
  }
  auto d = diagram_from_json(j);
  require_valid(d);
  return d;
}

}  // namespace borromean
