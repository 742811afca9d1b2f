#pragma once

#include <fstream>

#include <json.hpp>

#include "zastava/root_datum.hpp"

namespace zastava {

/// Root-datum configuration, one of
///   {"type": "A", "rank": 2}
///   {"product": [{"type":"B","rank":3}, {"type":"T","rank":1}]}
///   {"cartan": [[2,-1],[-1,2]]}
/// optionally with {"levi": [1-based simple indices]}.
inline RootDatum root_datum_from_json(const nlohmann::json& j) {
  if (j.contains("cartan")) {
    std::vector<Vec> cartan;
    for (auto& row : j.at("cartan")) cartan.push_back(row.get<Vec>());
    int torus = j.value("torus_rank", 0);
    return build_root_datum(cartan, torus);
  }
  if (j.contains("product")) {
    std::vector<FactorSpec> fs;
    for (auto& f : j.at("product")) {
      std::string t = f.at("type").get<std::string>();
      if (t.size() != 1) throw std::invalid_argument("factor type must be a single letter A-G or T");
      fs.push_back({t[0], f.at("rank").get<int>()});
    }
    return build_product_datum(fs);
  }
  if (j.contains("type")) {
    std::string t = j.at("type").get<std::string>();
    if (t.size() != 1) throw std::invalid_argument("type must be a single letter A-G");
    return build_root_datum(t[0], j.at("rank").get<int>());
  }
  throw std::invalid_argument("root datum config needs one of: type/rank, product, cartan");
}

/// Levi list is 1-based in configs and on the command line, matching the
/// usual numbering of Dynkin diagrams.
inline std::vector<int> levi_from_json(const nlohmann::json& j, const RootDatum& rd) {
  std::vector<int> levi;
  if (j.contains("levi")) {
    for (auto& x : j.at("levi")) {
      int i = x.get<int>();
      if (i < 1 || i > rd.rank) throw std::invalid_argument("levi index out of range (1-based)");
      levi.push_back(i - 1);
    }
  }
  return levi;
}

inline nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace zastava
