#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "nclp/error.hpp"
#include "nclp/freeness.hpp"
#include "nclp/partition.hpp"
#include "nclp/rational.hpp"
#include "nclp/series.hpp"
#include "nclp/transforms.hpp"
#include "nclp/tree.hpp"

namespace nclp::io {

using json = nlohmann::json;

// Partitions: {"n": 3, "blocks": [[1,2],[3]]}

template <class Kind>
json to_json(const Partition<Kind>& p) {
  return json{{"n", p.size()}, {"blocks", p.blocks()}};
}

struct RawPartition {
  int n = 0;
  std::vector<Block> blocks;
};

inline RawPartition raw_partition_from_json(const json& j) {
  try {
    RawPartition raw;
    raw.n = j.at("n").get<int>();
    raw.blocks = j.at("blocks").get<std::vector<Block>>();
    return raw;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("partition JSON: ") + e.what());
  }
}

inline NCLPartition linked_partition_from_json(const json& j) {
  auto raw = raw_partition_from_json(j);
  return validate_ncl(raw.n, std::move(raw.blocks));
}

inline NCPartition partition_from_json(const json& j) {
  auto raw = raw_partition_from_json(j);
  return validate_nc(raw.n, std::move(raw.blocks));
}

// Trees: {"children": [{"color": 1, "tree": {...}}, ...]}, color omitted for
// monochrome trees.

inline json to_json(const PlanarTree& tree) {
  json children = json::array();
  for (const auto& child : tree.children) children.push_back(json{{"tree", to_json(child)}});
  return json{{"children", std::move(children)}};
}

inline json to_json(const BicolorPlanarTree& tree) {
  json children = json::array();
  for (const auto& branch : tree.branches) {
    children.push_back(json{{"color", branch.color}, {"tree", to_json(branch.subtree)}});
  }
  return json{{"children", std::move(children)}};
}

inline const json& tree_children(const json& j) {
  if (!j.is_object() || !j.contains("children") || !j.at("children").is_array()) {
    throw Error(ErrorKind::ParseError, "tree JSON needs a \"children\" array");
  }
  return j.at("children");
}

inline PlanarTree planar_tree_from_json(const json& j) {
  PlanarTree tree;
  for (const auto& child : tree_children(j)) {
    if (!child.contains("tree")) throw Error(ErrorKind::ParseError, "tree child without \"tree\"");
    tree.children.push_back(planar_tree_from_json(child.at("tree")));
  }
  return tree;
}

inline BicolorPlanarTree bicolor_tree_from_json(const json& j) {
  BicolorPlanarTree tree;
  for (const auto& child : tree_children(j)) {
    if (!child.contains("tree") || !child.contains("color") || !child.at("color").is_number_integer()) {
      throw Error(ErrorKind::ParseError, "bicolor child needs integer \"color\" and \"tree\"");
    }
    tree.branches.push_back({child.at("color").get<int>(), bicolor_tree_from_json(child.at("tree"))});
  }
  if (!is_valid(tree)) throw Error(ErrorKind::ParseError, "colors must be 0/1 with solid branches first");
  return tree;
}

// A tree is bicolor when any branch anywhere carries a color.
inline bool has_colors(const json& j) {
  for (const auto& child : tree_children(j)) {
    if (child.contains("color")) return true;
    if (child.contains("tree") && has_colors(child.at("tree"))) return true;
  }
  return false;
}

// Series: {"order": 3, "coeffs": ["1", "1/2", "-3"]}. A bare array of
// coefficients is accepted on input.

inline json rationals_to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

inline std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& item : j) {
    if (item.is_string()) out.push_back(parse_rational(item.get<std::string>()));
    else if (item.is_number_integer()) out.push_back(Rational(item.get<long long>()));
    else throw Error(ErrorKind::ParseError, "rationals are strings \"p/q\" or integers");
  }
  return out;
}

template <class Tag>
json to_json(const Sequence<Tag>& seq) {
  return json{{"order", seq.order()}, {"coeffs", rationals_to_json(seq.values())}};
}

inline std::vector<Rational> series_from_json(const json& j) {
  if (j.is_array()) return rationals_from_json(j);
  if (!j.is_object() || !j.contains("coeffs")) throw Error(ErrorKind::ParseError, "series JSON needs \"coeffs\"");
  auto coeffs = rationals_from_json(j.at("coeffs"));
  if (j.contains("order") && j.at("order") != static_cast<int>(coeffs.size())) {
    throw Error(ErrorKind::ParseError, "\"order\" disagrees with the number of coefficients");
  }
  if (coeffs.empty()) throw Error(ErrorKind::ParseError, "series needs at least one coefficient");
  return coeffs;
}

// Scenario: {"algebras": {"X": {"cumulants": ["1","1"]}, ...}}

inline Scenario scenario_from_json(const json& j, const Limits& limits = Limits::defaults()) {
  if (!j.is_object() || !j.contains("algebras") || !j.at("algebras").is_object()) {
    throw Error(ErrorKind::ParseError, "scenario JSON needs an \"algebras\" object");
  }
  std::map<std::string, CumulantSequence> algebras;
  for (const auto& [id, entry] : j.at("algebras").items()) {
    if (!entry.contains("cumulants")) throw Error(ErrorKind::ParseError, "algebra '" + id + "' lacks \"cumulants\"");
    algebras.emplace(id, CumulantSequence(rationals_from_json(entry.at("cumulants"))));
  }
  return Scenario(std::move(algebras), limits);
}

inline json to_json(const Scenario& scenario) {
  json algebras = json::object();
  for (const auto& [id, kappa] : scenario.algebras()) {
    algebras[id] = json{{"cumulants", rationals_to_json(kappa.values())}};
  }
  return json{{"algebras", std::move(algebras)}};
}

inline json to_json(const TMultiplicativityReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry{{"identity", c.name}, {"order", c.order}, {"pass", c.pass()}};
    if (!c.pass()) entry["witness"] = json{{"lhs", to_string(c.lhs)}, {"rhs", to_string(c.rhs)}};
    checks.push_back(std::move(entry));
  }
  return json{{"order", report.order},
              {"pass", report.passed()},
              {"t_via_cumulants", rationals_to_json(report.via_cumulants.values())},
              {"t_via_convolution", rationals_to_json(report.via_convolution.values())},
              {"checks", std::move(checks)}};
}

inline json to_json(const FreenessReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"word", format_word(f.word)}, {"quantity", f.quantity}, {"value", to_string(f.value)}});
  }
  return json{{"words_checked", report.words_checked}, {"pass", report.passed()}, {"failures", std::move(failures)}};
}

}  // namespace nclp::io
