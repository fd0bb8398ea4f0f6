#include "stackgame/instance_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>

namespace stackgame {

namespace {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_number_float()) {
    throw ParseError(where + ": floating-point JSON numbers are inexact; "
                             "write the value as a string such as \"1/2\" or \"0.5\"");
  }
  throw ParseError(where + ": expected a rational string or integer");
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

InstanceDocument parse_instance_document(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("assets")) {
    throw ParseError("instance document must be an object with an \"assets\" array");
  }
  const json& assets_json = doc["assets"];
  if (!assets_json.is_array() || assets_json.size() < 2) {
    throw ParseError("\"assets\" must be an array of at least two assets");
  }

  static const char* kValueKeys[] = {"reward_defender", "cost_defender", "reward_attacker",
                                     "cost_attacker"};
  std::vector<AssetParams> assets;
  assets.reserve(assets_json.size());
  for (std::size_t i = 0; i < assets_json.size(); ++i) {
    const json& a = assets_json[i];
    const std::string where = "assets[" + std::to_string(i) + "]";
    if (!a.is_object()) {
      throw ParseError(where + ": expected an object");
    }
    if (!a.contains("name") || !a["name"].is_string()) {
      throw ParseError(where + ": missing string field \"name\"");
    }
    for (const auto& [key, unused] : a.items()) {
      if (key != "name" && std::find_if(std::begin(kValueKeys), std::end(kValueKeys),
                                        [&](const char* k) { return key == k; }) ==
                               std::end(kValueKeys)) {
        throw ParseError(where + ": unknown field \"" + key + "\"");
      }
    }
    AssetParams asset;
    asset.name = a["name"].get<std::string>();
    for (const char* key : kValueKeys) {
      if (!a.contains(key)) {
        throw ParseError(where + ": missing field \"" + std::string(key) + "\"");
      }
    }
    asset.reward_defender = rational_from_json(a["reward_defender"], where + ".reward_defender");
    asset.cost_defender = rational_from_json(a["cost_defender"], where + ".cost_defender");
    asset.reward_attacker = rational_from_json(a["reward_attacker"], where + ".reward_attacker");
    asset.cost_attacker = rational_from_json(a["cost_attacker"], where + ".cost_attacker");
    assets.push_back(std::move(asset));
  }

  for (const auto& [key, unused] : doc.items()) {
    if (key != "assets" && key != "attack") {
      throw ParseError("unknown top-level field \"" + key + "\"");
    }
  }

  InstanceDocument result{GameInstance(std::move(assets)), std::nullopt};

  if (doc.contains("attack")) {
    const json& attack_json = doc["attack"];
    if (!attack_json.is_array()) {
      throw ParseError("\"attack\" must be an array of rationals");
    }
    std::vector<Rational> entries;
    entries.reserve(attack_json.size());
    for (std::size_t i = 0; i < attack_json.size(); ++i) {
      entries.push_back(rational_from_json(attack_json[i], "attack[" + std::to_string(i) + "]"));
    }
    if (entries.size() != result.instance.size()) {
      throw ParseError("\"attack\" has " + std::to_string(entries.size()) + " entries but " +
                       std::to_string(result.instance.size()) + " assets are defined");
    }
    result.attack = AttackVector(std::move(entries));
  }
  return result;
}

GameInstance parse_instance(const std::string& text) {
  return parse_instance_document(text).instance;
}

std::string instance_to_json(const GameInstance& instance,
                             const std::optional<AttackVector>& attack) {
  json doc;
  doc["assets"] = json::array();
  for (const AssetParams& a : instance.assets()) {
    json asset;
    asset["name"] = a.name;
    asset["reward_defender"] = a.reward_defender.str();
    asset["cost_defender"] = a.cost_defender.str();
    asset["reward_attacker"] = a.reward_attacker.str();
    asset["cost_attacker"] = a.cost_attacker.str();
    doc["assets"].push_back(std::move(asset));
  }
  if (attack) {
    json entries = json::array();
    for (const Rational& e : attack->entries()) {
      entries.push_back(e.str());
    }
    doc["attack"] = std::move(entries);
  }
  return doc.dump(2);
}

namespace {

std::size_t resolve_asset_selector(const GameInstance& instance, std::string_view selector) {
  for (std::size_t n = 0; n < instance.size(); ++n) {
    if (instance.asset(n).name == selector) return n;
  }
  std::size_t parsed = 0;
  auto [ptr, ec] = std::from_chars(selector.data(), selector.data() + selector.size(), parsed);
  if (ec == std::errc() && ptr == selector.data() + selector.size() && parsed >= 1 &&
      parsed <= instance.size()) {
    return parsed - 1;
  }
  throw ValidationError("no asset named '" + std::string(selector) +
                        "' (and it is not a valid 1-based index)");
}

template <class T>
std::vector<T> move_to_back(std::vector<T> values, std::size_t index) {
  T chosen = std::move(values[index]);
  values.erase(values.begin() + static_cast<std::ptrdiff_t>(index));
  values.push_back(std::move(chosen));
  return values;
}

}  // namespace

GameInstance rotate_anchor(const GameInstance& instance, std::string_view selector) {
  std::size_t index = resolve_asset_selector(instance, selector);
  return GameInstance(move_to_back(instance.assets(), index));
}

InstanceDocument rotate_anchor(InstanceDocument document, std::string_view selector) {
  std::size_t index = resolve_asset_selector(document.instance, selector);
  GameInstance rotated(move_to_back(document.instance.assets(), index));
  std::optional<AttackVector> attack;
  if (document.attack) {
    attack = AttackVector(move_to_back(document.attack->entries(), index));
  }
  return InstanceDocument{std::move(rotated), std::move(attack)};
}

AttackVector parse_attack_spec(std::string_view spec, std::size_t asset_count) {
  if (spec.empty()) {
    throw ParseError("empty attack specification");
  }
  if (spec == "uniform") {
    return AttackVector::uniform(asset_count);
  }
  if (spec.size() >= 2 && spec.front() == 'e' && spec.find(',') == std::string_view::npos) {
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), index);
    if (ec != std::errc() || ptr != spec.data() + spec.size() || index < 1) {
      throw ParseError("malformed pure-attack spec '" + std::string(spec) + "'");
    }
    if (index > asset_count) {
      throw ParseError("attack index " + std::to_string(index) + " exceeds the asset count " +
                       std::to_string(asset_count));
    }
    return AttackVector::unit(index - 1, asset_count);
  }

  std::vector<Rational> entries;
  std::string_view rest = spec;
  while (true) {
    auto comma = rest.find(',');
    entries.push_back(Rational::parse(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (entries.size() != asset_count) {
    throw ParseError("attack vector has " + std::to_string(entries.size()) + " entries but " +
                     std::to_string(asset_count) + " assets are defined");
  }
  return AttackVector(std::move(entries));
}

const char* paper_example_json() {
  return R"({
  "assets": [
    {"name": "T1", "reward_defender": "8", "cost_defender": "2", "reward_attacker": "5", "cost_attacker": "-2"},
    {"name": "T2", "reward_defender": "6", "cost_defender": "-1", "reward_attacker": "5", "cost_attacker": "0"},
    {"name": "T3", "reward_defender": "9", "cost_defender": "4", "reward_attacker": "5", "cost_attacker": "1"},
    {"name": "T4", "reward_defender": "5", "cost_defender": "2", "reward_attacker": "5", "cost_attacker": "2"},
    {"name": "T5", "reward_defender": "7", "cost_defender": "-3", "reward_attacker": "5", "cost_attacker": "7"},
    {"name": "T6", "reward_defender": "4", "cost_defender": "1", "reward_attacker": "5", "cost_attacker": "15"},
    {"name": "T7", "reward_defender": "6", "cost_defender": "3", "reward_attacker": "5", "cost_attacker": "37"},
    {"name": "T8", "reward_defender": "3", "cost_defender": "0", "reward_attacker": "4", "cost_attacker": "-5"}
  ]
}
)";
}

GameInstance paper_example_instance() {
  return parse_instance(paper_example_json());
}

}  // namespace stackgame
