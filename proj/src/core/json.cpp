// JSON record form of DasDialogue and Scenario for machine exchange.

#include <json.hpp>

#include "das/core.hpp"

namespace das::core {

namespace {

using nlohmann::json;

json param_to_json(const Param& p) {
  json j;
  if (p.key) j["key"] = *p.key;
  j["value"] = p.value;
  return j;
}

Param param_from_json(const json& j) {
  Param p;
  if (j.contains("key") && !j["key"].is_null()) p.key = j["key"].get<std::string>();
  p.value = j.at("value").get<std::string>();
  return p;
}

json scenario_to_json(const Scenario& s) {
  json speakers = json::array();
  for (const SpeakerProfile& p : s.speakers) {
    speakers.push_back({{"name", p.name},
                        {"gender", std::string(1, static_cast<char>(p.gender))},
                        {"age", p.age},
                        {"relationship", p.relationship}});
  }
  return json{{"summary", s.summary}, {"speakers", speakers}};
}

Scenario scenario_from_json_obj(const json& j) {
  Scenario s;
  s.summary = j.at("summary").get<std::string>();
  for (const json& sp : j.at("speakers")) {
    SpeakerProfile p;
    p.name = sp.at("name").get<std::string>();
    std::string g = sp.at("gender").get<std::string>();
    if (g != "M" && g != "F" && g != "X")
      throw std::invalid_argument("gender must be one of M, F, X");
    p.gender = static_cast<Gender>(g[0]);
    p.age = sp.at("age").get<int>();
    p.relationship = sp.value("relationship", "");
    s.speakers.push_back(std::move(p));
  }
  return s;
}

}  // namespace

std::string to_json(const DasDialogue& d) {
  json turns = json::array();
  for (const DasTurn& t : d.turns) {
    json acts = json::array();
    for (const ActInstance& a : t.acts) {
      json params = json::array();
      for (const Param& p : a.params) params.push_back(param_to_json(p));
      acts.push_back({{"label", a.label}, {"params", params}});
    }
    turns.push_back({{"speaker", t.speaker}, {"acts", acts}});
  }
  json j{{"id", d.id},
         {"source_language", d.source_language},
         {"target_language", d.target_language ? json(*d.target_language) : json(nullptr)},
         {"scenario", d.scenario ? scenario_to_json(*d.scenario) : json(nullptr)},
         {"turns", turns}};
  return j.dump(2);
}

DasDialogue dialogue_from_json(const std::string& text) {
  json j = json::parse(text);
  DasDialogue d;
  d.id = j.at("id").get<std::string>();
  d.source_language = j.at("source_language").get<std::string>();
  if (j.contains("target_language") && !j["target_language"].is_null())
    d.target_language = j["target_language"].get<std::string>();
  if (j.contains("scenario") && !j["scenario"].is_null())
    d.scenario = scenario_from_json_obj(j["scenario"]);
  for (const json& jt : j.at("turns")) {
    DasTurn t;
    t.speaker = jt.at("speaker").get<std::string>();
    for (const json& ja : jt.at("acts")) {
      ActInstance a;
      a.label = ja.at("label").get<std::string>();
      for (const json& jp : ja.at("params")) a.params.push_back(param_from_json(jp));
      t.acts.push_back(std::move(a));
    }
    d.turns.push_back(std::move(t));
  }
  return d;
}

std::string to_json(const Scenario& s) { return scenario_to_json(s).dump(2); }

Scenario scenario_from_json(const std::string& text) {
  return scenario_from_json_obj(nlohmann::json::parse(text));
}

}  // namespace das::core
