#include "shiftcharge/charge_json.hpp"

#include <stdexcept>

namespace shiftcharge {

nlohmann::ordered_json charge_to_json(const Charge& c) {
  nlohmann::ordered_json j;
  j["atoms"] = nlohmann::ordered_json::array();
  for (const Atom& a : c.atoms()) {
    nlohmann::ordered_json atom;
    atom["pos"] = rat_to_string(a.position);
    atom["den"] = rat_to_string(a.density);
    j["atoms"].push_back(atom);
  }
  j["normalized"] = c.normalized();
  if (c.tail()) {
    nlohmann::ordered_json tail;
    tail["mass"] = rat_to_string(c.tail()->mass);
    tail["pos"] = rat_to_string(c.tail()->position);
    j["tail"] = tail;
  }
  return j;
}

namespace {

Rat rat_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw std::invalid_argument(std::string("charge JSON: missing string field '") + key + "'");
  }
  return rat_from_string(j[key].get<std::string>());
}

}  // namespace

Charge charge_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw std::invalid_argument("charge JSON: expected object with an 'atoms' array");
  }
  std::vector<Atom> atoms;
  atoms.reserve(j["atoms"].size());
  for (const auto& entry : j["atoms"]) {
    atoms.push_back(Atom{rat_field(entry, "pos"), rat_field(entry, "den")});
  }
  std::optional<TailBound> tail;
  if (j.contains("tail") && !j["tail"].is_null()) {
    tail = TailBound{rat_field(j["tail"], "mass"), rat_field(j["tail"], "pos")};
  }
  return Charge(std::move(atoms), std::move(tail));
}

std::string charge_to_json_string(const Charge& c) { return charge_to_json(c).dump(); }

Charge charge_from_json_string(const std::string& text) {
  return charge_from_json(nlohmann::json::parse(text));
}

}  // namespace shiftcharge
