#pragma once

#include <json.hpp>

#include "shiftcharge/charge.hpp"

namespace shiftcharge {

// Schema:
//   {"atoms":[{"pos":"num/den","den":"num/den"},...],
//    "normalized":bool,
//    "tail":{"mass":"num/den","pos":"num/den"}}   (tail optional)
// Rationals travel as "p/q" strings so values survive round trips exactly;
// key order is fixed so equal charges serialize to identical bytes.
nlohmann::ordered_json charge_to_json(const Charge& c);

// Accepts rationals as "p/q", integer, or exact decimal strings. The
// normalized flag is recomputed from the atoms, not trusted from the input.
// Throws std::invalid_argument on schema violations.
Charge charge_from_json(const nlohmann::json& j);

std::string charge_to_json_string(const Charge& c);
Charge charge_from_json_string(const std::string& text);

}  // namespace shiftcharge
