#pragma once

// Wire formats for families:
//   JSON   {"n": int, "sets": [[int,...],...]} with each set sorted ascending
//          and the set list sorted lexicographically
//   hex    lowercase hex string of the 2^n-bit characteristic bitset,
//          little-endian by 4-bit nibble (bit j = membership of mask j)

#include <string>

#include <json.hpp>

#include "xsperner/family.hpp"

namespace xsperner {

nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

std::string family_to_hex(const Family& f);
Family family_from_hex(int n, const std::string& hex);

}  // namespace xsperner
