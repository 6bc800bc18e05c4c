#pragma once

#include <json.hpp>
#include <string>

#include "betacert/certificate.hpp"
#include "betacert/certify.hpp"
#include "betacert/expansions.hpp"
#include "betacert/gapset.hpp"
#include "betacert/thickness.hpp"

namespace betacert {

using Json = nlohmann::ordered_json;

// [lo, hi] as directed 20-digit decimal strings.
Json bounds_json(const Enclosure& e);
Json to_json(const Check& c);
Json to_json(const Certificate& c);
Json to_json(const TablesReport& r);
Json to_json(const CountReport& r);
Json to_json(const ThicknessValue& t);

std::string certificate_text(const Certificate& c);
std::string tables_text(const TablesReport& r);
std::string table1_csv(const TablesReport& r);
std::string table2_csv(const TablesReport& r);
// One row per gap: index, delta length, left, right, diameter.
std::string gaps_csv(const GapSet& set, const std::vector<int>& delta_lengths);
std::string count_csv(const CountReport& r);

}  // namespace betacert
