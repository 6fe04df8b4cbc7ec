#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ais {

// Minimal CSV splitting/escaping. Handles RFC-4180 quoting ("" escapes) and
// strips a trailing \r so both \n and \r\n files parse. DMA dumps never quote,
// but our own stage files quote free-text fields (names, destinations).
void split_csv_line(std::string_view line, std::vector<std::string>& out);

// Quote iff the field contains a comma, quote, or newline.
std::string csv_escape(std::string_view field);

// Shortest round-trip decimal text for a double ("" for NaN — our CSV
// convention for a missing value).
std::string format_double(double v);

}  // namespace ais
