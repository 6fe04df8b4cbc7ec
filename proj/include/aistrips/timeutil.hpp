#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ais {

// Civil UTC <-> unix seconds without locale or timezone machinery.
// Days algorithm after Howard Hinnant's public-domain chrono notes.

std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d);
void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d);

// Accepts the two formats seen in the wild:
//   "31/12/2021 23:59:58"   (DMA dumps, day first)
//   "2021-12-31 23:59:58"   (our stage files)
// Returns unix seconds, or nullopt on malformed input.
std::optional<std::int64_t> parse_timestamp(std::string_view s);

// "YYYY-MM-DD HH:MM:SS" UTC.
std::string format_timestamp(std::int64_t unix_seconds);

}  // namespace ais
