#include "aistrips/timeutil.hpp"

#include <charconv>
#include <cstdio>

namespace ais {

std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;   // [0, 365]
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);           // [0, 146096]
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);           // [0, 365]
  const unsigned mp = (5 * doy + 2) / 153;                                // [0, 11]
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

namespace {

bool parse_uint(std::string_view s, std::size_t pos, std::size_t len, unsigned& out) {
  if (pos + len > s.size()) return false;
  unsigned v = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    char c = s[i];
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  out = v;
  return true;
}

std::optional<std::int64_t> make_time(unsigned yr, unsigned mo, unsigned dy,
                                      unsigned hh, unsigned mm, unsigned ss) {
  if (mo < 1 || mo > 12 || dy < 1 || dy > 31) return std::nullopt;
  if (hh > 23 || mm > 59 || ss > 60) return std::nullopt;
  std::int64_t days = days_from_civil(static_cast<std::int64_t>(yr), mo, dy);
  return days * 86400 + hh * 3600 + mm * 60 + ss;
}

}  // namespace

std::optional<std::int64_t> parse_timestamp(std::string_view s) {
  // Trim surrounding spaces.
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  if (s.size() != 19) return std::nullopt;

  unsigned a, b, c, hh, mm, ss;
  if (s[4] == '-' && s[7] == '-' && s[10] == ' ' && s[13] == ':' && s[16] == ':') {
    // YYYY-MM-DD HH:MM:SS
    if (!parse_uint(s, 0, 4, a) || !parse_uint(s, 5, 2, b) || !parse_uint(s, 8, 2, c) ||
        !parse_uint(s, 11, 2, hh) || !parse_uint(s, 14, 2, mm) || !parse_uint(s, 17, 2, ss))
      return std::nullopt;
    return make_time(a, b, c, hh, mm, ss);
  }
  if (s[2] == '/' && s[5] == '/' && s[10] == ' ' && s[13] == ':' && s[16] == ':') {
    // DD/MM/YYYY HH:MM:SS
    if (!parse_uint(s, 0, 2, a) || !parse_uint(s, 3, 2, b) || !parse_uint(s, 6, 4, c) ||
        !parse_uint(s, 11, 2, hh) || !parse_uint(s, 14, 2, mm) || !parse_uint(s, 17, 2, ss))
      return std::nullopt;
    return make_time(c, b, a, hh, mm, ss);
  }
  return std::nullopt;
}

std::string format_timestamp(std::int64_t unix_seconds) {
  std::int64_t days = unix_seconds / 86400;
  std::int64_t rem = unix_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02u %02lld:%02lld:%02lld",
                static_cast<long long>(y), m, d,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem / 60) % 60),
                static_cast<long long>(rem % 60));
  return buf;
}

}  // namespace ais
