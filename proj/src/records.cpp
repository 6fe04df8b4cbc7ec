#include "aistrips/records.hpp"

#include <algorithm>
#include <cctype>

namespace ais {

namespace {
std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}
}  // namespace

NavStatus nav_status_from_string(std::string_view s) {
  if (s.empty()) return NavStatus::Unknown;
  const std::string v = lower(s);
  if (v == "under way using engine") return NavStatus::UnderWayUsingEngine;
  if (v == "under way sailing") return NavStatus::UnderWaySailing;
  if (v == "moored") return NavStatus::Moored;
  if (v == "at anchor") return NavStatus::AtAnchor;
  if (v == "constrained by her draught") return NavStatus::ConstrainedByDraught;
  if (v == "engaged in fishing") return NavStatus::EngagedInFishing;
  if (v == "unknown value" || v == "unknown") return NavStatus::Unknown;
  return NavStatus::Other;
}

std::string_view to_string(NavStatus s) {
  switch (s) {
    case NavStatus::UnderWayUsingEngine: return "Under way using engine";
    case NavStatus::UnderWaySailing: return "Under way sailing";
    case NavStatus::Moored: return "Moored";
    case NavStatus::AtAnchor: return "At anchor";
    case NavStatus::ConstrainedByDraught: return "Constrained by her draught";
    case NavStatus::EngagedInFishing: return "Engaged in fishing";
    case NavStatus::Other: return "Other";
    case NavStatus::Unknown: break;
  }
  return "Unknown";
}

MobileType mobile_type_from_string(std::string_view s) {
  if (s.empty()) return MobileType::Unknown;
  const std::string v = lower(s);
  if (v == "class a") return MobileType::ClassA;
  if (v == "class b") return MobileType::ClassB;
  if (v == "base station") return MobileType::BaseStation;
  if (v == "sar airborne" || v == "sar") return MobileType::SarAirborne;
  if (v == "aton") return MobileType::AtoN;
  if (v == "unknown") return MobileType::Unknown;
  return MobileType::Other;
}

std::string_view to_string(MobileType t) {
  switch (t) {
    case MobileType::ClassA: return "Class A";
    case MobileType::ClassB: return "Class B";
    case MobileType::BaseStation: return "Base Station";
    case MobileType::SarAirborne: return "SAR Airborne";
    case MobileType::AtoN: return "AtoN";
    case MobileType::Other: return "Other";
    case MobileType::Unknown: break;
  }
  return "Unknown";
}

}  // namespace ais
