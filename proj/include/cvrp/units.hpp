#pragma once

#include <cmath>
#include <numbers>
#include <string>

namespace cvrp {

inline constexpr const char* kVersion = "cvrpkit 1.0.0";

inline constexpr double kPi = std::numbers::pi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

// dB conversion with a reporting floor for non-positive (or tiny) powers.
// Values at or below the floor are reported as the floor itself; the
// linear-domain quantity stays authoritative for any decision making.
inline double mw_to_dbm_floored(double mw, double floor_dbm = -100.0) {
  const double floor_mw = dbm_to_mw(floor_dbm);
  if (!(mw > floor_mw)) return floor_dbm;
  return mw_to_dbm(mw);
}

// Fixed-precision decimal with the given number of significant digits,
// locale-independent. Used for all console and CSV number formatting.
std::string format_sig(double value, int digits = 6);

// Full round-trip precision (17 significant digits) for pattern files.
std::string format_exact(double value);

}  // namespace cvrp
