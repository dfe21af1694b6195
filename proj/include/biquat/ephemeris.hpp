#pragma once

namespace biquat::ephemeris {

// Orbital constants used by the satellite-deviation scenarios.
// Sources: NASA planetary fact sheets (nssdc.gsfc.nasa.gov, 2024 edition)
// for mean orbital velocities, and the JPL satellite ephemerides for the
// sidereal periods of Phobos and Metis.  Velocities are means over an
// orbit; the deviation estimates inherit a few-percent spread from that.
inline constexpr int version = 1;

inline constexpr double speed_of_light = 299792458.0;  // m/s, exact

inline constexpr double julian_year_s = 365.25 * 86400.0;
inline constexpr double century_s = 100.0 * julian_year_s;

// Earth
inline constexpr double earth_orbital_speed = 29784.8;  // m/s, mean

// Mars / Phobos
inline constexpr double mars_orbital_speed = 24077.0;   // m/s, mean
inline constexpr double phobos_period_s = 27553.8;      // 7h 39.2m sidereal

// Jupiter / Metis (innermost, fastest satellite)
inline constexpr double jupiter_orbital_speed = 13058.0;  // m/s, mean
inline constexpr double metis_period_s = 25453.0;         // 0.2948 d sidereal

// Mercury
inline constexpr double mercury_orbital_speed = 47360.0;  // m/s, mean
inline constexpr double mercury_period_s = 87.969 * 86400.0;

}  // namespace biquat::ephemeris
