#pragma once

namespace dgcap {

// Vacuum permittivity [F/m]. Pinned to the 4-digit engineering value (not the
// full CODATA figure) so that capacitance arithmetic reproduces the customary
// hand calculations; every operation that needs a permittivity accepts it as a
// parameter, so callers may override.
inline constexpr double kVacuumPermittivity = 8.854e-12;

// Ambient reference temperature for thermal cycles [degC].
inline constexpr double kAmbientTemperatureC = 20.0;

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace dgcap
