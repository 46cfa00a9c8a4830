#pragma once

namespace dgcap::units {

// All library quantities are SI base units. Micrometres, picofarads, GPa/MPa
// and friends appear only at file and CLI boundaries; each value is converted
// exactly once, through these helpers.

constexpr double from_um(double um) { return um * 1e-6; }
constexpr double to_um(double m) { return m * 1e6; }

constexpr double from_pF(double pf) { return pf * 1e-12; }
constexpr double to_pF(double f) { return f * 1e12; }

constexpr double from_GPa(double gpa) { return gpa * 1e9; }
constexpr double to_GPa(double pa) { return pa * 1e-9; }

constexpr double from_MPa(double mpa) { return mpa * 1e6; }
constexpr double to_MPa(double pa) { return pa * 1e-6; }

// Through-thickness stress gradient: MPa/um <-> Pa/m.
constexpr double from_MPa_per_um(double v) { return v * 1e12; }
constexpr double to_MPa_per_um(double v) { return v * 1e-12; }

}  // namespace dgcap::units
