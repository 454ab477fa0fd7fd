#pragma once

#include <stdexcept>

namespace tdwell {

namespace constants {
inline constexpr double kBoltzmann = 1.380649e-23;           // J/K (exact)
inline constexpr double kAtomicMassUnit = 1.66053906660e-27;  // kg
inline constexpr double kHbarSi = 1.054571817e-34;            // J s
inline constexpr double kGravity = 9.81;                      // m/s^2
inline constexpr double kSpeedOfLight = 2.99792458e8;         // m/s
inline constexpr double kEpsilon0 = 8.8541878128e-12;         // F/m
}  // namespace constants

enum class UnitMode {
    Atomic,               // m = hbar = 1, dimensionless pass-through
    LabNanoKelvinMicron,  // energy nK*k_B, length um, time ms, mass u
};

enum class Dimension { Energy, Length, Time, Mass, Frequency, Force };

enum class ConvertDirection { ToSi, FromSi };

struct UnitSystem {
    UnitMode mode = UnitMode::Atomic;

    /// SI value of one unit of the given dimension in this system.
    double scale_to_si(Dimension d) const;
};

/// Exact conversion through SI anchors (k_B for nK <-> J, the atomic mass
/// unit for masses). Atomic mode is the identity. Throws std::invalid_argument
/// for an unsupported dimension tag.
double convert_units(const UnitSystem& us, double value, Dimension d,
                     ConvertDirection dir);

}  // namespace tdwell
