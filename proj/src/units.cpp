#include "tdwell/units.hpp"

namespace tdwell {

double UnitSystem::scale_to_si(Dimension d) const {
    if (mode == UnitMode::Atomic) return 1.0;
    switch (d) {
        case Dimension::Energy: return constants::kBoltzmann*1e-9;  // nK -> J
        case Dimension::Length: return 1e-6;                        // um -> m
        case Dimension::Time: return 1e-3;                          // ms -> s
        case Dimension::Mass: return constants::kAtomicMassUnit;    // u -> kg
        case Dimension::Frequency: return 1e3;                      // 1/ms -> Hz
        case Dimension::Force: return constants::kBoltzmann*1e-3;   // nK/um -> N
    }
    throw std::invalid_argument("convert_units: unsupported dimension");
}

double convert_units(const UnitSystem& us, double value, Dimension d,
                     ConvertDirection dir) {
    const double s = us.scale_to_si(d);
    return dir == ConvertDirection::ToSi ? value*s : value/s;
}

}  // namespace tdwell
