#include "cqed/modes.hpp"

#include <cmath>
#include <string>

namespace cqed {

double ModeSet::mode_amplitude(const PhysicalConstants& pc) const {
    if (!quantization_volume)
        throw config_error("ModeSet: quantization volume required to derive the mode amplitude");
    if (*quantization_volume <= 0) throw config_error("ModeSet: quantization volume must be > 0");
    return std::sqrt(pc.hbar * pc.c * pc.c / (pc.eps0 * *quantization_volume));
}

double ModeSet::lambda_from_volume(double omega, double volume, const PhysicalConstants& pc) {
    const double C = std::sqrt(pc.hbar * pc.c * pc.c / (pc.eps0 * volume));
    return std::sqrt(omega) * pc.e * C / pc.c;
}

ModeSet ModeSet::from_volume(const std::vector<double>& omegas, double volume,
                             const PhysicalConstants& pc) {
    if (volume <= 0) throw config_error("ModeSet: quantization volume must be > 0");
    ModeSet set;
    set.quantization_volume = volume;
    for (double w : omegas)
        set.modes.push_back({w, lambda_from_volume(w, volume, pc), 1});
    set.validate(pc);
    return set;
}

void ModeSet::validate(const PhysicalConstants& pc) const {
    if (modes.empty()) throw config_error("ModeSet: at least one mode required");
    for (const auto& m : modes) m.validate();
    if (quantization_volume) {
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const double expected = lambda_from_volume(modes[i].omega, *quantization_volume, pc);
            const double scale = std::max(std::abs(expected), 1e-300);
            if (std::abs(modes[i].lambda - expected) > 1e-12 * scale)
                throw config_error("ModeSet: mode " + std::to_string(i) +
                                   " has lambda inconsistent with the quantization volume");
        }
    }
}

}  // namespace cqed
