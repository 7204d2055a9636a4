#pragma once

#include <stdexcept>

namespace eehtac {

// Aquatic property (AQP) reading sensed by a node each round.
struct AqpReading {
    double turbidity = 0.0;  // NTU, sensor range [0, 2000]
    double ph = 7.0;         // unitless, [0, 14]

    static constexpr double kTurbidityMax = 2000.0;
    static constexpr double kPhMax = 14.0;

    // Admissible water-quality window (freshwater monitoring thresholds).
    static constexpr double kTurbidityAdmissibleMax = 5.0;  // NTU
    static constexpr double kPhAdmissibleMin = 6.5;
    static constexpr double kPhAdmissibleMax = 9.5;

    static AqpReading checked(double turbidity, double ph) {
        if (turbidity < 0.0 || turbidity > kTurbidityMax)
            throw std::out_of_range("turbidity outside [0, 2000] NTU");
        if (ph < 0.0 || ph > kPhMax)
            throw std::out_of_range("pH outside [0, 14]");
        return AqpReading{turbidity, ph};
    }

    bool admissible() const {
        return turbidity <= kTurbidityAdmissibleMax &&
               ph >= kPhAdmissibleMin && ph <= kPhAdmissibleMax;
    }
};

}  // namespace eehtac
