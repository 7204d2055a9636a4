#pragma once

#include <optional>

#include "eehtac/aqp.hpp"

namespace eehtac {

// Normalized relative weights of turbidity, pH, residual energy and depth.
// Sum to 1 for every non-degenerate input.
struct WeightVector {
    double a = 0.25;  // turbidity weight
    double b = 0.25;  // pH weight
    double c = 0.25;  // residual-energy weight
    double d = 0.25;  // depth weight

    double sum() const { return a + b + c + d; }
    static WeightVector uniform() { return {0.25, 0.25, 0.25, 0.25}; }
};

// Each raw quantity is normalized by its physical maximum (2000 NTU,
// 14 pH, E_init, region depth), then divided by the sum of the four
// normalized magnitudes. Returns nullopt when all four norms are zero;
// callers fall back to uniform weights in that case.
std::optional<WeightVector> normalized_weights(const AqpReading& aqp,
                                               double energy_rsd,
                                               double energy_init,
                                               double depth,
                                               double region_depth);

inline WeightVector weights_or_uniform(const AqpReading& aqp, double energy_rsd,
                                       double energy_init, double depth,
                                       double region_depth) {
    const auto w = normalized_weights(aqp, energy_rsd, energy_init, depth, region_depth);
    return w ? *w : WeightVector::uniform();
}

}  // namespace eehtac
