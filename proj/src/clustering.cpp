#include "eehtac/clustering.hpp"

#include <algorithm>
#include <cmath>

namespace eehtac {

std::optional<WeightVector> normalized_weights(const AqpReading& aqp,
                                               double energy_rsd,
                                               double energy_init,
                                               double depth,
                                               double region_depth) {
    const double n_tbd = aqp.turbidity / AqpReading::kTurbidityMax;
    const double n_ph = aqp.ph / AqpReading::kPhMax;
    const double n_energy = energy_init > 0.0 ? energy_rsd / energy_init : 0.0;
    const double n_depth = depth / region_depth;

    const double sum = n_tbd + n_ph + n_energy + n_depth;
    if (sum <= 0.0) return std::nullopt;
    return WeightVector{n_tbd / sum, n_ph / sum, n_energy / sum, n_depth / sum};
}

double electability_factor(const NodeState& node,
                           const NeighborhoodSnapshot& snapshot,
                           const WeightVector& weights, double tcl,
                           const NetworkParams& params) {
    const double p1 = std::exp(-node.mobility_speed);

    double adj_sum = 0.0;
    for (const auto& rec : snapshot.others) adj_sum += rec.adjacent ? 1.0 : 0.0;
    const double p2 =
        params.node_count > 1 ? adj_sum / (params.node_count - 1) : 0.0;

    const double p3 = 1.0 - tcl;

    const double n = static_cast<double>(params.node_count);
    const double tag = static_cast<double>(node.tag);
    double p4 = 0.0;
    if (params.priority_mode == PriorityMode::HighTag) {
        p4 = tag / n;
    } else if (params.p4_variant == P4Variant::Literal) {
        p4 = (1.0 - tag) / n;
    } else {
        p4 = (n - tag) / n;
    }

    return weights.a * p1 + weights.b * p2 + weights.c * p3 + weights.d * p4;
}

double retention_period(double energy_rsd, double energy_init, double t_cmp,
                        double rnd) {
    const double ratio = energy_init > 0.0 ? energy_rsd / energy_init : 0.0;
    const double dt = t_cmp * (ratio - 1.0) + rnd * t_cmp;
    return std::max(0.0, dt);
}

int layer_number(double depth, double ctr, int k_layer) {
    return static_cast<int>(std::ceil(depth / ctr)) + k_layer;
}

double competition_radius(double energy_rsd, double energy_init,
                          const WeightVector& weights, double ctr, int layer,
                          int total_layers, RadiusMode mode) {
    const double ratio = energy_init > 0.0 ? energy_rsd / energy_init : 0.0;
    const double literal = (weights.c * ratio) *
                           (ctr * weights.d * static_cast<double>(layer) /
                            static_cast<double>(total_layers));
    if (mode == RadiusMode::Literal) return literal;
    return std::clamp(literal, 0.1 * ctr, ctr);
}

}  // namespace eehtac
