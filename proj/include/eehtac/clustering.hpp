#pragma once

#include "eehtac/node.hpp"
#include "eehtac/snapshot.hpp"
#include "eehtac/weights.hpp"

namespace eehtac {

// Unit step: 1 for x > 0, 0 otherwise (including x = 0).
inline int unit_step(double x) { return x > 0.0 ? 1 : 0; }

// Electability factor AVB of the focal node: a weighted mix of mobility
// decay, mean adjacency over the other N-1 nodes, tenure freshness and
// the priority-tag term.
//   P1 = e^(-MS), P2 = (1/(N-1)) * sum ADJ, P3 = 1 - TCL,
//   P4 = (1-TAG)/N or TAG/N depending on priority mode.
// The complementary variant substitutes (N-TAG)/N for the low-tag branch.
double electability_factor(const NodeState& node,
                           const NeighborhoodSnapshot& snapshot,
                           const WeightVector& weights, double tcl,
                           const NetworkParams& params);

// CH retention period: t_cmp * (E_rsd/E_init - 1) + rnd * t_cmp with
// rnd in [0.5, 1], clamped at zero from below (a negative wait means
// immediate contention).
double retention_period(double energy_rsd, double energy_init, double t_cmp,
                        double rnd);

// Depth-based layer number: ceil(depth / ctr) + k_layer.
int layer_number(double depth, double ctr, int k_layer);

// Competition cluster radius [C * E_rsd/E_init] * [CTR * D * L/L_tot].
// Clamped mode additionally bounds the result to [0.1*CTR, CTR] so that
// sub-meter literal radii cannot suppress cluster formation.
double competition_radius(double energy_rsd, double energy_init,
                          const WeightVector& weights, double ctr, int layer,
                          int total_layers, RadiusMode mode);

}  // namespace eehtac
