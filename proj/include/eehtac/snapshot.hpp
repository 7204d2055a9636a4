#pragma once

#include <cstdint>
#include <vector>

#include "eehtac/node.hpp"

namespace eehtac {

// What the focal node knows about one other node at round start.
// Non-neighbors carry adjacent = false.
struct NeighborRecord {
    Tag tag = 0;
    bool adjacent = false;  // ADJ: within CTR on the same layer
    bool is_ch = false;     // CH indicator frozen at round start
    bool covered = false;   // COV: registered CM of >= 1 CH at round start
    double avb = 0.0;       // advertised electability factor
};

// Frozen per-round view used by the election predicates. Records exist
// for every other node in the network, ordered by tag.
struct NeighborhoodSnapshot {
    Tag focal_tag = 0;
    std::vector<NeighborRecord> others;

    int neighbor_count() const {
        int n = 0;
        for (const auto& r : others) n += r.adjacent ? 1 : 0;
        return n;
    }
};

}  // namespace eehtac
