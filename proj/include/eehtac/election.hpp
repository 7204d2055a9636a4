#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "eehtac/snapshot.hpp"

namespace eehtac {

struct TopologyCorrupt : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The eleven Boolean predicates of the CH election automaton.
// q[0] is unused so that q[i] matches Q_i.
struct QVector {
    std::array<int, 12> q{};

    int operator[](int i) const { return q[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return q[static_cast<std::size_t>(i)]; }
};

enum class Scenario : std::uint8_t {
    S1,  // fresh election: uncovered local optimum with no linked CH
    S2,  // incumbent keeps the role
    S3,  // replaces a neighboring CH by an AVB_SET margin
    S4,  // none fired: cluster-member role
};

struct ElectionOutcome {
    bool becomes_ch = false;
    Scenario fired = Scenario::S4;
};

// Evaluates Q1..Q11 on the frozen snapshot. Products over empty index
// ranges are 1, sums over empty ranges are 0. Throws TopologyCorrupt on
// duplicate tags.
QVector q_vector(const NodeState& node, const NeighborhoodSnapshot& snapshot,
                 double avb_focal, double avb_set);

// Boolean composition Q1Q2Q3Q4 + Q5Q6Q7 + Q8Q9Q10Q11; the three terms
// are mutually exclusive, so the sum is always 0 or 1.
ElectionOutcome elect(const NodeState& node,
                      const NeighborhoodSnapshot& snapshot, double avb_focal,
                      double avb_set);

ElectionOutcome elect(const QVector& q);

}  // namespace eehtac
