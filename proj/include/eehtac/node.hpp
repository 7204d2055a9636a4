#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <vector>

#include "eehtac/aqp.hpp"

namespace eehtac {

using Tag = std::uint32_t;  // priority tag, unique in [1, N]

enum class Role : std::uint8_t {
    Ordinary,
    ClusterMember,
    PrimaryCh,
    SubsidiaryCh,  // pre-designated backup, IDLE until woken
    BondingCh,     // on-demand backup elected by FTBC-2
};

enum class PriorityMode : std::uint8_t { LowTag, HighTag };
enum class P4Variant : std::uint8_t { Literal, Complementary };
enum class RadiusMode : std::uint8_t { Literal, Clamped };

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;  // z is depth, positive downward
};

inline double distance(const Vec3& a, const Vec3& b) {
    const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

// Network-level protocol parameters shared by every node.
struct NetworkParams {
    std::uint32_t node_count = 500;    // N
    Vec3 region{500.0, 500.0, 500.0};  // extent of the SC-UWSN region, m
    double ctr = 60.0;                 // critical transmission range, m
    int k_layer = 1;                   // layering constant, [1, 5]
    int total_layers = 10;             // L_tot
    double t_cmp = 90.0;               // allotted CH tenure period, s
    double t_adv = 2.0;                // advertisement window, s
    double avb_set = 0.02;             // electability threshold AVB_SET
    double e_surv = 0.1;               // survivability threshold, J
    int srl = 3;                       // JOIN retransmission limit
    PriorityMode priority_mode = PriorityMode::HighTag;
    P4Variant p4_variant = P4Variant::Literal;
    RadiusMode radius_mode = RadiusMode::Clamped;
    int ch_window = 8;                 // k of the T = k*dt history window
};

// Ring buffer of the k+1 most recent per-round CH indicator samples.
// Holds one extra sample so that both the tenure fraction (k samples)
// and the stability differences (k diffs) can be read from it.
class ChHistory {
public:
    explicit ChHistory(int k = 8) : capacity_(k + 1) {}

    void push(int indicator) {
        samples_.push_back(indicator);
        if (static_cast<int>(samples_.size()) > capacity_) samples_.pop_front();
    }

    // Most recent `k` samples excluding nothing (whole window as stored).
    std::vector<int> window() const { return {samples_.begin(), samples_.end()}; }

    // The k samples preceding now, i.e. excluding the newest one when the
    // buffer is full; used for the tenure fraction TCL at round start.
    std::vector<int> tenure_window() const {
        if (samples_.empty()) return {};
        auto end = samples_.end();
        if (static_cast<int>(samples_.size()) == capacity_) --end;
        return {samples_.begin(), end};
    }

    std::size_t size() const { return samples_.size(); }

private:
    int capacity_;
    std::deque<int> samples_;
};

// One smart underwater node.
struct NodeState {
    Tag tag = 0;
    Vec3 position{};
    double energy_init = 2.0;   // J
    double energy_rsd = 2.0;    // J
    double mobility_speed = 0;  // MS, m/s, from last round's displacement
    AqpReading aqp{};
    Role role = Role::Ordinary;
    int layer = 1;
    ChHistory ch_history{8};

    bool alive() const { return energy_rsd > 0.0; }
    double depth() const { return position.z; }

    // Deducts up to `cost` joules; returns what was actually consumed.
    // A node that cannot afford an action dies attempting it.
    double charge(double cost) {
        const double spent = std::min(cost, energy_rsd);
        energy_rsd -= spent;
        return spent;
    }
};

}  // namespace eehtac
