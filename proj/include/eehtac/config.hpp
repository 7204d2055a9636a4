#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "eehtac/node.hpp"

namespace eehtac {

inline constexpr const char* kToolVersion = "1.0.0";

enum class Protocol : std::uint8_t { Eehtac, Eulc1, Eulc2, Eulc3, Eulc4 };

const char* protocol_name(Protocol p);
Protocol protocol_from_name(const std::string& name);

// alpha/beta/gamma presets of the four baseline variants.
struct EulcWeights {
    double alpha = 0.2, beta = 0.3, gamma = 0.5;
};
EulcWeights eulc_weights(Protocol p);

enum class DtPreset : std::uint8_t { HighFault, Normal, HighOverhead, Custom };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full description of one simulation run. Defaults reproduce the
// reference deployment: 500 nodes in a 500 m cube, 500 B packets at
// 4 kbps, 2 J initial energy, 0.1 uJ idle, 5 nJ/bit fusing, 2 m/s AUV,
// 27 kHz carrier, 60 m transmission range.
struct ScenarioConfig {
    // simulation
    std::uint32_t nodes = 500;
    int rounds = 800;
    std::uint64_t seed = 1;
    Protocol protocol = Protocol::Eehtac;

    // region (sink sits at the surface center)
    double region_width = 500.0;   // m, x extent
    double region_length = 500.0;  // m, y extent
    double region_depth = 500.0;   // m, z extent

    // radio
    double packet_bytes = 500.0;   // data payload
    double control_bytes = 32.0;   // HELLO/POLLING/JOIN/ACK
    double data_rate_bps = 4000.0;
    double carrier_khz = 27.0;
    double ctr = 60.0;

    // energy
    double e_init = 2.0;            // J
    double e_idle = 0.1e-6;         // J per round
    double e_fuse = 5e-9;           // J per bit
    double e_elec = 50e-9;          // J per bit, tx/rx electronics
    double e_amp = 0.4e-9;          // J per bit per m^kappa
    double spreading_exponent = 1.5;

    // protocol
    DtPreset dt_preset = DtPreset::Normal;
    double t_cmp = 90.0;          // s, effective retention scale
    double t_adv = 2.0;           // s, advertisement window
    double t_data = 30.0;         // s, data-phase window
    double sense_interval = 60.0; // s between sensed readings
    int k_layer = 1;
    double avb_set = 0.02;
    double e_surv = 0.1;          // J
    int srl = 3;
    PriorityMode priority_mode = PriorityMode::HighTag;
    P4Variant p4_variant = P4Variant::Literal;
    RadiusMode radius_mode = RadiusMode::Clamped;
    int ch_window = 8;
    int max_bonding_retries = 3;
    double renewal_hazard = 0.0025;  // per mid-round tenure renewal
    double delta_proc = 0.005;       // s per control packet

    // mobility
    double current_speed = 0.08;  // m/s mean horizontal current
    double jitter = 0.5;          // m per sqrt(s), isotropic

    // auv
    double auv_speed = 2.0;  // m/s

    // faults
    double primary_fault_rate = 0.0;  // per-round transient kill probability

    bool operator==(const ScenarioConfig&) const = default;

    double round_duration() const { return t_adv + t_cmp + t_data; }
    int packets_per_round() const {
        return std::max(1, static_cast<int>(round_duration() / sense_interval));
    }
    int total_layers() const {
        return layer_count(region_depth, ctr, k_layer);
    }
    Vec3 sink_position() const {
        return {region_width / 2.0, region_length / 2.0, 0.0};
    }
    NetworkParams network_params() const;
    void validate() const;  // throws ConfigError

private:
    static int layer_count(double depth, double ctr, int k_layer);
};

// Parses the nested key/value scenario document. Unknown sections or
// keys, malformed values and wrong units are reported with line numbers.
ScenarioConfig parse_config(const std::string& document);
ScenarioConfig load_config_file(const std::string& path);

// Emits a document that parses back to an identical config.
std::string render_config(const ScenarioConfig& config);

}  // namespace eehtac
