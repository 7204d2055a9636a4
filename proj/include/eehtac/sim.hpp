#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eehtac/config.hpp"
#include "eehtac/energy.hpp"
#include "eehtac/events.hpp"
#include "eehtac/metrics.hpp"
#include "eehtac/node.hpp"
#include "eehtac/rng.hpp"
#include "eehtac/topology.hpp"
#include "eehtac/weights.hpp"

namespace eehtac {

// Failure iff the head's residual energy fell to the survivability
// threshold or the member exhausted its JOIN retransmission budget.
std::optional<FailureRecord> detect_ch_failure(const NodeState& ch,
                                               int join_retransmits,
                                               const NetworkParams& params);

struct RunResult {
    MetricsLedger ledger;
    long occurred_failures = 0;
    long detected_failures = 0;
    long recovered_failures = 0;
    int dead_nodes = 0;
};

// One deterministic simulation run: deployment, per-round cluster setup
// with failure recovery, data collection through the AUV and the
// surface chain, mobility, and metric accounting. A run is strictly
// sequential; independent runs share nothing.
class Simulation {
public:
    explicit Simulation(ScenarioConfig config);

    // Uniform random placement, seeded tag permutation, layer assignment.
    void deploy();

    // Executes one full protocol round and returns its ledger row.
    LedgerRow run_round();

    // deploy() + rounds, collecting the ledger (row 0 is the initial state).
    RunResult run();

    // Water-current drift plus isotropic jitter over dt seconds, with
    // reflection at the region boundary; updates per-node mobility speed.
    void advance_mobility(double dt);

    std::vector<NodeState>& nodes() { return nodes_; }
    const std::vector<NodeState>& nodes() const { return nodes_; }
    const ClusterTopology& topology() const { return topology_; }
    EventLog& log() { return log_; }
    const ScenarioConfig& config() const { return config_; }
    const EnergyModel& energy_model() const { return model_; }
    double consumed_energy() const { return consumed_; }
    int round() const { return round_; }
    const std::vector<double>& last_drifts() const { return drifts_; }

    // Highest-AVB candidate within the primary's polling reach; ties go
    // to the lower tag. nullopt when the cluster has no other member.
    std::optional<Tag> designate_subsidiary(std::size_t primary,
                                            const std::vector<std::size_t>& candidates) const;

    // Test hooks: install a cluster and drive the recovery chain directly.
    void force_cluster(Tag primary, const std::vector<Tag>& members,
                       std::optional<Tag> subsidiary);
    FailureRecord run_recovery(Tag failed_primary, FailureCause cause);

    // Engine-level polling reach derived from the competition radius.
    double polling_reach(const NodeState& node) const;

    std::size_t index_of(Tag tag) const;

private:
    struct Batch {
        double count = 0.0;
        double sensed = 0.0;  // absolute time the readings were taken
        double ready = 0.0;   // absolute time available at the holder
    };

    struct PollingHeard {
        double arrival = 0.0;
        std::uint32_t sender = 0;  // node index
    };

    // --- round phases -------------------------------------------------
    void prepare_round();
    void hello_phase();
    void contention_phase();       // EEHTAC timer-driven election
    void eulc_contention_phase();  // baseline score-driven election
    void inject_faults();
    void join_phase();
    void lapse_phase();  // mid-round tenure renewals (short-retention regimes)
    void data_phase();
    void auv_phase();
    LedgerRow finish_round();

    // --- recovery chain -------------------------------------------------
    void recover_cluster(std::size_t failed, std::vector<std::size_t> orphans,
                         FailureCause cause);
    bool ftbc_one(std::size_t failed, const std::vector<std::size_t>& orphans,
                  FailureRecord& record);
    bool ftbc_two(std::size_t failed, const std::vector<std::size_t>& orphans,
                  FailureRecord& record);
    void promote_to_primary(std::size_t idx, const std::vector<std::size_t>& orphans,
                            const char* path);
    void demote_replaced_ch(std::size_t old_idx, std::size_t new_idx);
    bool uplink_available(std::size_t idx) const;

    // --- helpers ----------------------------------------------------
    void charge(std::size_t idx, double joules);
    void broadcast_control(std::size_t sender, double reach_m);
    void register_member(std::size_t member, std::size_t primary, double time);
    void flush_member_data(std::size_t member, std::size_t primary);
    void deliver_chain(std::size_t start, std::vector<Batch> batches, double depart);
    double control_latency() const;
    double current_time_round_start() const;
    std::size_t min_occupied_layer() const;
    std::vector<double> tcl_values() const;

    ScenarioConfig config_;
    NetworkParams params_;
    EnergyModel model_;
    EventLog log_;
    std::vector<NodeState> nodes_;
    ClusterTopology topology_;

    std::mt19937_64 rng_deploy_, rng_mobility_, rng_retention_, rng_faults_,
        rng_aqp_, rng_lapse_;
    double current_dir_ = 0.0;  // heading of the horizontal current field
    double current_phase_x_ = 0.0, current_phase_y_ = 0.0;

    int round_ = 0;
    double elapsed_ = 0.0;
    double consumed_ = 0.0;

    // cumulative counters feeding the ledger
    double theta_ = 0.0;
    double delta_ = 0.0;
    long control_processed_ = 0;
    long occurred_ = 0, detected_ = 0, recovered_ = 0;

    // per-round working state
    std::vector<std::vector<std::uint32_t>> neighbors_;
    std::vector<char> frozen_ch_, frozen_cov_, covered_, demoted_, faulted_;
    std::vector<double> avb_, reach_, dt_;
    std::vector<std::vector<PollingHeard>> heard_;
    std::vector<std::vector<std::uint32_t>> members_;  // per primary index
    std::vector<char> failed_this_round_;
    std::vector<double> drifts_;

    std::vector<std::vector<Batch>> buffers_;   // cluster payload at heads
    std::vector<std::vector<Batch>> backlog_;   // unsent readings per node
    std::vector<Batch> auv_hold_;
    Vec3 auv_pos_{};
    int min_layer_ = 1;
};

}  // namespace eehtac
