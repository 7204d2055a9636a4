#pragma once

#include <span>
#include <vector>

namespace eehtac {

// One per-round row of the evaluation ledger. sigma/theta/delta/omega
// and the failure ratios are cumulative since round 0; the clustering
// statistics are windowed values for the round.
struct LedgerRow {
    int round = 0;
    double sigma = 0.0;   // J consumed, cumulative
    double theta = 0.0;   // packets received at sink, cumulative
    double cfd = 100.0;   // % of occurred CH failures detected
    double cfr = 100.0;   // % of detected CH failures recovered
    double delta = 0.0;   // s, aggregate node-to-sink delay, cumulative
    double omega = 0.0;   // routing overhead ratio
    double stb = 1.0;     // cluster stability, [0, 1]
    double cld = 1.0;     // CH load distribution, [0, 1]
    double dch = 0.0;     // CH distribution, [0, 1]
    double ttvr = 0.0;    // temporal topology variation ratio
    bool cfr_vacuous = true;  // no failures detected yet (cfr is 100 by convention)
};

using MetricsLedger = std::vector<LedgerRow>;

// Fraction of the window a node spent as CH; empty window counts as 0.
double tcl(std::span<const int> ch_history);

// Per-node stability e^(-L), L = (1/(k*dt)) * sum of |consecutive
// differences| over the window; k is the number of differences.
// Fewer than 2 samples means no observed transitions, hence 1.
double node_stability(std::span<const int> ch_history, double dt);

// Network means of the per-node statistics.
double cluster_stability(std::span<const double> node_stb);
double dch(std::span<const double> node_tcl);

// CH load distribution: 1 - population standard deviation of the TCL
// values about their mean.
double cld(std::span<const double> node_tcl, double dch_value);

// Ratio of mean drift to the modal drift. The mode is the average of
// the samples in the most populated 1 m bin (bins centered on integer
// meters, ties to the smaller bin); a modal bin at zero falls back to
// the smallest occupied nonzero bin, or to 1 m when there is none.
double ttvr(std::span<const double> drifts);

}  // namespace eehtac
