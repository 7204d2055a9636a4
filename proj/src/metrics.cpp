#include "eehtac/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

namespace eehtac {

double tcl(std::span<const int> ch_history) {
    if (ch_history.empty()) return 0.0;
    double sum = 0.0;
    for (int s : ch_history) sum += s;
    return sum / static_cast<double>(ch_history.size());
}

double node_stability(std::span<const int> ch_history, double dt) {
    if (ch_history.size() < 2) return 1.0;
    const std::size_t k = ch_history.size() - 1;
    double transitions = 0.0;
    for (std::size_t i = 1; i < ch_history.size(); ++i)
        transitions += std::abs(ch_history[i] - ch_history[i - 1]);
    const double l = transitions / (static_cast<double>(k) * dt);
    return std::exp(-l);
}

namespace {
double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}
}  // namespace

double cluster_stability(std::span<const double> node_stb) { return mean(node_stb); }

double dch(std::span<const double> node_tcl) { return mean(node_tcl); }

double cld(std::span<const double> node_tcl, double dch_value) {
    if (node_tcl.empty()) return 1.0;
    double ss = 0.0;
    for (double t : node_tcl) {
        const double d = t - dch_value;
        ss += d * d;
    }
    return 1.0 - std::sqrt(ss / static_cast<double>(node_tcl.size()));
}

double ttvr(std::span<const double> drifts) {
    if (drifts.empty()) return 0.0;

    // 1 m bins centered on integer meters: bin index = round-to-nearest.
    std::map<long, std::pair<int, double>> bins;  // index -> (count, sum)
    double total = 0.0;
    for (double d : drifts) {
        const long idx = std::lround(d);
        auto& [count, sum] = bins[idx];
        ++count;
        sum += d;
        total += d;
    }
    const double drift_mean = total / static_cast<double>(drifts.size());

    long modal_idx = 0;
    int modal_count = -1;
    for (const auto& [idx, cs] : bins) {
        if (cs.first > modal_count) {  // ties resolve to the smaller bin
            modal_count = cs.first;
            modal_idx = idx;
        }
    }

    double mode = 0.0;
    if (modal_idx != 0) {
        mode = bins[modal_idx].second / bins[modal_idx].first;
    } else {
        // Zero-midpoint modal bin: use the smallest occupied nonzero bin.
        for (const auto& [idx, cs] : bins) {
            if (idx != 0) {
                mode = cs.second / cs.first;
                break;
            }
        }
        if (mode == 0.0) {
            if (drift_mean == 0.0) return 0.0;
            mode = 1.0;  // smallest nonzero bin midpoint
        }
    }
    return drift_mean / mode;
}

}  // namespace eehtac
