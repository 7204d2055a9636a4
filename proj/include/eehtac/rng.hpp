#pragma once

#include <cstdint>
#include <random>

namespace eehtac {

// All randomness in a run flows from one master seed through named
// substreams, so toggling one feature does not perturb the others.
enum class Stream : std::uint64_t {
    Deploy    = 0x01,
    Mobility  = 0x02,
    Retention = 0x03,  // rnd of the CH retention period
    Faults    = 0x04,
    Aqp       = 0x05,
    Lapse     = 0x06,  // mid-round tenure renewal conflicts
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_stream(std::uint64_t seed, Stream stream) {
    return std::mt19937_64(splitmix64(seed ^ (static_cast<std::uint64_t>(stream) << 32)));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double gaussian(std::mt19937_64& rng, double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(rng);
}

}  // namespace eehtac
