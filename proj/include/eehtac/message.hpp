#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "eehtac/node.hpp"

namespace eehtac {

// Control and data packets of the cluster setup and data phases.
namespace msg {

struct Hello {
    double avb = 0.0;
    double energy_rsd = 0.0;
    Tag tag = 0;
    int layer = 0;
};

struct Polling {
    double avb = 0.0;
    double rad_cmp = 0.0;
    int layer = 0;
    Tag tag = 0;
    double energy_rsd = 0.0;
};

struct Join {
    double energy_rsd_of_sender = 0.0;
    Tag target_primary_tag = 0;
    Tag sender_tag = 0;
};

struct Ack {
    Tag from_tag = 0;
    Tag to_tag = 0;
};

struct Data {
    Tag origin_tag = 0;
    double payload_bytes = 0.0;
    std::vector<Tag> hop_trace;
};

}  // namespace msg

using Message =
    std::variant<msg::Hello, msg::Polling, msg::Join, msg::Ack, msg::Data>;

}  // namespace eehtac
