#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "eehtac/node.hpp"

namespace eehtac {

enum class FailureCause : std::uint8_t {
    EnergyBelowSurv,
    JoinRetransmitExceeded,
};

enum class RecoveryPath : std::uint8_t { Ftbc1, Ftbc2, Unrecovered };

struct FailureRecord {
    Tag failed_tag = 0;
    FailureCause cause{};
    RecoveryPath path = RecoveryPath::Unrecovered;
    int rounds_to_recover = 0;
    bool ftbc1_checked = false;  // FTBC-2 is only reached after FTBC-1 fails
};

// Per-round snapshot of the cluster structure.
struct ClusterTopology {
    std::vector<Tag> primaries;                    // ACTIVE heads
    std::unordered_map<Tag, Tag> subsidiary_of;    // primary -> idle backup
    std::unordered_map<Tag, Tag> member_of;        // CM -> its primary
    std::vector<Tag> orphans;                      // uncovered this round
    std::vector<FailureRecord> failures;

    std::vector<Tag> members_of(Tag primary) const {
        std::vector<Tag> out;
        for (const auto& [member, head] : member_of)
            if (head == primary) out.push_back(member);
        return out;
    }

    std::optional<Tag> subsidiary(Tag primary) const {
        const auto it = subsidiary_of.find(primary);
        if (it == subsidiary_of.end()) return std::nullopt;
        return it->second;
    }

    bool is_primary(Tag tag) const {
        for (Tag t : primaries)
            if (t == tag) return true;
        return false;
    }
};

}  // namespace eehtac
