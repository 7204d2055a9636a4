#include "eehtac/election.hpp"

#include <unordered_set>

#include "eehtac/clustering.hpp"

namespace eehtac {

QVector q_vector(const NodeState& node, const NeighborhoodSnapshot& snapshot,
                 double avb_focal, double avb_set) {
    std::unordered_set<Tag> seen{node.tag};
    for (const auto& rec : snapshot.others) {
        if (!seen.insert(rec.tag).second)
            throw TopologyCorrupt("duplicate tag in snapshot");
    }

    const int focal_ch = node.role == Role::PrimaryCh ? 1 : 0;
    const Tag focal_tag = node.tag;

    QVector q;
    q[1] = q[8] = 1 - focal_ch;
    q[5] = focal_ch;

    // Q2 / Q9: presence of at least one adjacent CH.
    double linked_ch = 0.0;
    for (const auto& r : snapshot.others)
        linked_ch += (r.is_ch && r.adjacent) ? 1.0 : 0.0;
    q[9] = unit_step(linked_ch);
    q[2] = 1 - q[9];

    q[3] = q[4] = q[6] = q[7] = q[10] = q[11] = 1;
    for (const auto& r : snapshot.others) {
        const double adj = r.adjacent ? 1.0 : 0.0;
        const double ch = r.is_ch ? 1.0 : 0.0;
        const double uncov = r.covered ? 0.0 : 1.0;
        if (r.tag < focal_tag) {
            q[3] &= unit_step(avb_focal - adj * r.avb * uncov);
            q[6] &= unit_step(avb_focal - adj * r.avb * ch);
            q[10] &= unit_step(avb_focal - adj * (r.avb + avb_set) * ch);
        } else {
            q[4] &= 1 - unit_step(adj * r.avb * uncov - avb_focal);
            q[7] &= 1 - unit_step(adj * r.avb * ch - avb_focal);
            q[11] &= 1 - unit_step(adj * (r.avb + avb_set) * ch - avb_focal);
        }
    }
    return q;
}

ElectionOutcome elect(const QVector& q) {
    const int s1 = q[1] & q[2] & q[3] & q[4];
    const int s2 = q[5] & q[6] & q[7];
    const int s3 = q[8] & q[9] & q[10] & q[11];
    if (s1) return {true, Scenario::S1};
    if (s2) return {true, Scenario::S2};
    if (s3) return {true, Scenario::S3};
    return {false, Scenario::S4};
}

ElectionOutcome elect(const NodeState& node,
                      const NeighborhoodSnapshot& snapshot, double avb_focal,
                      double avb_set) {
    return elect(q_vector(node, snapshot, avb_focal, avb_set));
}

}  // namespace eehtac
