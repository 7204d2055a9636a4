#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eehtac/node.hpp"

namespace eehtac {

enum class EventKind : std::uint8_t {
    Hello,
    Polling,
    Join,
    Ack,
    Data,
    RoleChange,
    Failure,
    Recovery,
    ContentionStall,
    AuvVisit,
    SinkDelivery,
};

const char* event_kind_name(EventKind kind);

// One line-oriented record of the simulation transcript.
struct Event {
    int round = 0;
    double time = 0.0;  // simulated seconds
    EventKind kind{};
    Tag subject = 0;  // sender / failed node / promoted node
    Tag object = 0;   // receiver / replacement, 0 when not applicable
    double value = 0.0;  // packet count, delta-t, etc.
    std::string note;    // cause, scenario or recovery-path label

    std::string line() const;
};

class EventLog {
public:
    void set_enabled(bool on) { enabled_ = on; }

    void emit(Event ev) {
        if (enabled_) events_.push_back(std::move(ev));
    }

    const std::vector<Event>& events() const { return events_; }
    void clear() { events_.clear(); }

private:
    bool enabled_ = true;
    std::vector<Event> events_;
};

}  // namespace eehtac
