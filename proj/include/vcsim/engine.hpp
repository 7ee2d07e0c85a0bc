#pragma once

#include "vcsim/errors.hpp"
#include "vcsim/time.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace vcsim {

// Timestamped, sequence-ordered unit of the event queue. `seq` is assigned at
// scheduling time, so events at equal timestamps pop in FIFO order.
struct SimEvent {
    SimTime fire_at = 0;
    std::uint64_t seq = 0;
    std::string kind;
    std::string source;
    std::string target;
    std::string detail;
    std::function<void()> action;
};

// One record per processed event, mirrors the events.csv columns.
struct TraceRow {
    SimTime time_us = 0;
    std::uint64_t seq = 0;
    std::string kind;
    std::string source;
    std::string target;
    std::string detail;
};

// Single-threaded deterministic discrete-event engine. Whole instances are
// independent; nothing is shared between engines.
class Engine {
public:
    SimTime now() const { return now_; }

    void schedule(SimEvent ev) {
        if (ev.fire_at < now_) {
            throw InvariantViolation("event scheduled in the past: kind=" + ev.kind);
        }
        ev.seq = next_seq_++;
        queue_.push(std::move(ev));
    }

    void schedule_at(SimTime at, std::string kind, std::string source, std::string target,
                     std::string detail, std::function<void()> action) {
        SimEvent ev;
        ev.fire_at = at;
        ev.kind = std::move(kind);
        ev.source = std::move(source);
        ev.target = std::move(target);
        ev.detail = std::move(detail);
        ev.action = std::move(action);
        schedule(std::move(ev));
    }

    void schedule_in(Duration delay, std::string kind, std::string source, std::string target,
                     std::string detail, std::function<void()> action) {
        schedule_at(now_ + delay, std::move(kind), std::move(source), std::move(target),
                    std::move(detail), std::move(action));
    }

    // Processes the next event. Returns false when the queue is empty
    // (simulation complete).
    bool step() {
        if (queue_.empty()) {
            return false;
        }
        SimEvent ev = pop();
        now_ = ev.fire_at;
        if (trace_enabled_) {
            trace_.push_back({ev.fire_at, ev.seq, ev.kind, ev.source, ev.target, ev.detail});
        }
        if (ev.action) {
            ev.action();
        }
        ++processed_;
        if (post_event_hook_) {
            post_event_hook_(ev);
        }
        return true;
    }

    // Processes every event with fire_at <= horizon, in (fire_at, seq) order.
    // Returns the number of events processed. The clock ends at the last
    // processed event time, never past the horizon.
    std::size_t run_until(SimTime horizon) {
        std::size_t count = 0;
        while (!queue_.empty() && queue_.top().fire_at <= horizon) {
            step();
            ++count;
        }
        return count;
    }

    std::size_t queued() const { return queue_.size(); }
    std::uint64_t processed() const { return processed_; }

    void enable_trace(bool on) { trace_enabled_ = on; }
    const std::vector<TraceRow>& trace() const { return trace_; }

    // Invoked after each processed event; used by the conservation checker.
    void set_post_event_hook(std::function<void(const SimEvent&)> hook) {
        post_event_hook_ = std::move(hook);
    }

private:
    struct Later {
        bool operator()(const SimEvent& a, const SimEvent& b) const {
            if (a.fire_at != b.fire_at) {
                return a.fire_at > b.fire_at;
            }
            return a.seq > b.seq;
        }
    };

    SimEvent pop() {
        // priority_queue::top is const; the event is moved out via const_cast,
        // which is safe because it is popped immediately after.
        SimEvent ev = std::move(const_cast<SimEvent&>(queue_.top()));
        queue_.pop();
        return ev;
    }

    SimTime now_ = 0;
    std::uint64_t next_seq_ = 0;
    std::uint64_t processed_ = 0;
    std::priority_queue<SimEvent, std::vector<SimEvent>, Later> queue_;
    bool trace_enabled_ = false;
    std::vector<TraceRow> trace_;
    std::function<void(const SimEvent&)> post_event_hook_;
};

} // namespace vcsim
