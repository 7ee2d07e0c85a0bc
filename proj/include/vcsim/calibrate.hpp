#pragma once

#include "vcsim/latency.hpp"

namespace vcsim {

struct CalibrationTargets {
    double solo_join_ms = 13.0;
    double release_ms = 7.0;
};

// Solves the two shared-link base latencies from the two timing anchors,
// assuming zero jitter and no congestion:
//
//   join    = 3 * vehicle_to_broker + 1 * broker_to_host   (measured at VIM
//             pool insertion: reward request, offer, publish, notify)
//   release = 1 * vehicle_to_broker + 2 * broker_to_host   (leave publish,
//             notify, ack back at the broker)
//
// Jitter and queuing increments are taken from `base` unchanged. Throws
// ConfigError when the targets are infeasible (a negative base).
LatencyModel calibrate_latency(const CalibrationTargets& targets, const LatencyModel& base);

} // namespace vcsim
