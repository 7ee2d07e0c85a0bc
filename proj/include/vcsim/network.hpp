#pragma once

#include "vcsim/engine.hpp"
#include "vcsim/latency.hpp"
#include "vcsim/rng.hpp"

#include <array>
#include <functional>
#include <string>
#include <utility>

namespace vcsim {

// Message fabric on top of the engine: tracks how many messages are in
// flight per link class and feeds that count into the latency law. The
// in-flight counter drops when the delivery event is processed.
class Network {
public:
    Network(Engine& engine, LatencyModel model, Rng latency_rng)
        : engine_(engine), model_(std::move(model)), rng_(latency_rng) {}

    // Samples the link at the current congestion level and schedules the
    // delivery. `extra` is a fixed additive delay (e.g. a second leg of the
    // path that does not contend). Returns the delivery time.
    SimTime send(LinkClass link, std::string kind, std::string source, std::string target,
                 std::string detail, std::function<void()> on_delivery, Duration extra = 0) {
        const std::size_t idx = static_cast<std::size_t>(link);
        const Duration latency = model_.sample(link, in_flight_[idx], rng_) + extra;
        ++in_flight_[idx];
        engine_.schedule_in(latency, std::move(kind), std::move(source), std::move(target),
                            std::move(detail),
                            [this, idx, fn = std::move(on_delivery)]() {
                                --in_flight_[idx];
                                if (fn) {
                                    fn();
                                }
                            });
        return engine_.now() + latency;
    }

    // One-off sample that neither sees nor adds congestion; used for legs
    // riding a dedicated bearer.
    Duration sample_detached(LinkClass link) { return model_.sample(link, 0, rng_); }

    std::size_t in_flight(LinkClass link) const {
        return in_flight_[static_cast<std::size_t>(link)];
    }

    const LatencyModel& model() const { return model_; }

private:
    Engine& engine_;
    LatencyModel model_;
    Rng rng_;
    std::array<std::size_t, kLinkClassCount> in_flight_{};
};

} // namespace vcsim
