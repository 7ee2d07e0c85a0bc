#include "vcsim/latency.hpp"

#include <cmath>

namespace vcsim {

std::string_view to_string(LinkClass link) {
    switch (link) {
    case LinkClass::UeToHost: return "ue_to_host";
    case LinkClass::VehicleToBroker: return "vehicle_to_broker";
    case LinkClass::BrokerToHost: return "broker_to_host";
    case LinkClass::HostInternal: return "host_internal";
    case LinkClass::SystemLevel: return "system_level";
    }
    return "unknown";
}

std::optional<LinkClass> link_class_from_string(std::string_view name) {
    for (std::size_t i = 0; i < kLinkClassCount; ++i) {
        const auto link = static_cast<LinkClass>(i);
        if (to_string(link) == name) {
            return link;
        }
    }
    return std::nullopt;
}

void LatencyModel::validate() const {
    for (std::size_t i = 0; i < kLinkClassCount; ++i) {
        const auto link = static_cast<LinkClass>(i);
        const LinkParams& p = params(link);
        if (p.base_us < 0.0 || p.jitter_us < 0.0 || p.queuing_us < 0.0) {
            throw ConfigError("latency parameters must be non-negative for link " +
                              std::string(to_string(link)));
        }
        if (p.jitter_us > p.base_us) {
            throw ConfigError("jitter exceeds base latency for link " +
                              std::string(to_string(link)));
        }
    }
}

Duration LatencyModel::sample(LinkClass link, std::size_t in_flight, Rng& rng) const {
    const LinkParams& p = params(link);
    double value = p.base_us + static_cast<double>(in_flight) * p.queuing_us;
    if (p.jitter_us > 0.0) {
        value += rng.uniform(-p.jitter_us, p.jitter_us);
    }
    if (value <= 0.0) {
        return 0;
    }
    return static_cast<Duration>(std::llround(value));
}

} // namespace vcsim
