#pragma once

#include "vcsim/errors.hpp"
#include "vcsim/rng.hpp"
#include "vcsim/time.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace vcsim {

// The five message paths of the scenario. The 5G stack is not modeled;
// each class carries a parametric delay law instead.
enum class LinkClass : std::size_t {
    UeToHost = 0,
    VehicleToBroker = 1,
    BrokerToHost = 2,
    HostInternal = 3,
    SystemLevel = 4,
};

constexpr std::size_t kLinkClassCount = 5;

std::string_view to_string(LinkClass link);
std::optional<LinkClass> link_class_from_string(std::string_view name);

struct LinkParams {
    double base_us = 0.0;    // one-way base latency
    double jitter_us = 0.0;  // uniform half-width around the base
    double queuing_us = 0.0; // added per message already in flight

    bool operator==(const LinkParams&) const = default;
};

// Per-link-class delay law: base + U(-jitter, +jitter) + in_flight * queuing,
// floored at zero.
class LatencyModel {
public:
    LinkParams& params(LinkClass link) { return params_[static_cast<std::size_t>(link)]; }
    const LinkParams& params(LinkClass link) const {
        return params_[static_cast<std::size_t>(link)];
    }

    // Throws ConfigError unless every class satisfies
    // 0 <= jitter <= base and queuing >= 0.
    void validate() const;

    Duration sample(LinkClass link, std::size_t in_flight, Rng& rng) const;

    bool operator==(const LatencyModel&) const = default;

private:
    std::array<LinkParams, kLinkClassCount> params_{};
};

} // namespace vcsim
