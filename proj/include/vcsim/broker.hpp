#pragma once

#include "vcsim/entities.hpp"
#include "vcsim/geometry.hpp"
#include "vcsim/resources.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace vcsim {

using SubscriptionId = std::uint64_t;

struct Subscription {
    SubscriptionId id = 0;
    HostId subscriber = 0;
    AreaOfInterest filter;
};

struct Publication {
    enum class Kind { Join, Leave };

    VehicleId vehicle = 0;
    GeoPoint location;
    ResourceVector offered;
    Kind kind = Kind::Join;
    std::string endpoint;
};

// System-level publish/subscribe broker with content-based subscriptions
// keyed on AoI geometry. Matching is a linear scan over subscriptions; the
// scenario scale is tens of hosts.
class Broker {
public:
    // Idempotent: the same (host, filter) pair keeps its original id.
    SubscriptionId subscribe(HostId host, const AreaOfInterest& filter);

    // Reward offer advertised to vehicles inside the host's AoI(s).
    void set_reward_offer(HostId host, int reward);

    // Returns the subscribers whose filter contains the publication point,
    // in subscription order. A Leave for a vehicle that never joined matches
    // nothing and bumps the warning counter.
    std::vector<HostId> publish(const Publication& p);

    // Device-initiated reward lookup: offers of every subscribed host whose
    // AoI contains the location, ordered by host id.
    std::vector<std::pair<HostId, int>> rewards_at(const GeoPoint& location) const;

    const std::vector<Subscription>& subscriptions() const { return subs_; }

    std::uint64_t joins_seen(VehicleId v) const;
    std::uint64_t leaves_seen(VehicleId v) const;
    std::uint64_t unknown_leave_warnings() const { return unknown_leave_warnings_; }

private:
    std::vector<Subscription> subs_;
    std::map<HostId, int> reward_offers_;
    std::map<VehicleId, std::uint64_t> join_counts_;
    std::map<VehicleId, std::uint64_t> leave_counts_;
    std::set<VehicleId> joined_;
    SubscriptionId next_id_ = 1;
    std::uint64_t unknown_leave_warnings_ = 0;
};

} // namespace vcsim
