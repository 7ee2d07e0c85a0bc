#include "vcsim/broker.hpp"

#include <algorithm>

namespace vcsim {

SubscriptionId Broker::subscribe(HostId host, const AreaOfInterest& filter) {
    for (const auto& s : subs_) {
        if (s.subscriber == host && s.filter == filter) {
            return s.id;
        }
    }
    const SubscriptionId id = next_id_++;
    subs_.push_back({id, host, filter});
    return id;
}

void Broker::set_reward_offer(HostId host, int reward) {
    reward_offers_[host] = reward;
}

std::vector<HostId> Broker::publish(const Publication& p) {
    if (p.kind == Publication::Kind::Leave) {
        if (joined_.count(p.vehicle) == 0) {
            ++unknown_leave_warnings_;
            return {};
        }
        joined_.erase(p.vehicle);
        ++leave_counts_[p.vehicle];
    } else {
        joined_.insert(p.vehicle);
        ++join_counts_[p.vehicle];
    }

    std::vector<HostId> matched;
    std::set<HostId> seen;
    for (const auto& s : subs_) {
        if (contains(s.filter, p.location) && seen.insert(s.subscriber).second) {
            matched.push_back(s.subscriber);
        }
    }
    return matched;
}

std::vector<std::pair<HostId, int>> Broker::rewards_at(const GeoPoint& location) const {
    std::set<HostId> matched;
    for (const auto& s : subs_) {
        if (contains(s.filter, location)) {
            matched.insert(s.subscriber);
        }
    }
    std::vector<std::pair<HostId, int>> out;
    for (HostId h : matched) {
        auto it = reward_offers_.find(h);
        out.emplace_back(h, it == reward_offers_.end() ? 0 : it->second);
    }
    return out;
}

std::uint64_t Broker::joins_seen(VehicleId v) const {
    auto it = join_counts_.find(v);
    return it == join_counts_.end() ? 0 : it->second;
}

std::uint64_t Broker::leaves_seen(VehicleId v) const {
    auto it = leave_counts_.find(v);
    return it == leave_counts_.end() ? 0 : it->second;
}

} // namespace vcsim
