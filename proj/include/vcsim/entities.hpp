#pragma once

#include "vcsim/geometry.hpp"
#include "vcsim/resources.hpp"
#include "vcsim/time.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace vcsim {

using VehicleId = std::uint64_t;
using AppId = std::uint64_t;
using UeId = std::uint64_t;
using HostId = std::uint64_t;
using RequestId = std::uint64_t;

enum class VehicleState {
    Outside,
    RewardPending,
    Registered,
    Departing,
    Departed,
};

std::string_view to_string(VehicleState s);

enum class AppState {
    Requested,
    Scheduling,
    Instantiated,
    Running,
    MigrationPending,
    ContextTransferring,
    Terminated,
};

std::string_view to_string(AppState s);

// Where an application instance executes: the host's local VI, a vehicle's
// remote VI, or nowhere (not yet placed / rejected).
struct Placement {
    enum class Kind { None, Local, Remote };

    Kind kind = Kind::None;
    VehicleId vehicle = 0; // meaningful only for Remote

    static Placement none() { return {}; }
    static Placement local() { return {Kind::Local, 0}; }
    static Placement remote(VehicleId v) { return {Kind::Remote, v}; }

    bool is_none() const { return kind == Kind::None; }
    bool is_local() const { return kind == Kind::Local; }
    bool is_remote() const { return kind == Kind::Remote; }
    bool on(VehicleId v) const { return kind == Kind::Remote && vehicle == v; }

    bool operator==(const Placement&) const = default;
};

// A parked vehicle offering transient resources. `allocated` is the
// host-side (VIM) accounting ledger; `vi_allocated` is what the on-board
// VIApp has actually applied, which lags by command latency.
struct FarEdgeNode {
    VehicleId id = 0;
    GeoPoint location;
    ResourceVector capacity;
    ResourceVector allocated;
    ResourceVector vi_allocated;
    std::map<AppId, ResourceVector> vi_apps; // VIApp's per-app ledger
    VehicleState state = VehicleState::Outside;
    std::optional<SimTime> join_time;
    std::set<AppId> hosted_apps;
    std::string endpoint;
    bool reachable = true; // false once a hard-cutoff departure completes

    ResourceVector free() const { return capacity - allocated; }
};

// A MEC application instance, one per user request.
struct AppInstance {
    AppId id = 0;
    UeId ue_id = 0;
    ResourceVector demand;
    Placement placement;
    AppState state = AppState::Requested;
    std::uint64_t context_bytes = 0;
    SimTime created_at = 0;
    std::optional<SimTime> terminated_at;
};

struct UserEquipment {
    UeId id = 0;
    SimTime arrival_time = 0;
    Duration session_duration = 0;
    AppId app_id = 0;
};

// Member of a host's transient pool, in insertion order. insertion_seq is a
// global monotonic counter so cyclic orders stay well-defined across
// departures.
struct PoolMember {
    VehicleId vehicle = 0;
    std::uint64_t insertion_seq = 0;
};

// Edge node with infrastructure (local) resources plus the transient pool
// recruited from its Area of Interest. `local_reserved` holds capacity
// claimed by in-flight migrations before their instance lands.
struct MecHost {
    HostId id = 0;
    ResourceVector local_capacity;
    ResourceVector local_allocated;
    ResourceVector local_reserved;
    AreaOfInterest aoi;
    int reward_offer = 0;
    std::vector<PoolMember> pool;

    ResourceVector local_free() const {
        return local_capacity - local_allocated - local_reserved;
    }

    bool in_pool(VehicleId v) const {
        for (const auto& m : pool) {
            if (m.vehicle == v) {
                return true;
            }
        }
        return false;
    }

    void pool_remove(VehicleId v) {
        for (auto it = pool.begin(); it != pool.end(); ++it) {
            if (it->vehicle == v) {
                pool.erase(it);
                return;
            }
        }
    }
};

} // namespace vcsim
