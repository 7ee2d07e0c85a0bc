#pragma once

#include "vcsim/entities.hpp"
#include "vcsim/resources.hpp"
#include "vcsim/time.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace vcsim {

// Acquisition protocol phases, in strict order. The join-time metric is
// taken at VIM pool insertion (HostNotified processing), the point where the
// host first recognizes the new vehicle; the confirm still travels on to the
// vehicle afterwards.
enum class AcqPhase {
    RewardRequested,
    RewardOffered,
    Published,
    HostNotified,
    HostAcked,
    Confirmed,
    Aborted,
};

std::string_view to_string(AcqPhase p);

struct AcquisitionSession {
    std::uint64_t id = 0;
    VehicleId vehicle = 0;
    AcqPhase phase = AcqPhase::RewardRequested;
    SimTime started_at = 0;
    std::optional<SimTime> completed_at;
    std::optional<Duration> join_time; // VIM recognition span
    unsigned messages = 0;
};

// Release protocol phases. The release-time metric spans the leave
// publication through the VIM ack arriving back at the broker.
enum class RelPhase {
    LeavePublished,
    HostNotified,
    PoolUpdated,
    Acked,
};

std::string_view to_string(RelPhase p);

struct ReleaseSession {
    std::uint64_t id = 0;
    VehicleId vehicle = 0;
    RelPhase phase = RelPhase::LeavePublished;
    SimTime started_at = 0;
    std::optional<SimTime> completed_at;
    std::optional<Duration> release_time;
    std::vector<AppId> pending_migrations;
    unsigned messages = 0;
};

enum class ReqPhase {
    AtUalcmp,
    AtOrchestrator,
    Discovery,
    HostSelected,
    AtVim,
    Scheduled,
    ViAllocating,
    Completed,
    Rejected,
};

std::string_view to_string(ReqPhase p);

struct InstantiationRequest {
    RequestId id = 0;
    UeId ue = 0;
    AppId app = 0;
    ResourceVector demand;
    SimTime issued_at = 0;
    ReqPhase phase = ReqPhase::AtUalcmp;
    HostId host = 0;
    std::optional<Duration> allocation_delay; // VIM<->VI span only
    std::optional<SimTime> completed_at;
};

// Intra-host migration bookkeeping: remote VI -> local VI, one per
// (app, departure).
struct MigrationEvent {
    std::uint64_t id = 0;
    AppId app = 0;
    VehicleId source_vehicle = 0;
    SimTime triggered_at = 0;
    std::optional<SimTime> completed_at;
    std::uint64_t context_bytes = 0;
    enum class Outcome { Pending, Completed, Cancelled } outcome = Outcome::Pending;
    std::optional<Duration> service_gap; // UE-perceived downtime
};

std::string_view to_string(MigrationEvent::Outcome o);

} // namespace vcsim
