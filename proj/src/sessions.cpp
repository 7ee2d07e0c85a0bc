#include "vcsim/sessions.hpp"

namespace vcsim {

std::string_view to_string(AcqPhase p) {
    switch (p) {
    case AcqPhase::RewardRequested: return "RewardRequested";
    case AcqPhase::RewardOffered: return "RewardOffered";
    case AcqPhase::Published: return "Published";
    case AcqPhase::HostNotified: return "HostNotified";
    case AcqPhase::HostAcked: return "HostAcked";
    case AcqPhase::Confirmed: return "Confirmed";
    case AcqPhase::Aborted: return "Aborted";
    }
    return "unknown";
}

std::string_view to_string(RelPhase p) {
    switch (p) {
    case RelPhase::LeavePublished: return "LeavePublished";
    case RelPhase::HostNotified: return "HostNotified";
    case RelPhase::PoolUpdated: return "PoolUpdated";
    case RelPhase::Acked: return "Acked";
    }
    return "unknown";
}

std::string_view to_string(ReqPhase p) {
    switch (p) {
    case ReqPhase::AtUalcmp: return "AtUalcmp";
    case ReqPhase::AtOrchestrator: return "AtOrchestrator";
    case ReqPhase::Discovery: return "Discovery";
    case ReqPhase::HostSelected: return "HostSelected";
    case ReqPhase::AtVim: return "AtVim";
    case ReqPhase::Scheduled: return "Scheduled";
    case ReqPhase::ViAllocating: return "ViAllocating";
    case ReqPhase::Completed: return "Completed";
    case ReqPhase::Rejected: return "Rejected";
    }
    return "unknown";
}

std::string_view to_string(MigrationEvent::Outcome o) {
    switch (o) {
    case MigrationEvent::Outcome::Pending: return "Pending";
    case MigrationEvent::Outcome::Completed: return "Completed";
    case MigrationEvent::Outcome::Cancelled: return "Cancelled";
    }
    return "unknown";
}

} // namespace vcsim
