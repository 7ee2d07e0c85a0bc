#include "vcsim/entities.hpp"

namespace vcsim {

std::string_view to_string(VehicleState s) {
    switch (s) {
    case VehicleState::Outside: return "Outside";
    case VehicleState::RewardPending: return "RewardPending";
    case VehicleState::Registered: return "Registered";
    case VehicleState::Departing: return "Departing";
    case VehicleState::Departed: return "Departed";
    }
    return "unknown";
}

std::string_view to_string(AppState s) {
    switch (s) {
    case AppState::Requested: return "Requested";
    case AppState::Scheduling: return "Scheduling";
    case AppState::Instantiated: return "Instantiated";
    case AppState::Running: return "Running";
    case AppState::MigrationPending: return "MigrationPending";
    case AppState::ContextTransferring: return "ContextTransferring";
    case AppState::Terminated: return "Terminated";
    }
    return "unknown";
}

} // namespace vcsim
