#include "vcsim/world.hpp"

namespace vcsim {

void SimWorld::transition_app(AppInstance& app, AppState next) {
    const AppState cur = app.state;
    bool ok = false;
    switch (cur) {
    case AppState::Requested:
        ok = next == AppState::Scheduling || next == AppState::Terminated;
        break;
    case AppState::Scheduling:
        ok = next == AppState::Instantiated || next == AppState::Terminated;
        break;
    case AppState::Instantiated:
        ok = next == AppState::Running || next == AppState::Terminated;
        break;
    case AppState::Running:
        ok = next == AppState::MigrationPending || next == AppState::Terminated;
        break;
    case AppState::MigrationPending:
        ok = next == AppState::ContextTransferring || next == AppState::Terminated;
        break;
    case AppState::ContextTransferring:
        ok = next == AppState::Running || next == AppState::Terminated;
        break;
    case AppState::Terminated:
        ok = false;
        break;
    }
    if (!ok) {
        throw InvariantViolation("illegal app transition " + std::string(to_string(cur)) +
                                 " -> " + std::string(to_string(next)) + " for app " +
                                 std::to_string(app.id));
    }
    app.state = next;
}

std::string vehicle_label(VehicleId v) { return "veh:" + std::to_string(v); }
std::string ue_label(UeId u) { return "ue:" + std::to_string(u); }
std::string vim_label(HostId h) { return "vim:" + std::to_string(h); }
std::string pm_label(HostId h) { return "pm:" + std::to_string(h); }
std::string ams_label(HostId h) { return "ams:" + std::to_string(h); }

} // namespace vcsim
