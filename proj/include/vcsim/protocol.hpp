#pragma once

#include "vcsim/config.hpp"
#include "vcsim/world.hpp"

#include <functional>

namespace vcsim {

class MobilityService;

// Vehicle-side VI management command, applied by the on-board VIApp.
struct ViCommand {
    enum class Kind { Allocate, Release, PrepareMigration };

    Kind kind = Kind::Allocate;
    AppId app = 0;
    ResourceVector demand;
};

std::string_view to_string(ViCommand::Kind k);

// Acquisition and release protocol state machines spanning the vehicle-side
// agents (ClientResApp, VIApp) and the host-side VIM handlers.
//
// Acquisition (6 messages): reward request, reward offer, resource publish,
// pool notify, registration ack, join confirm. The pool is updated and the
// join time taken when the notify is processed at the VIM.
//
// Release (4 messages): leave publish, leave notify, release ack, release
// confirm. Pool removal happens at notify processing; the release time ends
// when the ack reaches the broker; migrations fire after pool removal.
class LifecycleProtocol {
public:
    LifecycleProtocol(SimWorld& world, const ScenarioConfig& cfg) : world_(world), cfg_(cfg) {}

    void set_mobility(MobilityService* m) { mobility_ = m; }

    // Starts the 6-message acquisition exchange. The vehicle must be Outside.
    // Returns the session index into world.acquisitions.
    std::size_t start_join(VehicleId v);

    // Starts the 4-message release exchange; unknown or unregistered
    // vehicles are a warned no-op (returns npos).
    std::size_t start_leave(VehicleId v);

    // VIM -> vehicle VI command with the ack returned to `on_ack`. Congestion
    // applies on the host-internal management plane; the vehicle radio leg
    // adds base latency and jitter only.
    void send_vi_command(HostId h, VehicleId v, ViCommand cmd, std::function<void(bool)> on_ack);

    // Local VI preparation round trip (no vehicle leg).
    void send_local_vi_command(HostId h, std::string detail, std::function<void()> on_done);

    // The VIApp ledger application: NACKs an Allocate that exceeds remaining
    // capacity, a Release of an unknown app, or a command in the wrong
    // vehicle state.
    static bool apply_vi_command(FarEdgeNode& vehicle, const ViCommand& cmd);

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    void on_reward_request(std::size_t sid);
    void on_reward_offer(std::size_t sid, HostId granting_host);
    void on_resource_publish(std::size_t sid, HostId granting_host);
    void on_pool_notify(std::size_t sid, HostId h);
    void on_registration_ack(std::size_t sid);

    void on_leave_publish(std::size_t sid);
    void on_leave_notify(std::size_t sid, HostId h);
    void on_release_ack(std::size_t sid);

    void abort_join(std::size_t sid, const std::string& why);

    SimWorld& world_;
    const ScenarioConfig& cfg_;
    MobilityService* mobility_ = nullptr;
    std::uint64_t next_session_id_ = 1;
};

} // namespace vcsim
