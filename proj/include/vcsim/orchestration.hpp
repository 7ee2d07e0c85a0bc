#pragma once

#include "vcsim/config.hpp"
#include "vcsim/protocol.hpp"
#include "vcsim/scheduling.hpp"
#include "vcsim/world.hpp"

#include <map>
#include <memory>

namespace vcsim {

class MobilityService;

// System-level instantiation flow (Device App -> UALCMP -> MEC-O -> host
// selection -> VIM) and the VIM's dual local/remote accounting. Pool and
// local ledgers are committed atomically with app placement changes; the VI
// command traffic models the protocol latency on top.
class Orchestrator {
public:
    Orchestrator(SimWorld& world, const ScenarioConfig& cfg, LifecycleProtocol& lifecycle)
        : world_(world), cfg_(cfg), lifecycle_(lifecycle) {}

    void set_mobility(MobilityService* m) { mobility_ = m; }

    // One scheduler instance per host (cursor state is per VIM).
    void set_scheduler_factory(std::function<std::unique_ptr<Scheduler>()> factory);
    Scheduler& scheduler_for(HostId h);

    // Drives the UALCMP/MEC-O/discovery chain; the request reaches
    // schedule_and_allocate when it lands at the selected host's VIM.
    RequestId submit_request(UeId ue, const ResourceVector& demand);

    // Frees the app's placement (VI command if remote) and restores
    // accounting. Unknown or already-terminated apps are a warned no-op.
    void terminate_app(AppId app);

    PoolSnapshot snapshot_of(HostId h) const;

    // Local VI ledger hooks shared with the mobility service.
    bool reserve_local(HostId h, const ResourceVector& demand);
    void unreserve_local(HostId h, const ResourceVector& demand);
    void commit_reserved_local(HostId h, const ResourceVector& demand);
    void free_local(HostId h, const ResourceVector& demand);

    // Remote accounting, committed at decision/termination instants.
    void free_remote(VehicleId v, AppId app, const ResourceVector& demand);

private:
    void on_at_orchestrator(std::size_t ridx);
    void run_discovery(std::size_t ridx);
    void on_host_selected(std::size_t ridx, HostId h);
    void schedule_and_allocate(std::size_t ridx);
    void on_vi_allocated(std::size_t ridx, SimTime vim_entry);
    void reject(std::size_t ridx);
    void complete(std::size_t ridx);

    SimWorld& world_;
    const ScenarioConfig& cfg_;
    LifecycleProtocol& lifecycle_;
    MobilityService* mobility_ = nullptr;
    std::function<std::unique_ptr<Scheduler>()> scheduler_factory_;
    std::map<HostId, std::unique_ptr<Scheduler>> schedulers_;
    RequestId next_request_id_ = 1;
    AppId next_app_id_ = 1;
};

} // namespace vcsim
