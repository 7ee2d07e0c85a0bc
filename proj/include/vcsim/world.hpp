#pragma once

#include "vcsim/broker.hpp"
#include "vcsim/engine.hpp"
#include "vcsim/entities.hpp"
#include "vcsim/errors.hpp"
#include "vcsim/metrics.hpp"
#include "vcsim/network.hpp"
#include "vcsim/sessions.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vcsim {

// All mutable state of one scenario run, shared by the protocol,
// orchestration, and mobility managers. Owned by Simulation; everything runs
// on the single engine thread.
struct SimWorld {
    Engine engine;
    std::unique_ptr<Network> net;
    Broker broker;

    std::vector<MecHost> hosts;
    std::map<VehicleId, FarEdgeNode> vehicles;
    std::map<AppId, AppInstance> apps;
    std::map<UeId, UserEquipment> ues;
    std::map<VehicleId, HostId> vehicle_host; // pool membership
    std::map<AppId, HostId> app_host;

    std::uint64_t next_insertion_seq = 1;

    std::vector<AcquisitionSession> acquisitions;
    std::vector<ReleaseSession> releases;
    std::vector<InstantiationRequest> requests;
    std::vector<MigrationEvent> migrations;
    std::vector<OccupancySample> occupancy;
    std::uint64_t rejected_requests = 0;
    std::uint64_t completed_requests = 0;
    std::uint64_t cancelled_migrations = 0;
    std::uint64_t warnings = 0;

    MecHost& host(HostId id) {
        for (auto& h : hosts) {
            if (h.id == id) {
                return h;
            }
        }
        throw InvariantViolation("unknown host id " + std::to_string(id));
    }

    FarEdgeNode& vehicle(VehicleId id) {
        auto it = vehicles.find(id);
        if (it == vehicles.end()) {
            throw InvariantViolation("unknown vehicle id " + std::to_string(id));
        }
        return it->second;
    }

    AppInstance& app(AppId id) {
        auto it = apps.find(id);
        if (it == apps.end()) {
            throw InvariantViolation("unknown app id " + std::to_string(id));
        }
        return it->second;
    }

    void sample_occupancy() {
        std::uint64_t size = 0;
        for (const auto& h : hosts) {
            size += h.pool.size();
        }
        occupancy.push_back({engine.now(), size});
    }

    // Validates an app lifecycle edge; anything off the graph is a bug.
    static void transition_app(AppInstance& app, AppState next);
};

std::string vehicle_label(VehicleId v);
std::string ue_label(UeId u);
std::string vim_label(HostId h);
std::string pm_label(HostId h);
std::string ams_label(HostId h);

} // namespace vcsim
