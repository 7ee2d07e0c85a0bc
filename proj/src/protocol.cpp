#include "vcsim/protocol.hpp"

#include "vcsim/mobility.hpp"

#include <algorithm>

namespace vcsim {

namespace {

std::string acq_detail(std::uint64_t id) { return "acq:" + std::to_string(id); }
std::string rel_detail(std::uint64_t id) { return "rel:" + std::to_string(id); }

} // namespace

std::string_view to_string(ViCommand::Kind k) {
    switch (k) {
    case ViCommand::Kind::Allocate: return "Allocate";
    case ViCommand::Kind::Release: return "Release";
    case ViCommand::Kind::PrepareMigration: return "PrepareMigration";
    }
    return "unknown";
}

std::size_t LifecycleProtocol::start_join(VehicleId v) {
    FarEdgeNode& veh = world_.vehicle(v);
    if (veh.state != VehicleState::Outside) {
        throw InvariantViolation("join requires an Outside vehicle");
    }
    veh.state = VehicleState::RewardPending;

    AcquisitionSession s;
    s.id = next_session_id_++;
    s.vehicle = v;
    s.phase = AcqPhase::RewardRequested;
    s.started_at = world_.engine.now();
    world_.acquisitions.push_back(s);
    const std::size_t sid = world_.acquisitions.size() - 1;

    // (1) device-initiated reward request
    ++world_.acquisitions[sid].messages;
    world_.net->send(LinkClass::VehicleToBroker, "msg.reward_request", vehicle_label(v), "broker",
                     acq_detail(s.id), [this, sid] { on_reward_request(sid); });
    return sid;
}

void LifecycleProtocol::on_reward_request(std::size_t sid) {
    AcquisitionSession& s = world_.acquisitions[sid];
    if (s.phase == AcqPhase::Aborted) {
        return;
    }
    const FarEdgeNode& veh = world_.vehicle(s.vehicle);
    const auto rewards = world_.broker.rewards_at(veh.location);
    if (rewards.empty()) {
        abort_join(sid, "no_subscribed_host");
        return;
    }
    // First accepted reward wins; offers come ordered by host id.
    const HostId granting_host = rewards.front().first;

    // (2) reward offer back to the vehicle
    ++s.messages;
    world_.net->send(LinkClass::VehicleToBroker, "msg.reward_offer", "broker",
                     vehicle_label(s.vehicle), acq_detail(s.id),
                     [this, sid, granting_host] { on_reward_offer(sid, granting_host); });
}

void LifecycleProtocol::on_reward_offer(std::size_t sid, HostId granting_host) {
    AcquisitionSession& s = world_.acquisitions[sid];
    if (s.phase == AcqPhase::Aborted) {
        return;
    }
    s.phase = AcqPhase::RewardOffered;
    if (!cfg_.vehicle_accept_rewards) {
        abort_join(sid, "reward_declined");
        return;
    }
    FarEdgeNode& veh = world_.vehicle(s.vehicle);
    veh.endpoint = vehicle_label(s.vehicle) + ".vi";

    // (3) resource publication: location, offered capacity, VI endpoint
    ++s.messages;
    world_.net->send(LinkClass::VehicleToBroker, "msg.resource_publish", vehicle_label(s.vehicle),
                     "broker", acq_detail(s.id),
                     [this, sid, granting_host] { on_resource_publish(sid, granting_host); });
}

void LifecycleProtocol::on_resource_publish(std::size_t sid, HostId granting_host) {
    AcquisitionSession& s = world_.acquisitions[sid];
    if (s.phase == AcqPhase::Aborted) {
        return;
    }
    s.phase = AcqPhase::Published;
    FarEdgeNode& veh = world_.vehicle(s.vehicle);

    Publication pub;
    pub.vehicle = s.vehicle;
    pub.location = veh.location;
    pub.offered = veh.capacity;
    pub.kind = Publication::Kind::Join;
    pub.endpoint = veh.endpoint;
    const auto matched = world_.broker.publish(pub);

    // The reward binds the vehicle to one host; the broker notifies that
    // host. With disjoint AoIs this is exactly the matched set.
    if (std::find(matched.begin(), matched.end(), granting_host) == matched.end()) {
        abort_join(sid, "granting_host_not_matched");
        return;
    }

    // (4) pool notification toward the host's VIM
    ++s.messages;
    world_.net->send(LinkClass::BrokerToHost, "msg.pool_notify", "broker",
                     vim_label(granting_host), acq_detail(s.id),
                     [this, sid, granting_host] { on_pool_notify(sid, granting_host); });
}

void LifecycleProtocol::on_pool_notify(std::size_t sid, HostId h) {
    AcquisitionSession& s = world_.acquisitions[sid];
    if (s.phase == AcqPhase::Aborted) {
        return;
    }
    s.phase = AcqPhase::HostNotified;

    // Pool insertion: this is the point where the MEC-H recognizes the new
    // vehicle, and where the join-time metric is taken.
    FarEdgeNode& veh = world_.vehicle(s.vehicle);
    MecHost& host = world_.host(h);
    veh.state = VehicleState::Registered;
    veh.join_time = world_.engine.now();
    host.pool.push_back({s.vehicle, world_.next_insertion_seq++});
    world_.vehicle_host[s.vehicle] = h;
    world_.sample_occupancy();
    s.join_time = world_.engine.now() - s.started_at;

    // (5) registration ack back to the broker
    ++s.messages;
    world_.net->send(LinkClass::BrokerToHost, "msg.registration_ack", vim_label(h), "broker",
                     acq_detail(s.id), [this, sid] { on_registration_ack(sid); });
}

void LifecycleProtocol::on_registration_ack(std::size_t sid) {
    AcquisitionSession& s = world_.acquisitions[sid];
    if (s.phase == AcqPhase::Aborted) {
        return;
    }
    s.phase = AcqPhase::HostAcked;

    // (6) confirmation to the vehicle
    ++s.messages;
    world_.net->send(LinkClass::VehicleToBroker, "msg.join_confirm", "broker",
                     vehicle_label(s.vehicle), acq_detail(s.id), [this, sid] {
                         AcquisitionSession& done = world_.acquisitions[sid];
                         if (done.phase == AcqPhase::Aborted) {
                             return;
                         }
                         done.phase = AcqPhase::Confirmed;
                         done.completed_at = world_.engine.now();
                     });
}

void LifecycleProtocol::abort_join(std::size_t sid, const std::string& why) {
    AcquisitionSession& s = world_.acquisitions[sid];
    s.phase = AcqPhase::Aborted;
    FarEdgeNode& veh = world_.vehicle(s.vehicle);
    if (veh.state == VehicleState::RewardPending) {
        veh.state = VehicleState::Outside;
    }
    world_.engine.schedule_in(0, "acq.abort", vehicle_label(s.vehicle), "broker",
                              acq_detail(s.id) + " " + why, nullptr);
}

std::size_t LifecycleProtocol::start_leave(VehicleId v) {
    auto it = world_.vehicles.find(v);
    if (it == world_.vehicles.end() || it->second.state != VehicleState::Registered) {
        ++world_.warnings;
        return npos;
    }
    FarEdgeNode& veh = it->second;
    veh.state = VehicleState::Departing;

    ReleaseSession s;
    s.id = next_session_id_++;
    s.vehicle = v;
    s.phase = RelPhase::LeavePublished;
    s.started_at = world_.engine.now();
    world_.releases.push_back(s);
    const std::size_t sid = world_.releases.size() - 1;

    // (1) leave publication
    ++world_.releases[sid].messages;
    world_.net->send(LinkClass::VehicleToBroker, "msg.leave_publish", vehicle_label(v), "broker",
                     rel_detail(s.id), [this, sid] { on_leave_publish(sid); });
    return sid;
}

void LifecycleProtocol::on_leave_publish(std::size_t sid) {
    ReleaseSession& s = world_.releases[sid];
    FarEdgeNode& veh = world_.vehicle(s.vehicle);

    Publication pub;
    pub.vehicle = s.vehicle;
    pub.location = veh.location;
    pub.kind = Publication::Kind::Leave;
    world_.broker.publish(pub);

    auto host_it = world_.vehicle_host.find(s.vehicle);
    if (host_it == world_.vehicle_host.end()) {
        ++world_.warnings;
        return;
    }
    const HostId h = host_it->second;

    // (2) leave notification toward the VIM
    ++s.messages;
    world_.net->send(LinkClass::BrokerToHost, "msg.leave_notify", "broker", vim_label(h),
                     rel_detail(s.id), [this, sid, h] { on_leave_notify(sid, h); });
}

void LifecycleProtocol::on_leave_notify(std::size_t sid, HostId h) {
    ReleaseSession& s = world_.releases[sid];
    s.phase = RelPhase::HostNotified;

    FarEdgeNode& veh = world_.vehicle(s.vehicle);
    MecHost& host = world_.host(h);
    host.pool_remove(s.vehicle);
    world_.vehicle_host.erase(s.vehicle);
    world_.sample_occupancy();
    s.phase = RelPhase::PoolUpdated;
    if (cfg_.context.hard_cutoff) {
        veh.reachable = false; // anything not yet in flight is lost
    }

    s.pending_migrations.assign(veh.hosted_apps.begin(), veh.hosted_apps.end());

    // (3) removal ack back to the broker
    ++s.messages;
    world_.net->send(LinkClass::BrokerToHost, "msg.release_ack", vim_label(h), "broker",
                     rel_detail(s.id), [this, sid] { on_release_ack(sid); });

    // Migrations fire only after the pool update.
    if (!s.pending_migrations.empty() && mobility_ != nullptr) {
        mobility_->on_departure(h, s.vehicle, s.pending_migrations);
    } else if (veh.hosted_apps.empty()) {
        veh.state = VehicleState::Departed;
        veh.allocated = {};
        veh.vi_allocated = {};
        veh.vi_apps.clear();
    }
}

void LifecycleProtocol::on_release_ack(std::size_t sid) {
    ReleaseSession& s = world_.releases[sid];
    s.phase = RelPhase::Acked;
    s.completed_at = world_.engine.now();
    s.release_time = world_.engine.now() - s.started_at;

    // (4) release confirmation to the (departing) vehicle
    ++s.messages;
    world_.net->send(LinkClass::VehicleToBroker, "msg.release_confirm", "broker",
                     vehicle_label(s.vehicle), rel_detail(s.id), nullptr);
}

void LifecycleProtocol::send_vi_command(HostId h, VehicleId v, ViCommand cmd,
                                        std::function<void(bool)> on_ack) {
    const std::string detail =
        std::string(to_string(cmd.kind)) + " app:" + std::to_string(cmd.app);
    const Duration radio_leg = world_.net->sample_detached(LinkClass::VehicleToBroker);
    world_.net->send(
        LinkClass::HostInternal, "msg.vi_command", vim_label(h), vehicle_label(v), detail,
        [this, h, v, cmd, on_ack = std::move(on_ack)] {
            const bool ok = apply_vi_command(world_.vehicle(v), cmd);
            const Duration back_leg = world_.net->sample_detached(LinkClass::VehicleToBroker);
            world_.net->send(LinkClass::HostInternal, "msg.vi_ack", vehicle_label(v), vim_label(h),
                             std::string(to_string(cmd.kind)) + (ok ? " ack" : " nack"),
                             [ok, on_ack] {
                                 if (on_ack) {
                                     on_ack(ok);
                                 }
                             },
                             back_leg);
        },
        radio_leg);
}

void LifecycleProtocol::send_local_vi_command(HostId h, std::string detail,
                                              std::function<void()> on_done) {
    world_.net->send(LinkClass::HostInternal, "msg.local_vi_command", vim_label(h), "local-vi",
                     detail, [this, h, detail, on_done = std::move(on_done)] {
                         world_.net->send(LinkClass::HostInternal, "msg.local_vi_ack", "local-vi",
                                          vim_label(h), detail, [on_done] {
                                              if (on_done) {
                                                  on_done();
                                              }
                                          });
                     });
}

bool LifecycleProtocol::apply_vi_command(FarEdgeNode& vehicle, const ViCommand& cmd) {
    switch (cmd.kind) {
    case ViCommand::Kind::Allocate: {
        if (vehicle.state != VehicleState::Registered) {
            return false;
        }
        if (vehicle.vi_apps.count(cmd.app) != 0) {
            return false;
        }
        const ResourceVector free = vehicle.capacity - vehicle.vi_allocated;
        if (!fits(cmd.demand, free)) {
            return false; // over-commit: a VIM accounting bug upstream
        }
        vehicle.vi_allocated += cmd.demand;
        vehicle.vi_apps[cmd.app] = cmd.demand;
        return true;
    }
    case ViCommand::Kind::Release: {
        if (vehicle.state != VehicleState::Registered &&
            vehicle.state != VehicleState::Departing) {
            return false;
        }
        auto it = vehicle.vi_apps.find(cmd.app);
        if (it == vehicle.vi_apps.end()) {
            return false;
        }
        vehicle.vi_allocated -= it->second;
        vehicle.vi_apps.erase(it);
        return true;
    }
    case ViCommand::Kind::PrepareMigration: {
        if (vehicle.state != VehicleState::Registered &&
            vehicle.state != VehicleState::Departing) {
            return false;
        }
        return vehicle.vi_apps.count(cmd.app) != 0;
    }
    }
    return false;
}

} // namespace vcsim
