#pragma once

#include "vcsim/entities.hpp"
#include "vcsim/residency.hpp"
#include "vcsim/resources.hpp"
#include "vcsim/time.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vcsim {

// Immutable view of a host's resources at decision time, vehicles in
// pool-insertion order.
struct PoolVehicle {
    VehicleId id = 0;
    ResourceVector free;
    SimTime join_time = 0;
    GeoPoint location;
    std::uint64_t insertion_seq = 0;
};

struct PoolSnapshot {
    std::vector<PoolVehicle> vehicles;
    ResourceVector local_free;
    SimTime snapshot_time = 0;
};

// Pluggable placement policy. Implementations must be deterministic given
// (snapshot, demand, now, internal state) and may only return a Remote
// vehicle the demand fits on. Returning None means no vehicle qualifies;
// the VIM then falls back to the local VI.
class Scheduler {
public:
    virtual ~Scheduler() = default;

    virtual std::string_view name() const = 0;
    virtual Placement decide(const PoolSnapshot& snapshot, const ResourceVector& demand,
                             SimTime now) = 0;
};

// First vehicle in pool-insertion order with sufficient free resources.
class BestFirstScheduler final : public Scheduler {
public:
    std::string_view name() const override { return "best-first"; }
    Placement decide(const PoolSnapshot& snapshot, const ResourceVector& demand,
                     SimTime now) override;
};

// Cycles through the pool in insertion order, resuming after the vehicle
// chosen by the previous call and skipping vehicles the demand does not fit.
class RoundRobinScheduler final : public Scheduler {
public:
    std::string_view name() const override { return "round-robin"; }
    Placement decide(const PoolSnapshot& snapshot, const ResourceVector& demand,
                     SimTime now) override;

private:
    std::optional<std::uint64_t> last_seq_;
};

// Residency-predictive policy: among fitting vehicles, picks the one with
// the highest predicted remaining residency. Ties break toward the earlier
// join time, then the lower vehicle id.
class ResidencyScheduler final : public Scheduler {
public:
    explicit ResidencyScheduler(ResidencyModel model) : model_(std::move(model)) {}

    std::string_view name() const override { return "residency"; }
    Placement decide(const PoolSnapshot& snapshot, const ResourceVector& demand,
                     SimTime now) override;

    const ResidencyModel& model() const { return model_; }

private:
    ResidencyModel model_;
};

// Factory for the names accepted on the CLI. The residency scheduler
// requires a model; passing nullptr for it is a ConfigError.
std::unique_ptr<Scheduler> make_scheduler(std::string_view name, const ResidencyModel* model);

} // namespace vcsim
