#include "vcsim/scheduling.hpp"

#include "vcsim/errors.hpp"

#include <algorithm>
#include <string>

namespace vcsim {

Placement BestFirstScheduler::decide(const PoolSnapshot& snapshot, const ResourceVector& demand,
                                     SimTime) {
    for (const auto& v : snapshot.vehicles) {
        if (fits(demand, v.free)) {
            return Placement::remote(v.id);
        }
    }
    return Placement::none();
}

Placement RoundRobinScheduler::decide(const PoolSnapshot& snapshot, const ResourceVector& demand,
                                      SimTime) {
    const auto& pool = snapshot.vehicles;
    if (pool.empty()) {
        return Placement::none();
    }

    // Start just past the previously assigned vehicle in insertion order.
    std::size_t start = 0;
    if (last_seq_) {
        while (start < pool.size() && pool[start].insertion_seq <= *last_seq_) {
            ++start;
        }
    }

    for (std::size_t k = 0; k < pool.size(); ++k) {
        const auto& v = pool[(start + k) % pool.size()];
        if (fits(demand, v.free)) {
            last_seq_ = v.insertion_seq;
            return Placement::remote(v.id);
        }
    }
    return Placement::none();
}

Placement ResidencyScheduler::decide(const PoolSnapshot& snapshot, const ResourceVector& demand,
                                     SimTime now) {
    const PoolVehicle* best = nullptr;
    Duration best_remaining = 0;
    for (const auto& v : snapshot.vehicles) {
        if (!fits(demand, v.free)) {
            continue;
        }
        const Duration remaining = predict_remaining(model_, v.join_time, now);
        if (best == nullptr || remaining > best_remaining ||
            (remaining == best_remaining &&
             (v.join_time < best->join_time ||
              (v.join_time == best->join_time && v.id < best->id)))) {
            best = &v;
            best_remaining = remaining;
        }
    }
    if (best == nullptr) {
        return Placement::none();
    }
    return Placement::remote(best->id);
}

std::unique_ptr<Scheduler> make_scheduler(std::string_view name, const ResidencyModel* model) {
    if (name == "best-first") {
        return std::make_unique<BestFirstScheduler>();
    }
    if (name == "round-robin") {
        return std::make_unique<RoundRobinScheduler>();
    }
    if (name == "residency") {
        if (model == nullptr) {
            throw ConfigError("residency scheduler requires a residency model");
        }
        return std::make_unique<ResidencyScheduler>(*model);
    }
    throw ConfigError("unknown scheduler: " + std::string(name));
}

} // namespace vcsim
