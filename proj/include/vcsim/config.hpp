#pragma once

#include "vcsim/entities.hpp"
#include "vcsim/geometry.hpp"
#include "vcsim/latency.hpp"
#include "vcsim/residency.hpp"
#include "vcsim/resources.hpp"
#include "vcsim/workload.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace vcsim {

struct HostConfig {
    AreaOfInterest aoi{{0.0, 0.0}, 300.0};
    int reward_offer = 10;
    // Effectively infinite by default so migrations always have a landing
    // zone; stress tests shrink it.
    ResourceVector local_capacity{1'000'000, 1'000'000'000, 1'000'000'000};

    bool operator==(const HostConfig&) const = default;
};

// Deterministic burst workload for protocol experiments: N vehicles join at
// one instant, requests arrive in one batch, residencies stagger uniformly.
struct BurstWorkload {
    std::size_t vehicle_count = 0;
    double vehicles_at_s = 0.0;
    double residency_min_s = 3600.0;
    double residency_max_s = 7200.0;
    std::size_t request_count = 0;
    double requests_at_s = 60.0;

    bool operator==(const BurstWorkload&) const = default;
};

struct WorkloadConfig {
    enum class Mode { Poisson, Burst };

    Mode mode = Mode::Poisson;
    HourlyProfile vehicle_profile{};
    HourlyProfile user_profile{};
    double user_rate_scale = 1.0;
    BurstWorkload burst;

    bool operator==(const WorkloadConfig&) const = default;
};

struct ContextTransferConfig {
    double rate_mbit_s = 100.0;
    std::uint64_t bytes = 1u << 20; // user context size per app
    bool hard_cutoff = false;       // departed vehicles drop unstarted transfers

    bool operator==(const ContextTransferConfig&) const = default;
};

// Everything a run needs. Round-trips losslessly through JSON.
struct ScenarioConfig {
    double horizon_hours = 24.0;
    std::uint64_t seed = 1;
    LatencyModel latency;
    HostConfig host;
    std::vector<HostConfig> additional_hosts;
    VectorDist vehicle_capacity{VectorDist::Kind::Fixed, {4, 2048, 1000}, {}};
    VectorDist app_demand{VectorDist::Kind::Fixed, {1, 256, 100}, {}};
    DurationDist session_duration{DurationDist::Kind::Normal, 1800.0, 600.0, 60.0};
    double min_residency_s = 60.0;
    ContextTransferConfig context;
    std::string scheduler = "round-robin";
    bool vehicle_accept_rewards = true;
    WorkloadConfig workload;
    std::string residency_model_file; // resolved against base_dir when relative
    std::optional<ResidencyModel> residency_model;

    // Directory of the file this config was loaded from; not serialized.
    std::string base_dir;

    nlohmann::json to_json() const;
    static ScenarioConfig from_json(const nlohmann::json& j);

    // Loads the inline model, the referenced file, or a flat 3600 s default.
    ResidencyModel resolve_residency_model() const;
};

ScenarioConfig load_config(const std::string& path);
void save_config(const std::string& path, const ScenarioConfig& cfg);

// Shared JSON helpers for the CLI and tests.
nlohmann::json resource_vector_to_json(const ResourceVector& v);
ResourceVector resource_vector_from_json(const nlohmann::json& j);

} // namespace vcsim
