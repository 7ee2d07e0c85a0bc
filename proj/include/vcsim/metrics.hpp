#pragma once

#include "vcsim/engine.hpp"
#include "vcsim/sessions.hpp"
#include "vcsim/time.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace vcsim {

struct OccupancySample {
    SimTime time_us = 0;
    std::uint64_t pool_size = 0;
};

// Everything one run produces. Serialized to metrics.json losslessly.
struct RunMetrics {
    std::uint64_t seed = 0;
    double horizon_hours = 0.0;
    std::string scheduler;

    std::vector<Duration> join_times_us;
    std::vector<Duration> release_times_us;
    std::vector<Duration> allocation_delays_us;
    std::vector<Duration> service_gaps_us;
    std::array<std::uint64_t, 24> migrations_per_hour{};
    std::uint64_t rejected_requests = 0;
    std::uint64_t completed_requests = 0;
    std::uint64_t cancelled_migrations = 0;
    std::vector<OccupancySample> occupancy;

    std::vector<AcquisitionSession> acquisitions;
    std::vector<ReleaseSession> releases;
    std::vector<InstantiationRequest> requests;
    std::vector<MigrationEvent> migrations;

    nlohmann::json to_json() const;
    static RunMetrics from_json(const nlohmann::json& j);
};

struct Stats {
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::uint64_t n = 0;
};

Stats compute_stats(const std::vector<double>& values);

// Cross-seed aggregation: per-metric stats over per-run means, plus per-hour
// migration means with a 95% confidence band.
struct SummaryStats {
    std::uint64_t runs = 0;
    std::map<std::string, Stats> metrics;
    std::array<double, 24> migrations_per_hour_mean{};
    std::array<double, 24> migrations_per_hour_ci95{};

    nlohmann::json to_json() const;
};

SummaryStats aggregate(const std::vector<RunMetrics>& runs);

// Counts migration events triggered within each simulated hour of day.
std::array<std::uint64_t, 24> migrations_per_hour(const std::vector<MigrationEvent>& log);

void write_metrics_json(const std::string& path, const RunMetrics& rm);
RunMetrics read_metrics_json(const std::string& path);

// hour,count
void write_migrations_csv(const std::string& path, const RunMetrics& rm);
// app_id,vehicle_id,triggered_us,completed_us,context_bytes,outcome
void write_migration_log_csv(const std::string& path, const RunMetrics& rm);
// time_us,seq,kind,source,target,detail
void write_events_csv(const std::string& path, const std::vector<TraceRow>& trace);

} // namespace vcsim
