#pragma once

#include "vcsim/geometry.hpp"
#include "vcsim/residency.hpp"
#include "vcsim/resources.hpp"
#include "vcsim/rng.hpp"
#include "vcsim/time.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vcsim {

// Events-per-hour rates for one process, one entry per hour of day.
using HourlyProfile = std::array<double, 24>;

// Duration distribution driven by scenario config.
struct DurationDist {
    enum class Kind { Fixed, Normal, Exponential };

    Kind kind = Kind::Fixed;
    double mean_s = 1800.0;
    double std_s = 0.0;   // Normal only
    double min_s = 60.0;  // draws are clamped here

    double sample_s(Rng& rng) const;

    bool operator==(const DurationDist&) const = default;
};

// Resource vector distribution (vehicle capacities, app demands).
struct VectorDist {
    enum class Kind { Fixed, UniformInt };

    Kind kind = Kind::Fixed;
    ResourceVector fixed; // Fixed: the value; UniformInt: inclusive low bound
    ResourceVector hi;    // UniformInt: inclusive high bound

    ResourceVector sample(Rng& rng) const;

    bool operator==(const VectorDist&) const = default;
};

struct VehicleArrival {
    SimTime arrival = 0;
    Duration residency = 0;
    ResourceVector capacity;
    GeoPoint location;
};

struct UeArrival {
    SimTime arrival = 0;
    Duration session = 0;
};

// Piecewise-homogeneous Poisson arrivals: within each hour the rate is
// constant at profile[hour % 24]. Returns sorted times < horizon.
std::vector<SimTime> poisson_arrivals(const HourlyProfile& profile, double horizon_hours,
                                      Rng& rng);

// Vehicle arrivals with residency drawn from the arrival bin's Gaussian
// (clamped at min_residency) and locations uniform in the AoI disk.
std::vector<VehicleArrival> gen_vehicle_process(const HourlyProfile& profile,
                                                const ResidencyModel& residency,
                                                const VectorDist& capacity,
                                                const AreaOfInterest& area,
                                                Duration min_residency, double horizon_hours,
                                                Rng& rng);

// User arrivals; each one later turns into exactly one instantiation request.
std::vector<UeArrival> gen_user_process(const HourlyProfile& profile,
                                        const DurationDist& session, double horizon_hours,
                                        Rng& rng);

struct CsvStats {
    std::size_t rows = 0;
    std::size_t skipped = 0;
};

// CSV with header `entry_time,exit_time`, ISO-8601 local timestamps.
// Malformed rows are skipped and counted; more than 50% malformed is fatal.
ParkingTrace ingest_parking_csv(const std::string& path, CsvStats* stats = nullptr);

void write_parking_csv(const std::string& path, const ParkingTrace& trace);

// CSV with header `hour,avg_sessions` (0-23; missing hours stay 0).
HourlyProfile ingest_user_csv(const std::string& path, CsvStats* stats = nullptr);

// Hourly arrival rates averaged across the days the trace spans, plus the
// per-bin residency statistics.
std::pair<HourlyProfile, ResidencyModel> derive_profiles(const ParkingTrace& trace,
                                                         unsigned bin_minutes = 10);

// Synthetic multi-day parking trace drawn from a profile and residency
// model; feeds the preprocess round-trip path and `gen-traces`.
ParkingTrace gen_parking_trace(const HourlyProfile& profile, const ResidencyModel& residency,
                               unsigned days, Duration min_residency, Rng& rng);

// ISO-8601 "YYYY-MM-DDTHH:MM:SS" to seconds on the trace's absolute axis.
std::optional<std::int64_t> parse_iso8601(const std::string& text);
std::string format_iso8601(std::int64_t seconds);

} // namespace vcsim
