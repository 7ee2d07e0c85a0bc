#pragma once

#include "vcsim/errors.hpp"
#include "vcsim/time.hpp"

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace vcsim {

// One parking interval, in seconds on a shared absolute axis (any epoch
// works; only day/time-of-day structure matters).
struct ParkingInterval {
    std::int64_t entry_s = 0;
    std::int64_t exit_s = 0;
};

using ParkingTrace = std::vector<ParkingInterval>;

struct ResidencyBin {
    double mean_s = 0.0;
    double std_s = 0.0;
    std::uint64_t n = 0;
};

// Per-time-of-day-bin Gaussian statistics of parking residency, the custom
// scheduler's predictor. Bins with no samples fall back to the global mean.
class ResidencyModel {
public:
    static constexpr unsigned kDefaultBinMinutes = 10;

    explicit ResidencyModel(unsigned bin_minutes = kDefaultBinMinutes);

    unsigned bin_minutes() const { return bin_minutes_; }
    std::size_t bin_count() const { return bins_.size(); }

    const ResidencyBin& bin(std::size_t i) const { return bins_.at(i); }
    ResidencyBin& bin(std::size_t i) { return bins_.at(i); }

    std::size_t bin_of_day_seconds(std::int64_t seconds_of_day) const;
    std::size_t bin_of(SimTime t) const; // simulations start at midnight

    // Sample-count-weighted mean over all bins; fallback_mean_s when the
    // whole model is empty.
    double global_mean_s() const;

    // Bin mean, or the global mean for empty bins.
    double mean_for_bin(std::size_t i) const;

    void set_fallback_mean_s(double v) { fallback_mean_s_ = v; }
    double fallback_mean_s() const { return fallback_mean_s_; }

    nlohmann::json to_json() const;
    static ResidencyModel from_json(const nlohmann::json& j);

    bool operator==(const ResidencyModel&) const = default;

private:
    unsigned bin_minutes_;
    std::vector<ResidencyBin> bins_;
    double fallback_mean_s_ = 3600.0;
};

// Predicted time this vehicle will stay in the pool: the mean residency of
// its join-time bin minus the time already elapsed, clamped at zero.
Duration predict_remaining(const ResidencyModel& model, SimTime join_time, SimTime now);

// Groups trace rows by entry-time-of-day bin and computes per-bin mean and
// population standard deviation of (exit - entry). Rows with exit < entry
// are skipped; the skip count is reported through `skipped` when non-null.
ResidencyModel build_residency_model(const ParkingTrace& trace,
                                     unsigned bin_minutes = ResidencyModel::kDefaultBinMinutes,
                                     std::size_t* skipped = nullptr);

} // namespace vcsim
