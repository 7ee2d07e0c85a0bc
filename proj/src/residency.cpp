#include "vcsim/residency.hpp"

#include <cmath>

namespace vcsim {

ResidencyModel::ResidencyModel(unsigned bin_minutes) : bin_minutes_(bin_minutes) {
    if (bin_minutes_ == 0 || (24u * 60u) % bin_minutes_ != 0) {
        throw ConfigError("bin_minutes must divide 24 hours");
    }
    bins_.resize((24u * 60u) / bin_minutes_);
}

std::size_t ResidencyModel::bin_of_day_seconds(std::int64_t seconds_of_day) const {
    const std::int64_t day = 24 * 3600;
    std::int64_t s = seconds_of_day % day;
    if (s < 0) {
        s += day;
    }
    return static_cast<std::size_t>(s / (static_cast<std::int64_t>(bin_minutes_) * 60));
}

std::size_t ResidencyModel::bin_of(SimTime t) const {
    return bin_of_day_seconds(static_cast<std::int64_t>(t / kMicrosPerSecond));
}

double ResidencyModel::global_mean_s() const {
    double weighted = 0.0;
    std::uint64_t total = 0;
    for (const auto& b : bins_) {
        weighted += b.mean_s * static_cast<double>(b.n);
        total += b.n;
    }
    if (total == 0) {
        return fallback_mean_s_;
    }
    return weighted / static_cast<double>(total);
}

double ResidencyModel::mean_for_bin(std::size_t i) const {
    const ResidencyBin& b = bins_.at(i);
    if (b.n == 0) {
        return global_mean_s();
    }
    return b.mean_s;
}

nlohmann::json ResidencyModel::to_json() const {
    nlohmann::json bins = nlohmann::json::array();
    for (const auto& b : bins_) {
        bins.push_back({{"mean_s", b.mean_s}, {"std_s", b.std_s}, {"n", b.n}});
    }
    return {{"bin_minutes", bin_minutes_}, {"bins", bins}};
}

ResidencyModel ResidencyModel::from_json(const nlohmann::json& j) {
    ResidencyModel model(j.at("bin_minutes").get<unsigned>());
    const auto& bins = j.at("bins");
    if (bins.size() != model.bin_count()) {
        throw ConfigError("residency model has wrong bin count");
    }
    for (std::size_t i = 0; i < bins.size(); ++i) {
        model.bins_[i].mean_s = bins[i].at("mean_s").get<double>();
        model.bins_[i].std_s = bins[i].at("std_s").get<double>();
        model.bins_[i].n = bins[i].at("n").get<std::uint64_t>();
    }
    return model;
}

Duration predict_remaining(const ResidencyModel& model, SimTime join_time, SimTime now) {
    const double mean_us = model.mean_for_bin(model.bin_of(join_time)) * 1e6;
    const double elapsed_us = static_cast<double>(now - join_time);
    const double remaining = mean_us - elapsed_us;
    if (remaining <= 0.0) {
        return 0;
    }
    return static_cast<Duration>(std::llround(remaining));
}

ResidencyModel build_residency_model(const ParkingTrace& trace, unsigned bin_minutes,
                                     std::size_t* skipped) {
    ResidencyModel model(bin_minutes);
    std::vector<double> sum(model.bin_count(), 0.0);
    std::vector<double> sum_sq(model.bin_count(), 0.0);
    std::vector<std::uint64_t> count(model.bin_count(), 0);
    std::size_t bad = 0;

    for (const auto& row : trace) {
        if (row.exit_s < row.entry_s) {
            ++bad;
            continue;
        }
        const std::size_t b = model.bin_of_day_seconds(row.entry_s);
        const double stay = static_cast<double>(row.exit_s - row.entry_s);
        sum[b] += stay;
        sum_sq[b] += stay * stay;
        ++count[b];
    }

    for (std::size_t b = 0; b < model.bin_count(); ++b) {
        if (count[b] == 0) {
            continue;
        }
        const double n = static_cast<double>(count[b]);
        const double mean = sum[b] / n;
        const double var = std::max(0.0, sum_sq[b] / n - mean * mean);
        model.bin(b) = {mean, std::sqrt(var), count[b]};
    }
    if (skipped != nullptr) {
        *skipped = bad;
    }
    return model;
}

} // namespace vcsim
