#include "vcsim/workload.hpp"

#include "vcsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace vcsim {
namespace {

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int yr = static_cast<int>(yoe) + static_cast<int>(era) * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = yr + (m <= 2);
}

double clamp_min(double v, double lo) { return v < lo ? lo : v; }

} // namespace

double DurationDist::sample_s(Rng& rng) const {
    double v = mean_s;
    switch (kind) {
    case Kind::Fixed:
        v = mean_s;
        break;
    case Kind::Normal:
        v = rng.normal(mean_s, std_s);
        break;
    case Kind::Exponential:
        v = rng.exponential(1.0 / mean_s);
        break;
    }
    return clamp_min(v, min_s);
}

ResourceVector VectorDist::sample(Rng& rng) const {
    if (kind == Kind::Fixed) {
        return fixed;
    }
    auto draw = [&rng](std::int64_t lo, std::int64_t hi_v) {
        if (hi_v <= lo) {
            return lo;
        }
        const auto span = static_cast<std::uint64_t>(hi_v - lo + 1);
        return lo + static_cast<std::int64_t>(rng.next_u64() % span);
    };
    return {draw(fixed.cpu_units, hi.cpu_units), draw(fixed.ram_mb, hi.ram_mb),
            draw(fixed.storage_mb, hi.storage_mb)};
}

std::vector<SimTime> poisson_arrivals(const HourlyProfile& profile, double horizon_hours,
                                      Rng& rng) {
    std::vector<SimTime> out;
    const double horizon_s = horizon_hours * 3600.0;
    const unsigned total_hours = static_cast<unsigned>(std::ceil(horizon_hours));
    for (unsigned h = 0; h < total_hours; ++h) {
        const double rate_per_s = profile[h % 24] / 3600.0;
        if (rate_per_s <= 0.0) {
            continue;
        }
        double t = 0.0; // seconds into this hour
        for (;;) {
            t += rng.exponential(rate_per_s);
            if (t >= 3600.0) {
                break;
            }
            const double abs_s = h * 3600.0 + t;
            if (abs_s >= horizon_s) {
                break;
            }
            out.push_back(static_cast<SimTime>(abs_s * 1e6));
        }
    }
    return out;
}

std::vector<VehicleArrival> gen_vehicle_process(const HourlyProfile& profile,
                                                const ResidencyModel& residency,
                                                const VectorDist& capacity,
                                                const AreaOfInterest& area,
                                                Duration min_residency, double horizon_hours,
                                                Rng& rng) {
    std::vector<VehicleArrival> out;
    for (SimTime at : poisson_arrivals(profile, horizon_hours, rng)) {
        VehicleArrival v;
        v.arrival = at;
        const std::size_t bin = residency.bin_of(at);
        const double mean = residency.mean_for_bin(bin);
        const double std_s = residency.bin(bin).n > 0 ? residency.bin(bin).std_s : 0.0;
        const double stay_s = clamp_min(rng.normal(mean, std_s),
                                        static_cast<double>(min_residency) / 1e6);
        v.residency = static_cast<Duration>(stay_s * 1e6);
        v.capacity = capacity.sample(rng);
        // Uniform over the disk.
        const double r = area.radius_m * std::sqrt(rng.uniform01());
        const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        v.location = {area.center.x + r * std::cos(theta), area.center.y + r * std::sin(theta)};
        out.push_back(v);
    }
    return out;
}

std::vector<UeArrival> gen_user_process(const HourlyProfile& profile, const DurationDist& session,
                                        double horizon_hours, Rng& rng) {
    std::vector<UeArrival> out;
    for (SimTime at : poisson_arrivals(profile, horizon_hours, rng)) {
        UeArrival u;
        u.arrival = at;
        u.session = static_cast<Duration>(session.sample_s(rng) * 1e6);
        out.push_back(u);
    }
    return out;
}

std::optional<std::int64_t> parse_iso8601(const std::string& text) {
    int y = 0, hh = 0, mm = 0, ss = 0;
    unsigned mo = 0, dd = 0;
    if (std::sscanf(text.c_str(), "%d-%u-%uT%d:%d:%d", &y, &mo, &dd, &hh, &mm, &ss) != 6) {
        return std::nullopt;
    }
    if (mo < 1 || mo > 12 || dd < 1 || dd > 31 || hh < 0 || hh > 23 || mm < 0 || mm > 59 ||
        ss < 0 || ss > 60) {
        return std::nullopt;
    }
    return days_from_civil(y, mo, dd) * 86400 + hh * 3600 + mm * 60 + ss;
}

std::string format_iso8601(std::int64_t seconds) {
    std::int64_t days = seconds / 86400;
    std::int64_t rem = seconds % 86400;
    if (rem < 0) {
        rem += 86400;
        --days;
    }
    int y = 0;
    unsigned mo = 0, dd = 0;
    civil_from_days(days, y, mo, dd);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lld", y, mo, dd,
                  static_cast<long long>(rem / 3600), static_cast<long long>((rem % 3600) / 60),
                  static_cast<long long>(rem % 60));
    return buf;
}

ParkingTrace ingest_parking_csv(const std::string& path, CsvStats* stats) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open parking trace: " + path);
    }
    ParkingTrace trace;
    CsvStats local;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (first) {
            first = false;
            if (line.rfind("entry_time", 0) == 0) {
                continue; // header
            }
        }
        ++local.rows;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            ++local.skipped;
            continue;
        }
        const auto entry = parse_iso8601(line.substr(0, comma));
        const auto exit = parse_iso8601(line.substr(comma + 1));
        if (!entry || !exit || *exit < *entry) {
            ++local.skipped;
            continue;
        }
        trace.push_back({*entry, *exit});
    }
    if (local.rows > 0 && local.skipped * 2 > local.rows) {
        throw ConfigError("more than 50% malformed rows in " + path);
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return trace;
}

void write_parking_csv(const std::string& path, const ParkingTrace& trace) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write parking trace: " + path);
    }
    out << "entry_time,exit_time\n";
    for (const auto& row : trace) {
        out << format_iso8601(row.entry_s) << ',' << format_iso8601(row.exit_s) << '\n';
    }
}

HourlyProfile ingest_user_csv(const std::string& path, CsvStats* stats) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open user activity file: " + path);
    }
    HourlyProfile profile{};
    CsvStats local;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (first) {
            first = false;
            if (line.rfind("hour", 0) == 0) {
                continue;
            }
        }
        ++local.rows;
        int hour = -1;
        double rate = 0.0;
        if (std::sscanf(line.c_str(), "%d,%lf", &hour, &rate) != 2 || hour < 0 || hour > 23 ||
            rate < 0.0) {
            ++local.skipped;
            continue;
        }
        profile[static_cast<std::size_t>(hour)] = rate;
    }
    if (local.rows > 0 && local.skipped * 2 > local.rows) {
        throw ConfigError("more than 50% malformed rows in " + path);
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return profile;
}

std::pair<HourlyProfile, ResidencyModel> derive_profiles(const ParkingTrace& trace,
                                                         unsigned bin_minutes) {
    if (trace.empty()) {
        throw ConfigError("cannot derive profiles from an empty trace");
    }
    std::int64_t first_day = trace.front().entry_s / 86400;
    std::int64_t last_day = first_day;
    for (const auto& row : trace) {
        first_day = std::min(first_day, row.entry_s / 86400);
        last_day = std::max(last_day, row.entry_s / 86400);
    }
    const double days = static_cast<double>(last_day - first_day + 1);

    HourlyProfile profile{};
    for (const auto& row : trace) {
        std::int64_t sod = row.entry_s % 86400;
        if (sod < 0) {
            sod += 86400;
        }
        profile[static_cast<std::size_t>(sod / 3600)] += 1.0;
    }
    for (auto& rate : profile) {
        rate /= days;
    }
    return {profile, build_residency_model(trace, bin_minutes)};
}

ParkingTrace gen_parking_trace(const HourlyProfile& profile, const ResidencyModel& residency,
                               unsigned days, Duration min_residency, Rng& rng) {
    ParkingTrace trace;
    const double min_s = static_cast<double>(min_residency) / 1e6;
    for (SimTime at : poisson_arrivals(profile, days * 24.0, rng)) {
        const std::int64_t entry = static_cast<std::int64_t>(at / kMicrosPerSecond);
        const std::size_t bin = residency.bin_of(at);
        const double mean = residency.mean_for_bin(bin);
        const double std_s = residency.bin(bin).n > 0 ? residency.bin(bin).std_s : 0.0;
        const double stay = clamp_min(rng.normal(mean, std_s), min_s);
        trace.push_back({entry, entry + static_cast<std::int64_t>(std::llround(stay))});
    }
    return trace;
}

} // namespace vcsim
