#include "vcsim/metrics.hpp"

#include "vcsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

namespace vcsim {
namespace {

using nlohmann::json;

json durations_to_json(const std::vector<Duration>& v) {
    json arr = json::array();
    for (Duration d : v) {
        arr.push_back(d);
    }
    return arr;
}

std::vector<Duration> durations_from_json(const json& j) {
    std::vector<Duration> v;
    for (const auto& x : j) {
        v.push_back(x.get<Duration>());
    }
    return v;
}

json acq_to_json(const AcquisitionSession& s) {
    json j{{"id", s.id},
           {"vehicle", s.vehicle},
           {"phase", std::string(to_string(s.phase))},
           {"started_us", s.started_at},
           {"messages", s.messages}};
    if (s.completed_at) {
        j["completed_us"] = *s.completed_at;
    }
    if (s.join_time) {
        j["join_time_us"] = *s.join_time;
    }
    return j;
}

json rel_to_json(const ReleaseSession& s) {
    json j{{"id", s.id},
           {"vehicle", s.vehicle},
           {"phase", std::string(to_string(s.phase))},
           {"started_us", s.started_at},
           {"messages", s.messages},
           {"pending_migrations", s.pending_migrations}};
    if (s.completed_at) {
        j["completed_us"] = *s.completed_at;
    }
    if (s.release_time) {
        j["release_time_us"] = *s.release_time;
    }
    return j;
}

json req_to_json(const InstantiationRequest& r) {
    json j{{"id", r.id},
           {"ue", r.ue},
           {"app", r.app},
           {"issued_us", r.issued_at},
           {"phase", std::string(to_string(r.phase))},
           {"host", r.host}};
    if (r.allocation_delay) {
        j["allocation_delay_us"] = *r.allocation_delay;
    }
    if (r.completed_at) {
        j["completed_us"] = *r.completed_at;
    }
    return j;
}

json mig_to_json(const MigrationEvent& m) {
    json j{{"id", m.id},
           {"app", m.app},
           {"vehicle", m.source_vehicle},
           {"triggered_us", m.triggered_at},
           {"context_bytes", m.context_bytes},
           {"outcome", std::string(to_string(m.outcome))}};
    if (m.completed_at) {
        j["completed_us"] = *m.completed_at;
    }
    if (m.service_gap) {
        j["service_gap_us"] = *m.service_gap;
    }
    return j;
}

AcqPhase acq_phase_from_string(const std::string& s) {
    for (auto p : {AcqPhase::RewardRequested, AcqPhase::RewardOffered, AcqPhase::Published,
                   AcqPhase::HostNotified, AcqPhase::HostAcked, AcqPhase::Confirmed,
                   AcqPhase::Aborted}) {
        if (to_string(p) == s) {
            return p;
        }
    }
    throw ConfigError("bad acquisition phase: " + s);
}

RelPhase rel_phase_from_string(const std::string& s) {
    for (auto p :
         {RelPhase::LeavePublished, RelPhase::HostNotified, RelPhase::PoolUpdated, RelPhase::Acked}) {
        if (to_string(p) == s) {
            return p;
        }
    }
    throw ConfigError("bad release phase: " + s);
}

ReqPhase req_phase_from_string(const std::string& s) {
    for (auto p : {ReqPhase::AtUalcmp, ReqPhase::AtOrchestrator, ReqPhase::Discovery,
                   ReqPhase::HostSelected, ReqPhase::AtVim, ReqPhase::Scheduled,
                   ReqPhase::ViAllocating, ReqPhase::Completed, ReqPhase::Rejected}) {
        if (to_string(p) == s) {
            return p;
        }
    }
    throw ConfigError("bad request phase: " + s);
}

MigrationEvent::Outcome outcome_from_string(const std::string& s) {
    for (auto o : {MigrationEvent::Outcome::Pending, MigrationEvent::Outcome::Completed,
                   MigrationEvent::Outcome::Cancelled}) {
        if (to_string(o) == s) {
            return o;
        }
    }
    throw ConfigError("bad migration outcome: " + s);
}

} // namespace

json RunMetrics::to_json() const {
    json occ = json::array();
    for (const auto& s : occupancy) {
        occ.push_back({{"time_us", s.time_us}, {"pool_size", s.pool_size}});
    }
    json acq = json::array();
    for (const auto& s : acquisitions) {
        acq.push_back(acq_to_json(s));
    }
    json rel = json::array();
    for (const auto& s : releases) {
        rel.push_back(rel_to_json(s));
    }
    json reqs = json::array();
    for (const auto& r : requests) {
        reqs.push_back(req_to_json(r));
    }
    json migs = json::array();
    for (const auto& m : migrations) {
        migs.push_back(mig_to_json(m));
    }
    json mph = json::array();
    for (auto c : migrations_per_hour) {
        mph.push_back(c);
    }
    return {{"seed", seed},
            {"horizon_hours", horizon_hours},
            {"scheduler", scheduler},
            {"join_times_us", durations_to_json(join_times_us)},
            {"release_times_us", durations_to_json(release_times_us)},
            {"allocation_delays_us", durations_to_json(allocation_delays_us)},
            {"service_gaps_us", durations_to_json(service_gaps_us)},
            {"migrations_per_hour", mph},
            {"rejected_requests", rejected_requests},
            {"completed_requests", completed_requests},
            {"cancelled_migrations", cancelled_migrations},
            {"occupancy", occ},
            {"acquisitions", acq},
            {"releases", rel},
            {"requests", reqs},
            {"migrations", migs}};
}

RunMetrics RunMetrics::from_json(const json& j) {
    RunMetrics rm;
    rm.seed = j.at("seed").get<std::uint64_t>();
    rm.horizon_hours = j.at("horizon_hours").get<double>();
    rm.scheduler = j.at("scheduler").get<std::string>();
    rm.join_times_us = durations_from_json(j.at("join_times_us"));
    rm.release_times_us = durations_from_json(j.at("release_times_us"));
    rm.allocation_delays_us = durations_from_json(j.at("allocation_delays_us"));
    rm.service_gaps_us = durations_from_json(j.at("service_gaps_us"));
    const auto& mph = j.at("migrations_per_hour");
    for (std::size_t h = 0; h < 24; ++h) {
        rm.migrations_per_hour[h] = mph.at(h).get<std::uint64_t>();
    }
    rm.rejected_requests = j.at("rejected_requests").get<std::uint64_t>();
    rm.completed_requests = j.at("completed_requests").get<std::uint64_t>();
    rm.cancelled_migrations = j.at("cancelled_migrations").get<std::uint64_t>();
    for (const auto& s : j.at("occupancy")) {
        rm.occupancy.push_back(
            {s.at("time_us").get<SimTime>(), s.at("pool_size").get<std::uint64_t>()});
    }
    for (const auto& s : j.at("acquisitions")) {
        AcquisitionSession a;
        a.id = s.at("id").get<std::uint64_t>();
        a.vehicle = s.at("vehicle").get<VehicleId>();
        a.phase = acq_phase_from_string(s.at("phase").get<std::string>());
        a.started_at = s.at("started_us").get<SimTime>();
        a.messages = s.at("messages").get<unsigned>();
        if (s.contains("completed_us")) {
            a.completed_at = s.at("completed_us").get<SimTime>();
        }
        if (s.contains("join_time_us")) {
            a.join_time = s.at("join_time_us").get<Duration>();
        }
        rm.acquisitions.push_back(a);
    }
    for (const auto& s : j.at("releases")) {
        ReleaseSession r;
        r.id = s.at("id").get<std::uint64_t>();
        r.vehicle = s.at("vehicle").get<VehicleId>();
        r.phase = rel_phase_from_string(s.at("phase").get<std::string>());
        r.started_at = s.at("started_us").get<SimTime>();
        r.messages = s.at("messages").get<unsigned>();
        r.pending_migrations = s.at("pending_migrations").get<std::vector<AppId>>();
        if (s.contains("completed_us")) {
            r.completed_at = s.at("completed_us").get<SimTime>();
        }
        if (s.contains("release_time_us")) {
            r.release_time = s.at("release_time_us").get<Duration>();
        }
        rm.releases.push_back(r);
    }
    for (const auto& s : j.at("requests")) {
        InstantiationRequest r;
        r.id = s.at("id").get<RequestId>();
        r.ue = s.at("ue").get<UeId>();
        r.app = s.at("app").get<AppId>();
        r.issued_at = s.at("issued_us").get<SimTime>();
        r.phase = req_phase_from_string(s.at("phase").get<std::string>());
        r.host = s.at("host").get<HostId>();
        if (s.contains("allocation_delay_us")) {
            r.allocation_delay = s.at("allocation_delay_us").get<Duration>();
        }
        if (s.contains("completed_us")) {
            r.completed_at = s.at("completed_us").get<SimTime>();
        }
        rm.requests.push_back(r);
    }
    for (const auto& s : j.at("migrations")) {
        MigrationEvent m;
        m.id = s.at("id").get<std::uint64_t>();
        m.app = s.at("app").get<AppId>();
        m.source_vehicle = s.at("vehicle").get<VehicleId>();
        m.triggered_at = s.at("triggered_us").get<SimTime>();
        m.context_bytes = s.at("context_bytes").get<std::uint64_t>();
        m.outcome = outcome_from_string(s.at("outcome").get<std::string>());
        if (s.contains("completed_us")) {
            m.completed_at = s.at("completed_us").get<SimTime>();
        }
        if (s.contains("service_gap_us")) {
            m.service_gap = s.at("service_gap_us").get<Duration>();
        }
        rm.migrations.push_back(m);
    }
    return rm;
}

Stats compute_stats(const std::vector<double>& values) {
    Stats s;
    s.n = values.size();
    if (values.empty()) {
        return s;
    }
    double sum = 0.0;
    s.min = values.front();
    s.max = values.front();
    for (double v : values) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) {
        sq += (v - s.mean) * (v - s.mean);
    }
    s.stddev = std::sqrt(sq / static_cast<double>(values.size()));
    return s;
}

json SummaryStats::to_json() const {
    json metrics_j;
    for (const auto& [name, s] : metrics) {
        metrics_j[name] = {{"mean", s.mean}, {"std", s.stddev}, {"min", s.min},
                           {"max", s.max},  {"n", s.n}};
    }
    json mph = json::array();
    json ci = json::array();
    for (std::size_t h = 0; h < 24; ++h) {
        mph.push_back(migrations_per_hour_mean[h]);
        ci.push_back(migrations_per_hour_ci95[h]);
    }
    return {{"runs", runs},
            {"metrics", metrics_j},
            {"migrations_per_hour_mean", mph},
            {"migrations_per_hour_ci95", ci}};
}

SummaryStats aggregate(const std::vector<RunMetrics>& runs) {
    if (runs.empty()) {
        throw ConfigError("aggregate requires at least one run");
    }
    SummaryStats out;
    out.runs = runs.size();

    auto add_metric = [&out](const std::string& name,
                             auto project) {
        std::vector<double> per_run;
        for (const auto& value : project()) {
            per_run.push_back(value);
        }
        out.metrics[name] = compute_stats(per_run);
    };

    auto mean_of = [](const std::vector<Duration>& v) {
        if (v.empty()) {
            return 0.0;
        }
        double sum = 0.0;
        for (Duration d : v) {
            sum += static_cast<double>(d);
        }
        return sum / static_cast<double>(v.size());
    };

    add_metric("join_time_us", [&] {
        std::vector<double> v;
        for (const auto& r : runs) {
            v.push_back(mean_of(r.join_times_us));
        }
        return v;
    });
    add_metric("release_time_us", [&] {
        std::vector<double> v;
        for (const auto& r : runs) {
            v.push_back(mean_of(r.release_times_us));
        }
        return v;
    });
    add_metric("allocation_delay_us", [&] {
        std::vector<double> v;
        for (const auto& r : runs) {
            v.push_back(mean_of(r.allocation_delays_us));
        }
        return v;
    });
    add_metric("service_gap_us", [&] {
        std::vector<double> v;
        for (const auto& r : runs) {
            v.push_back(mean_of(r.service_gaps_us));
        }
        return v;
    });
    add_metric("total_migrations", [&] {
        std::vector<double> v;
        for (const auto& r : runs) {
            std::uint64_t total = 0;
            for (auto c : r.migrations_per_hour) {
                total += c;
            }
            v.push_back(static_cast<double>(total));
        }
        return v;
    });
    add_metric("rejected_requests", [&] {
        std::vector<double> v;
        for (const auto& r : runs) {
            v.push_back(static_cast<double>(r.rejected_requests));
        }
        return v;
    });

    for (std::size_t h = 0; h < 24; ++h) {
        std::vector<double> counts;
        for (const auto& r : runs) {
            counts.push_back(static_cast<double>(r.migrations_per_hour[h]));
        }
        const Stats s = compute_stats(counts);
        out.migrations_per_hour_mean[h] = s.mean;
        out.migrations_per_hour_ci95[h] =
            1.96 * s.stddev / std::sqrt(static_cast<double>(counts.size()));
    }
    return out;
}

std::array<std::uint64_t, 24> migrations_per_hour(const std::vector<MigrationEvent>& log) {
    std::array<std::uint64_t, 24> out{};
    for (const auto& m : log) {
        ++out[hour_of_day(m.triggered_at)];
    }
    return out;
}

void write_metrics_json(const std::string& path, const RunMetrics& rm) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write metrics: " + path);
    }
    out << rm.to_json().dump(2) << '\n';
}

RunMetrics read_metrics_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open metrics: " + path);
    }
    json j;
    try {
        in >> j;
        return RunMetrics::from_json(j);
    } catch (const json::exception& e) {
        throw ConfigError("bad metrics JSON: " + std::string(e.what()));
    }
}

void write_migrations_csv(const std::string& path, const RunMetrics& rm) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write migrations csv: " + path);
    }
    out << "hour,count\n";
    for (std::size_t h = 0; h < 24; ++h) {
        out << h << ',' << rm.migrations_per_hour[h] << '\n';
    }
}

void write_migration_log_csv(const std::string& path, const RunMetrics& rm) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write migration log: " + path);
    }
    out << "app_id,vehicle_id,triggered_us,completed_us,context_bytes,outcome\n";
    for (const auto& m : rm.migrations) {
        out << m.app << ',' << m.source_vehicle << ',' << m.triggered_at << ',';
        if (m.completed_at) {
            out << *m.completed_at;
        }
        out << ',' << m.context_bytes << ',' << to_string(m.outcome) << '\n';
    }
}

void write_events_csv(const std::string& path, const std::vector<TraceRow>& trace) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write events csv: " + path);
    }
    out << "time_us,seq,kind,source,target,detail\n";
    for (const auto& row : trace) {
        out << row.time_us << ',' << row.seq << ',' << row.kind << ',' << row.source << ','
            << row.target << ',' << row.detail << '\n';
    }
}

} // namespace vcsim
