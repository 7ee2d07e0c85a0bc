#include "vcsim/config.hpp"

#include "vcsim/errors.hpp"

#include <filesystem>
#include <fstream>

namespace vcsim {
namespace {

using nlohmann::json;

json link_params_to_json(const LinkParams& p) {
    return {{"base_us", p.base_us}, {"jitter_us", p.jitter_us}, {"queuing_us", p.queuing_us}};
}

LinkParams link_params_from_json(const json& j) {
    LinkParams p;
    p.base_us = j.at("base_us").get<double>();
    p.jitter_us = j.at("jitter_us").get<double>();
    p.queuing_us = j.at("queuing_us").get<double>();
    return p;
}

json aoi_to_json(const AreaOfInterest& a) {
    return {{"center_x_m", a.center.x}, {"center_y_m", a.center.y}, {"radius_m", a.radius_m}};
}

AreaOfInterest aoi_from_json(const json& j) {
    AreaOfInterest a;
    a.center.x = j.at("center_x_m").get<double>();
    a.center.y = j.at("center_y_m").get<double>();
    a.radius_m = j.at("radius_m").get<double>();
    if (a.radius_m <= 0.0) {
        throw ConfigError("aoi radius must be positive");
    }
    return a;
}

json host_to_json(const HostConfig& h) {
    return {{"aoi", aoi_to_json(h.aoi)},
            {"reward_offer", h.reward_offer},
            {"local_capacity", resource_vector_to_json(h.local_capacity)}};
}

HostConfig host_from_json(const json& j) {
    HostConfig h;
    h.aoi = aoi_from_json(j.at("aoi"));
    h.reward_offer = j.at("reward_offer").get<int>();
    h.local_capacity = resource_vector_from_json(j.at("local_capacity"));
    return h;
}

json vector_dist_to_json(const VectorDist& d) {
    if (d.kind == VectorDist::Kind::Fixed) {
        return {{"kind", "fixed"}, {"value", resource_vector_to_json(d.fixed)}};
    }
    return {{"kind", "uniform_int"},
            {"lo", resource_vector_to_json(d.fixed)},
            {"hi", resource_vector_to_json(d.hi)}};
}

VectorDist vector_dist_from_json(const json& j) {
    VectorDist d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fixed") {
        d.kind = VectorDist::Kind::Fixed;
        d.fixed = resource_vector_from_json(j.at("value"));
    } else if (kind == "uniform_int") {
        d.kind = VectorDist::Kind::UniformInt;
        d.fixed = resource_vector_from_json(j.at("lo"));
        d.hi = resource_vector_from_json(j.at("hi"));
    } else {
        throw ConfigError("unknown resource distribution kind: " + kind);
    }
    return d;
}

json duration_dist_to_json(const DurationDist& d) {
    const char* kind = "fixed";
    if (d.kind == DurationDist::Kind::Normal) {
        kind = "normal";
    } else if (d.kind == DurationDist::Kind::Exponential) {
        kind = "exponential";
    }
    return {{"kind", kind}, {"mean_s", d.mean_s}, {"std_s", d.std_s}, {"min_s", d.min_s}};
}

DurationDist duration_dist_from_json(const json& j) {
    DurationDist d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fixed") {
        d.kind = DurationDist::Kind::Fixed;
    } else if (kind == "normal") {
        d.kind = DurationDist::Kind::Normal;
    } else if (kind == "exponential") {
        d.kind = DurationDist::Kind::Exponential;
    } else {
        throw ConfigError("unknown duration distribution kind: " + kind);
    }
    d.mean_s = j.at("mean_s").get<double>();
    d.std_s = j.at("std_s").get<double>();
    d.min_s = j.at("min_s").get<double>();
    if (d.mean_s < 0.0 || d.std_s < 0.0) {
        throw ConfigError("duration distribution parameters must be non-negative");
    }
    return d;
}

json profile_to_json(const HourlyProfile& p) {
    json arr = json::array();
    for (double v : p) {
        arr.push_back(v);
    }
    return arr;
}

HourlyProfile profile_from_json(const json& j) {
    if (!j.is_array() || j.size() != 24) {
        throw ConfigError("hourly profile must have exactly 24 entries");
    }
    HourlyProfile p{};
    for (std::size_t i = 0; i < 24; ++i) {
        p[i] = j[i].get<double>();
        if (p[i] < 0.0) {
            throw ConfigError("hourly rates must be non-negative");
        }
    }
    return p;
}

json burst_to_json(const BurstWorkload& b) {
    return {{"vehicle_count", b.vehicle_count},   {"vehicles_at_s", b.vehicles_at_s},
            {"residency_min_s", b.residency_min_s}, {"residency_max_s", b.residency_max_s},
            {"request_count", b.request_count},   {"requests_at_s", b.requests_at_s}};
}

BurstWorkload burst_from_json(const json& j) {
    BurstWorkload b;
    b.vehicle_count = j.at("vehicle_count").get<std::size_t>();
    b.vehicles_at_s = j.at("vehicles_at_s").get<double>();
    b.residency_min_s = j.at("residency_min_s").get<double>();
    b.residency_max_s = j.at("residency_max_s").get<double>();
    b.request_count = j.at("request_count").get<std::size_t>();
    b.requests_at_s = j.at("requests_at_s").get<double>();
    if (b.residency_max_s < b.residency_min_s) {
        throw ConfigError("burst residency_max_s < residency_min_s");
    }
    return b;
}

} // namespace

json resource_vector_to_json(const ResourceVector& v) {
    return {{"cpu_units", v.cpu_units}, {"ram_mb", v.ram_mb}, {"storage_mb", v.storage_mb}};
}

ResourceVector resource_vector_from_json(const json& j) {
    ResourceVector v;
    v.cpu_units = j.at("cpu_units").get<std::int64_t>();
    v.ram_mb = j.at("ram_mb").get<std::int64_t>();
    v.storage_mb = j.at("storage_mb").get<std::int64_t>();
    if (!v.non_negative()) {
        throw ConfigError("resource vectors must be non-negative");
    }
    return v;
}

json ScenarioConfig::to_json() const {
    json latency_j;
    for (std::size_t i = 0; i < kLinkClassCount; ++i) {
        const auto link = static_cast<LinkClass>(i);
        latency_j[std::string(to_string(link))] = link_params_to_json(latency.params(link));
    }
    json hosts_j = json::array();
    for (const auto& h : additional_hosts) {
        hosts_j.push_back(host_to_json(h));
    }
    json j{{"horizon_hours", horizon_hours},
           {"seed", seed},
           {"latency", latency_j},
           {"host", host_to_json(host)},
           {"additional_hosts", hosts_j},
           {"vehicle_capacity", vector_dist_to_json(vehicle_capacity)},
           {"app_demand", vector_dist_to_json(app_demand)},
           {"session_duration", duration_dist_to_json(session_duration)},
           {"min_residency_s", min_residency_s},
           {"context",
            {{"rate_mbit_s", context.rate_mbit_s},
             {"bytes", context.bytes},
             {"hard_cutoff", context.hard_cutoff}}},
           {"scheduler", scheduler},
           {"vehicle_accept_rewards", vehicle_accept_rewards},
           {"workload",
            {{"mode", workload.mode == WorkloadConfig::Mode::Poisson ? "poisson" : "burst"},
             {"vehicle_profile", profile_to_json(workload.vehicle_profile)},
             {"user_profile", profile_to_json(workload.user_profile)},
             {"user_rate_scale", workload.user_rate_scale},
             {"burst", burst_to_json(workload.burst)}}}};
    if (!residency_model_file.empty()) {
        j["residency_model_file"] = residency_model_file;
    }
    if (residency_model) {
        j["residency_model"] = residency_model->to_json();
    }
    return j;
}

ScenarioConfig ScenarioConfig::from_json(const json& j) {
    ScenarioConfig cfg;
    cfg.horizon_hours = j.at("horizon_hours").get<double>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (cfg.horizon_hours <= 0.0) {
        throw ConfigError("horizon_hours must be positive");
    }
    const json& latency_j = j.at("latency");
    for (std::size_t i = 0; i < kLinkClassCount; ++i) {
        const auto link = static_cast<LinkClass>(i);
        cfg.latency.params(link) = link_params_from_json(latency_j.at(std::string(to_string(link))));
    }
    cfg.latency.validate();
    cfg.host = host_from_json(j.at("host"));
    if (j.contains("additional_hosts")) {
        for (const auto& h : j.at("additional_hosts")) {
            cfg.additional_hosts.push_back(host_from_json(h));
        }
    }
    cfg.vehicle_capacity = vector_dist_from_json(j.at("vehicle_capacity"));
    cfg.app_demand = vector_dist_from_json(j.at("app_demand"));
    cfg.session_duration = duration_dist_from_json(j.at("session_duration"));
    cfg.min_residency_s = j.at("min_residency_s").get<double>();
    const json& ctx = j.at("context");
    cfg.context.rate_mbit_s = ctx.at("rate_mbit_s").get<double>();
    cfg.context.bytes = ctx.at("bytes").get<std::uint64_t>();
    cfg.context.hard_cutoff = ctx.at("hard_cutoff").get<bool>();
    if (cfg.context.rate_mbit_s <= 0.0) {
        throw ConfigError("context transfer rate must be positive");
    }
    cfg.scheduler = j.at("scheduler").get<std::string>();
    cfg.vehicle_accept_rewards = j.at("vehicle_accept_rewards").get<bool>();
    const json& w = j.at("workload");
    const std::string mode = w.at("mode").get<std::string>();
    if (mode == "poisson") {
        cfg.workload.mode = WorkloadConfig::Mode::Poisson;
    } else if (mode == "burst") {
        cfg.workload.mode = WorkloadConfig::Mode::Burst;
    } else {
        throw ConfigError("unknown workload mode: " + mode);
    }
    cfg.workload.vehicle_profile = profile_from_json(w.at("vehicle_profile"));
    cfg.workload.user_profile = profile_from_json(w.at("user_profile"));
    cfg.workload.user_rate_scale = w.at("user_rate_scale").get<double>();
    cfg.workload.burst = burst_from_json(w.at("burst"));
    if (j.contains("residency_model_file")) {
        cfg.residency_model_file = j.at("residency_model_file").get<std::string>();
    }
    if (j.contains("residency_model")) {
        cfg.residency_model = ResidencyModel::from_json(j.at("residency_model"));
    }
    return cfg;
}

ResidencyModel ScenarioConfig::resolve_residency_model() const {
    if (residency_model) {
        return *residency_model;
    }
    if (!residency_model_file.empty()) {
        std::filesystem::path p(residency_model_file);
        if (p.is_relative() && !base_dir.empty()) {
            p = std::filesystem::path(base_dir) / p;
        }
        std::ifstream in(p);
        if (!in) {
            throw ConfigError("cannot open residency model: " + p.string());
        }
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ConfigError("bad residency model JSON: " + std::string(e.what()));
        }
        // Accept either a bare model or a preprocess-parking document.
        if (j.contains("residency_model")) {
            return ResidencyModel::from_json(j.at("residency_model"));
        }
        return ResidencyModel::from_json(j);
    }
    ResidencyModel flat;
    flat.set_fallback_mean_s(3600.0);
    return flat;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config: " + path);
    }
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("bad config JSON: " + std::string(e.what()));
    }
    try {
        ScenarioConfig cfg = ScenarioConfig::from_json(j);
        cfg.base_dir = std::filesystem::path(path).parent_path().string();
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError("bad config: " + std::string(e.what()));
    }
}

void save_config(const std::string& path, const ScenarioConfig& cfg) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("cannot write config: " + path);
    }
    out << cfg.to_json().dump(2) << '\n';
}

} // namespace vcsim
