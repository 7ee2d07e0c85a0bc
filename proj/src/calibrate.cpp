#include "vcsim/calibrate.hpp"

#include "vcsim/errors.hpp"

namespace vcsim {

LatencyModel calibrate_latency(const CalibrationTargets& targets, const LatencyModel& base) {
    if (targets.solo_join_ms <= 0.0 || targets.release_ms <= 0.0) {
        throw ConfigError("calibration targets must be positive");
    }
    // 3v + b = join, v + 2b = release  =>  v = (2*join - release) / 5
    const double join_us = targets.solo_join_ms * 1000.0;
    const double release_us = targets.release_ms * 1000.0;
    const double vehicle_base = (2.0 * join_us - release_us) / 5.0;
    const double broker_base = (3.0 * release_us - join_us) / 5.0;
    if (vehicle_base <= 0.0 || broker_base <= 0.0) {
        throw ConfigError("infeasible calibration targets: negative per-hop latency");
    }
    LatencyModel model = base;
    model.params(LinkClass::VehicleToBroker).base_us = vehicle_base;
    model.params(LinkClass::BrokerToHost).base_us = broker_base;
    model.validate();
    return model;
}

} // namespace vcsim
