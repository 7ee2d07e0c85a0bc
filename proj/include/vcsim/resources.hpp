#pragma once

#include <cstdint>

namespace vcsim {

// Capacity/demand triple used by pool accounting and the schedulers.
// Components are abstract compute units, MiB of RAM, and MiB of storage.
struct ResourceVector {
    std::int64_t cpu_units = 0;
    std::int64_t ram_mb = 0;
    std::int64_t storage_mb = 0;

    bool operator==(const ResourceVector&) const = default;

    ResourceVector& operator+=(const ResourceVector& o) {
        cpu_units += o.cpu_units;
        ram_mb += o.ram_mb;
        storage_mb += o.storage_mb;
        return *this;
    }

    ResourceVector& operator-=(const ResourceVector& o) {
        cpu_units -= o.cpu_units;
        ram_mb -= o.ram_mb;
        storage_mb -= o.storage_mb;
        return *this;
    }

    friend ResourceVector operator+(ResourceVector a, const ResourceVector& b) { return a += b; }
    friend ResourceVector operator-(ResourceVector a, const ResourceVector& b) { return a -= b; }

    bool non_negative() const { return cpu_units >= 0 && ram_mb >= 0 && storage_mb >= 0; }

    bool is_zero() const { return cpu_units == 0 && ram_mb == 0 && storage_mb == 0; }
};

// true iff demand <= free componentwise.
inline bool fits(const ResourceVector& demand, const ResourceVector& free) {
    return demand.cpu_units <= free.cpu_units && demand.ram_mb <= free.ram_mb &&
           demand.storage_mb <= free.storage_mb;
}

} // namespace vcsim
