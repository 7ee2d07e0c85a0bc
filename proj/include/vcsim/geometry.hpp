#pragma once

#include <cmath>

namespace vcsim {

// Planar scenario coordinates, in meters.
struct GeoPoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const GeoPoint&) const = default;
};

inline double distance(const GeoPoint& a, const GeoPoint& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Circular region from which a MEC host recruits far-edge resources.
struct AreaOfInterest {
    GeoPoint center;
    double radius_m = 0.0;

    bool operator==(const AreaOfInterest&) const = default;
};

// Closed-disk membership: the boundary counts as inside.
inline bool contains(const AreaOfInterest& aoi, const GeoPoint& p) {
    return distance(aoi.center, p) <= aoi.radius_m;
}

} // namespace vcsim
