#ifndef LWPT_ORBITS_HPP
#define LWPT_ORBITS_HPP

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

namespace lwpt {

using Vec3 = Eigen::Vector3d;

/// Central-body constants. Defaults are the Moon.
struct BodyConstants {
    double mu = 4902.800066;          // gravitational parameter [km^3/s^2]
    double radius = 1737.4;           // mean radius [km]
    double rotation_period = 2'360'591.5;  // sidereal rotation period [s]

    void validate() const;
};

/// Classical orbital elements. Angles in degrees at the interface.
struct KeplerianElements {
    double semi_major_axis = 0.0;  // [km]
    double eccentricity = 0.0;
    double inclination = 0.0;      // [deg]
    double arg_perigee = 0.0;      // [deg]
    double raan = 0.0;             // [deg]
    double true_anomaly = 0.0;     // [deg]
    double epoch = 0.0;            // elements valid at this scenario time [s]

    void validate(const BodyConstants& body) const;
};

struct StateVector {
    double t = 0.0;      // [s]
    Vec3 position;       // Moon-centered inertial [km]
    Vec3 velocity;       // [km/s]
};

/// Surface antenna location in selenodetic coordinates.
struct GroundSite {
    std::string name;
    double latitude = 0.0;   // [deg, +N]
    double longitude = 0.0;  // [deg, +E]
    double altitude = 0.0;   // above mean radius [km]

    void validate() const;
};

struct LinkGeometry {
    double t = 0.0;          // [s]
    double range = 0.0;      // [km]
    double elevation = 0.0;  // [deg]; meaningful for site links only
    bool visible = false;
};

struct VisibilityWindow {
    double start = 0.0;  // [s]
    double end = 0.0;    // [s]
    double duration() const { return end - start; }
};

/**
 * Two-body state at scenario time t.
 *
 * Solves Kepler's equation by Newton iteration on the eccentric anomaly
 * (tolerance 1e-12 rad, 50-iteration cap).
 */
StateVector propagate(const KeplerianElements& elements,
                      const BodyConstants& body, double t);

/**
 * Inertial position of a ground site at time t [km].
 *
 * The Moon-fixed frame rotates about +z by 2*pi*t/rotation_period plus
 * the fixed alignment offset frame_offset_deg (prime-meridian angle at
 * t = 0, an epoch convention).
 */
Vec3 site_position(const GroundSite& site, const BodyConstants& body,
                   double t, double frame_offset_deg = 0.0);

/// Satellite-satellite geometry; visible iff the chord clears the body.
LinkGeometry sat_sat_geometry(const StateVector& p1, const StateVector& p2,
                              const BodyConstants& body);

/// Satellite-site geometry; visible iff elevation exceeds the mask [deg].
LinkGeometry sat_site_geometry(const StateVector& sat, const GroundSite& site,
                               const BodyConstants& body,
                               double frame_offset_deg = 0.0,
                               double elevation_mask_deg = 0.0);

/**
 * Scans a boolean visibility signal on the grid [t0, t1] with step dt and
 * returns disjoint sorted windows. Boundaries are refined by bisection to
 * 1 ms.
 */
std::vector<VisibilityWindow> visibility_windows(
    const std::function<bool(double)>& visible_at, double t0, double t1,
    double dt);

/// Exact interval intersection of several sorted disjoint window lists.
std::vector<VisibilityWindow> common_window(
    const std::vector<std::vector<VisibilityWindow>>& lists);

}  // namespace lwpt

#endif
