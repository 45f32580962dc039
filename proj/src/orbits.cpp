#include "lwpt/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

#include "lwpt/constants.hpp"

namespace lwpt {

double wrap_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w < 0.0) w += 360.0;
    return w;
}

void BodyConstants::validate() const {
    if (!(mu > 0.0)) throw std::invalid_argument("body.mu must be > 0");
    if (!(radius > 0.0)) throw std::invalid_argument("body.radius must be > 0");
    if (!(rotation_period > 0.0))
        throw std::invalid_argument("body.rotation_period must be > 0");
}

void KeplerianElements::validate(const BodyConstants& body) const {
    if (!(semi_major_axis > body.radius))
        throw std::invalid_argument(
            "elements.semi_major_axis must exceed the body radius");
    if (!(eccentricity >= 0.0 && eccentricity < 1.0))
        throw std::invalid_argument("elements.eccentricity must be in [0, 1)");
}

void GroundSite::validate() const {
    if (!(latitude >= -90.0 && latitude <= 90.0))
        throw std::invalid_argument("site.latitude must be in [-90, 90]");
    if (!(longitude > -180.0 && longitude <= 180.0))
        throw std::invalid_argument("site.longitude must be in (-180, 180]");
    if (!(altitude >= 0.0))
        throw std::invalid_argument("site.altitude must be >= 0");
}

namespace {

// Eccentric anomaly from mean anomaly, Newton iteration.
double solve_kepler(double mean_anomaly, double e) {
    double E = mean_anomaly;
    for (int it = 0; it < 50; ++it) {
        const double f = E - e * std::sin(E) - mean_anomaly;
        const double dE = f / (1.0 - e * std::cos(E));
        E -= dE;
        if (std::fabs(dE) < 1e-12) return E;
    }
    throw std::runtime_error("solve_kepler: no convergence after 50 iterations");
}

Eigen::Matrix3d perifocal_to_inertial(double raan, double inc, double argp) {
    using Eigen::AngleAxisd;
    return (AngleAxisd(raan, Vec3::UnitZ()) * AngleAxisd(inc, Vec3::UnitX()) *
            AngleAxisd(argp, Vec3::UnitZ()))
        .toRotationMatrix();
}

}  // namespace

StateVector propagate(const KeplerianElements& el, const BodyConstants& body,
                      double t) {
    el.validate(body);
    const double a = el.semi_major_axis;
    const double e = el.eccentricity;
    const double nu0 = deg2rad(el.true_anomaly);

    // Mean anomaly at epoch from the true anomaly.
    const double E0 = 2.0 * std::atan2(std::sqrt(1.0 - e) * std::sin(nu0 / 2.0),
                                       std::sqrt(1.0 + e) * std::cos(nu0 / 2.0));
    const double M0 = E0 - e * std::sin(E0);
    const double n = std::sqrt(body.mu / (a * a * a));
    const double E = solve_kepler(M0 + n * (t - el.epoch), e);

    const double nu = 2.0 * std::atan2(std::sqrt(1.0 + e) * std::sin(E / 2.0),
                                       std::sqrt(1.0 - e) * std::cos(E / 2.0));
    const double r = a * (1.0 - e * std::cos(E));
    const double p = a * (1.0 - e * e);

    const Vec3 r_pf(r * std::cos(nu), r * std::sin(nu), 0.0);
    const double vs = std::sqrt(body.mu / p);
    const Vec3 v_pf(-vs * std::sin(nu), vs * (e + std::cos(nu)), 0.0);

    const Eigen::Matrix3d R = perifocal_to_inertial(
        deg2rad(el.raan), deg2rad(el.inclination), deg2rad(el.arg_perigee));
    return {t, R * r_pf, R * v_pf};
}

Vec3 site_position(const GroundSite& site, const BodyConstants& body, double t,
                   double frame_offset_deg) {
    site.validate();
    const double r = body.radius + site.altitude;
    const double lat = deg2rad(site.latitude);
    const double lon = deg2rad(site.longitude + frame_offset_deg) +
                       2.0 * kPi * t / body.rotation_period;
    return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
            r * std::sin(lat)};
}

LinkGeometry sat_sat_geometry(const StateVector& p1, const StateVector& p2,
                              const BodyConstants& body) {
    if (p1.t != p2.t)
        throw std::invalid_argument("sat_sat_geometry: mismatched timestamps");
    const Vec3 d = p2.position - p1.position;
    const double range = d.norm();
    // Closest approach of the chord to the body center.
    double s = 0.0;
    if (range > 0.0) s = std::clamp(-p1.position.dot(d) / d.squaredNorm(), 0.0, 1.0);
    const double min_dist = (p1.position + s * d).norm();
    return {p1.t, range, 0.0, min_dist > body.radius};
}

LinkGeometry sat_site_geometry(const StateVector& sat, const GroundSite& site,
                               const BodyConstants& body,
                               double frame_offset_deg,
                               double elevation_mask_deg) {
    const Vec3 sp = site_position(site, body, sat.t, frame_offset_deg);
    const Vec3 up = sp.normalized();
    const Vec3 to_sat = sat.position - sp;
    const double range = to_sat.norm();
    const double elevation =
        rad2deg(std::asin(std::clamp(up.dot(to_sat) / range, -1.0, 1.0)));
    return {sat.t, range, elevation, elevation > elevation_mask_deg};
}

namespace {

// Bisects a visibility transition inside (lo, hi] down to 1 ms.
double refine_edge(const std::function<bool(double)>& visible_at, double lo,
                   double hi) {
    bool vis_hi = visible_at(hi);
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        if (visible_at(mid) == vis_hi) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<VisibilityWindow> visibility_windows(
    const std::function<bool(double)>& visible_at, double t0, double t1,
    double dt) {
    if (!(t1 > t0) || !(dt > 0.0))
        throw std::invalid_argument("visibility_windows: need t1 > t0, dt > 0");

    std::vector<VisibilityWindow> out;
    double start = 0.0;
    bool open = false;
    double prev_t = t0;
    bool prev_vis = visible_at(t0);
    if (prev_vis) {
        start = t0;
        open = true;
    }
    for (double t = t0 + dt; t < t1 + 0.5 * dt; t += dt) {
        const double tc = std::min(t, t1);
        const bool vis = visible_at(tc);
        if (vis != prev_vis) {
            const double edge = refine_edge(visible_at, prev_t, tc);
            if (vis) {
                start = edge;
                open = true;
            } else {
                out.push_back({start, edge});
                open = false;
            }
        }
        prev_t = tc;
        prev_vis = vis;
        if (tc == t1) break;
    }
    if (open) out.push_back({start, t1});
    return out;
}

std::vector<VisibilityWindow> common_window(
    const std::vector<std::vector<VisibilityWindow>>& lists) {
    if (lists.empty()) return {};
    std::vector<VisibilityWindow> acc = lists.front();
    for (std::size_t i = 1; i < lists.size(); ++i) {
        std::vector<VisibilityWindow> next;
        for (const auto& a : acc) {
            for (const auto& b : lists[i]) {
                const double lo = std::max(a.start, b.start);
                const double hi = std::min(a.end, b.end);
                if (hi > lo) next.push_back({lo, hi});
            }
        }
        std::sort(next.begin(), next.end(),
                  [](const auto& x, const auto& y) { return x.start < y.start; });
        acc = std::move(next);
    }
    return acc;
}

}  // namespace lwpt
