#include "lwpt/fso.hpp"

#include <cmath>
#include <stdexcept>

#include "lwpt/bessel.hpp"
#include "lwpt/constants.hpp"
#include "lwpt/quadrature.hpp"

namespace lwpt {

double FsoLink::waist() const { return wavelength / (kPi * divergence); }

void FsoLink::validate() const {
    if (!(input_power > 0.0)) throw std::invalid_argument("fso.input_power must be > 0");
    if (!(wavelength > 0.0)) throw std::invalid_argument("fso.wavelength must be > 0");
    if (!(eta_eo > 0.0 && eta_eo <= 1.0))
        throw std::invalid_argument("fso.eta_eo must be in (0, 1]");
    if (!(eta_oe > 0.0 && eta_oe <= 1.0))
        throw std::invalid_argument("fso.eta_oe must be in (0, 1]");
    if (!(telescope_diameter > 0.0))
        throw std::invalid_argument("fso.telescope_diameter must be > 0");
    if (!(divergence > 0.0)) throw std::invalid_argument("fso.divergence must be > 0");
    if (!(array_radius > 0.0)) throw std::invalid_argument("fso.array_radius must be > 0");
}

double beam_radius(const FsoLink& link, double z) {
    if (z < 0.0) throw std::invalid_argument("beam_radius: z must be >= 0");
    const double w0 = link.waist();
    const double q = link.wavelength * z / (kPi * w0 * w0);
    return w0 * std::sqrt(1.0 + q * q);
}

double irradiance(const FsoLink& link, double r, double z) {
    const double w = beam_radius(link, z);
    return 2.0 * link.optical_power() / (kPi * w * w) *
           std::exp(-2.0 * r * r / (w * w));
}

double captured_power_aligned(const FsoLink& link, double z) {
    const double w = beam_radius(link, z);
    const double b = link.array_radius;
    return link.optical_power() * (1.0 - std::exp(-2.0 * b * b / (w * w)));
}

double captured_power_offset(const FsoLink& link, double z, double v) {
    if (v < 0.0) throw std::invalid_argument("captured_power_offset: v must be >= 0");
    const double w = beam_radius(link, z);
    const double w2 = w * w;
    const double scale = 4.0 * link.optical_power() / w2;
    const auto integrand = [&](double r) {
        const double dr = r - v;
        return scale * r * std::exp(-2.0 * dr * dr / w2) *
               bessel_i0e(4.0 * r * v / w2);
    };
    return integrate_gk15(integrand, 0.0, link.array_radius, 1e-9, 1e-20);
}

double harvested_optical(const FsoLink& link, double received_power) {
    if (received_power < 0.0)
        throw std::invalid_argument("harvested_optical: power must be >= 0");
    return link.eta_oe * received_power;
}

}  // namespace lwpt
