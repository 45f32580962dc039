#ifndef LWPT_FSO_HPP
#define LWPT_FSO_HPP

namespace lwpt {

/**
 * Gaussian-beam laser power link. SI units (meters, watts) throughout.
 *
 * The beam waist is derived from the divergence half-angle,
 * w0 = lambda / (pi * theta). When theta is not supplied it defaults to
 * lambda / D_o.
 */
struct FsoLink {
    double input_power = 1e6;          // transmitter electrical input [W]
    double wavelength = 1064e-9;       // [m]
    double eta_eo = 0.51;              // electrical -> optical PCE
    double telescope_diameter = 0.3;   // [m]
    double divergence = 3.547e-6;      // half-angle [rad]
    double eta_oe = 0.689;             // optical -> electrical PCE
    double array_radius = 2.0;         // receiver solar-array radius [m]

    double waist() const;              // w0 [m]
    double optical_power() const { return eta_eo * input_power; }
    void validate() const;
};

struct BeamSample {
    double z = 0.0;               // line-of-sight range [m]
    double beam_radius = 0.0;     // w(z) [m]
    double received_power = 0.0;  // [W]
};

/// 1/e^2 beam radius at range z [m].
double beam_radius(const FsoLink& link, double z);

/// Irradiance at radial offset r from the beam axis, range z [W/m^2].
double irradiance(const FsoLink& link, double r, double z);

/**
 * Optical power captured by the circular array centered on the beam axis.
 * Closed form: eta_eo * P_S * (1 - exp(-2 b^2 / w(z)^2)).
 */
double captured_power_aligned(const FsoLink& link, double z);

/**
 * Optical power captured when the array center is radially offset by v.
 *
 * Evaluated as the 1-D radial reduction of the offset-disc integral,
 * integrand (4 eta_eo P_S r / w^2) exp(-2 (r-v)^2 / w^2) [e^-x I0(x)]
 * with x = 4 r v / w^2, so arbitrarily large offsets stay finite.
 * Adaptive quadrature to relative tolerance 1e-9.
 */
double captured_power_offset(const FsoLink& link, double z, double v);

/// Electrical power after optical->electrical conversion.
double harvested_optical(const FsoLink& link, double received_power);

}  // namespace lwpt

#endif
