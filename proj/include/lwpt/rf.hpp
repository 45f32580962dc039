#ifndef LWPT_RF_HPP
#define LWPT_RF_HPP

#include <Eigen/Core>

namespace lwpt {

enum class Tracking { kFull, kReceiveOnly, kFixed };

struct DishAntenna {
    double diameter = 0.0;    // [m]
    double efficiency = 0.9;  // aperture efficiency
    Tracking tracking = Tracking::kFull;

    void validate() const;
};

/// Friis RF power link. Wavelength derived from frequency.
struct RfLink {
    double frequency = 2.5e9;  // [Hz]
    double eta_er = 0.8;       // electrical -> RF PCE
    double eta_re = 0.8;       // RF -> DC PCE
    DishAntenna transmitter{4.0, 0.9, Tracking::kFull};
    DishAntenna receiver{50.0, 0.9, Tracking::kFull};

    double wavelength() const;  // [m]
    void validate() const;
};

/**
 * Parabolic-dish gain at off-boresight angle phi [rad], linear scale.
 *
 * G = rho (pi D / lambda)^2 (2 J1(zeta)/zeta)^2, zeta = (pi D/lambda) sin phi.
 * The pattern term is squared (uniformly illuminated circular aperture);
 * the boresight value rho (pi D / lambda)^2 is unaffected by the choice.
 */
double dish_gain(const DishAntenna& antenna, double wavelength, double phi);

/// Friis received RF power [W]; transmit chain PCE applied to P_T.
double friis_received(const RfLink& link, double transmit_power, double d,
                      double gain_tx, double gain_rx);

/// DC power after RF -> DC conversion [W].
double harvested_rf(const RfLink& link, double received_power);

/// Angle [rad] at sat_pos between directions to the two targets.
double off_boresight(const Eigen::Vector3d& sat_pos,
                     const Eigen::Vector3d& boresight_target,
                     const Eigen::Vector3d& actual_target);

/// Far-field (2 D^2 / lambda) distance [m] for a dish.
double far_field_distance(const DishAntenna& antenna, double wavelength);

}  // namespace lwpt

#endif
