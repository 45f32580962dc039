#include "lwpt/rf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lwpt/bessel.hpp"
#include "lwpt/constants.hpp"

namespace lwpt {

void DishAntenna::validate() const {
    if (!(diameter > 0.0)) throw std::invalid_argument("antenna.diameter must be > 0");
    if (!(efficiency > 0.0 && efficiency <= 1.0))
        throw std::invalid_argument("antenna.efficiency must be in (0, 1]");
}

double RfLink::wavelength() const { return kSpeedOfLight / frequency; }

void RfLink::validate() const {
    if (!(frequency > 0.0)) throw std::invalid_argument("rf.frequency must be > 0");
    if (!(eta_er > 0.0 && eta_er <= 1.0))
        throw std::invalid_argument("rf.eta_er must be in (0, 1]");
    if (!(eta_re > 0.0 && eta_re <= 1.0))
        throw std::invalid_argument("rf.eta_re must be in (0, 1]");
    transmitter.validate();
    receiver.validate();
}

double dish_gain(const DishAntenna& antenna, double wavelength, double phi) {
    if (phi < 0.0 || phi > kPi / 2.0)
        throw std::invalid_argument("dish_gain: phi must be in [0, pi/2]");
    const double k = kPi * antenna.diameter / wavelength;
    return antenna.efficiency * k * k * airy_pattern(k * std::sin(phi));
}

double friis_received(const RfLink& link, double transmit_power, double d,
                      double gain_tx, double gain_rx) {
    if (!(d > 0.0)) throw std::invalid_argument("friis_received: d must be > 0");
    if (transmit_power < 0.0)
        throw std::invalid_argument("friis_received: P_T must be >= 0");
    const double q = link.wavelength() / (4.0 * kPi * d);
    return link.eta_er * transmit_power * q * q * gain_tx * gain_rx;
}

double harvested_rf(const RfLink& link, double received_power) {
    if (received_power < 0.0)
        throw std::invalid_argument("harvested_rf: power must be >= 0");
    return link.eta_re * received_power;
}

double off_boresight(const Eigen::Vector3d& sat_pos,
                     const Eigen::Vector3d& boresight_target,
                     const Eigen::Vector3d& actual_target) {
    const Eigen::Vector3d u = boresight_target - sat_pos;
    const Eigen::Vector3d w = actual_target - sat_pos;
    const double nu = u.norm();
    const double nw = w.norm();
    if (nu == 0.0 || nw == 0.0)
        throw std::invalid_argument("off_boresight: target coincides with sat_pos");
    const double c = std::clamp(u.dot(w) / (nu * nw), -1.0, 1.0);
    return std::acos(c);
}

double far_field_distance(const DishAntenna& antenna, double wavelength) {
    return 2.0 * antenna.diameter * antenna.diameter / wavelength;
}

}  // namespace lwpt
