#ifndef LWPT_POINTING_HPP
#define LWPT_POINTING_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace lwpt {

/// Rayleigh radial pointing-error model.
struct PointingModel {
    double sigma = 0.5;        // Rayleigh scale [m]
    double beta_o = 2.68e-6;   // pointing error angle [rad]; metadata only

    void validate() const;
};

struct McConfig {
    std::uint64_t n_samples = 1'000'000;
    std::uint64_t seed = 1;

    void validate() const;
};

/// Descriptive statistics of a sample set. Population (1/N) std deviation.
struct McStats {
    double mean = 0.0;
    double std_dev = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::vector<std::pair<double, double>> histogram;  // (bin_center, density)
};

/**
 * Deterministic counter-based uniform generator: draw i depends only on
 * (seed, i), so any index partitioning reproduces the same sequence.
 * Returns u in [0, 1).
 */
double counter_uniform(std::uint64_t seed, std::uint64_t index);

/**
 * n i.i.d. Rayleigh(sigma) radial offsets [m] via the inverse CDF
 * v = sigma * sqrt(-2 ln(1 - u)). Same seed, same sequence, bit-exact.
 */
std::vector<double> sample_offsets(const PointingModel& model,
                                   const McConfig& cfg);

/// Rayleigh density [1/m] at offset v >= 0.
double rayleigh_pdf(const PointingModel& model, double v);

/// Rayleigh CDF at offset v >= 0.
double rayleigh_cdf(const PointingModel& model, double v);

/**
 * Mean/std/min/max plus an equal-width, density-normalized histogram over
 * [min, max]. Throws on empty input.
 */
McStats summarize(const std::vector<double>& samples, int n_bins = 200);

}  // namespace lwpt

#endif
