#include "lwpt/pointing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lwpt {

void PointingModel::validate() const {
    if (!(sigma > 0.0)) throw std::invalid_argument("pointing.sigma must be > 0");
}

void McConfig::validate() const {
    if (n_samples < 1)
        throw std::invalid_argument("monte_carlo.n_samples must be >= 1");
}

namespace {

// splitmix64 finalizer; full-period mixing of a 64-bit counter.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

double counter_uniform(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t bits = mix64(mix64(seed) ^ mix64(index + 1));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::vector<double> sample_offsets(const PointingModel& model,
                                   const McConfig& cfg) {
    model.validate();
    cfg.validate();
    std::vector<double> out(cfg.n_samples);
    for (std::uint64_t i = 0; i < cfg.n_samples; ++i) {
        const double u = counter_uniform(cfg.seed, i);
        out[i] = model.sigma * std::sqrt(-2.0 * std::log1p(-u));
    }
    return out;
}

double rayleigh_pdf(const PointingModel& model, double v) {
    if (v < 0.0) throw std::invalid_argument("rayleigh_pdf: v must be >= 0");
    const double s2 = model.sigma * model.sigma;
    return v / s2 * std::exp(-v * v / (2.0 * s2));
}

double rayleigh_cdf(const PointingModel& model, double v) {
    if (v < 0.0) throw std::invalid_argument("rayleigh_cdf: v must be >= 0");
    const double s2 = model.sigma * model.sigma;
    return -std::expm1(-v * v / (2.0 * s2));
}

McStats summarize(const std::vector<double>& samples, int n_bins) {
    if (samples.empty())
        throw std::invalid_argument("summarize: empty sample set");
    if (n_bins < 1) throw std::invalid_argument("summarize: n_bins must be >= 1");

    McStats s;
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    s.min = *mn;
    s.max = *mx;

    double sum = 0.0;
    for (double x : samples) sum += x;
    s.mean = sum / static_cast<double>(samples.size());

    double ss = 0.0;
    for (double x : samples) {
        const double d = x - s.mean;
        ss += d * d;
    }
    s.std_dev = std::sqrt(ss / static_cast<double>(samples.size()));

    const double width = (s.max - s.min) / n_bins;
    std::vector<std::size_t> counts(n_bins, 0);
    if (width > 0.0) {
        for (double x : samples) {
            auto bin = static_cast<std::size_t>((x - s.min) / width);
            if (bin >= counts.size()) bin = counts.size() - 1;
            ++counts[bin];
        }
    } else {
        counts[0] = samples.size();
    }
    s.histogram.reserve(n_bins);
    const double norm =
        width > 0.0 ? 1.0 / (width * static_cast<double>(samples.size())) : 1.0;
    for (int i = 0; i < n_bins; ++i) {
        const double center = s.min + (i + 0.5) * (width > 0.0 ? width : 0.0);
        s.histogram.emplace_back(center,
                                 static_cast<double>(counts[i]) * norm);
    }
    return s;
}

}  // namespace lwpt
