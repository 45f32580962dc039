#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lwpt/constants.hpp"
#include "lwpt/pointing.hpp"

using namespace lwpt;

namespace {

const PointingModel kModel{};  // sigma = 0.5 m

}  // namespace

TEST_CASE("counter generator: range, determinism, independence of order") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const double u = counter_uniform(42, i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(counter_uniform(42, 17) == counter_uniform(42, 17));
    CHECK(counter_uniform(42, 17) != counter_uniform(43, 17));
    CHECK(counter_uniform(42, 17) != counter_uniform(42, 18));
}

TEST_CASE("rayleigh pdf/cdf analytics") {
    const double s = kModel.sigma;
    CHECK(rayleigh_pdf(kModel, 0.0) == doctest::Approx(0.0));
    // mode at v = sigma
    CHECK(rayleigh_pdf(kModel, s) ==
          doctest::Approx(std::exp(-0.5) / s).epsilon(1e-12));
    CHECK(rayleigh_cdf(kModel, 0.0) == doctest::Approx(0.0));
    CHECK(rayleigh_cdf(kModel, s) == doctest::Approx(1.0 - std::exp(-0.5)));
    CHECK(rayleigh_cdf(kModel, 100.0 * s) == doctest::Approx(1.0));
    // pdf is the cdf derivative (central difference)
    const double h = 1e-6;
    CHECK(rayleigh_pdf(kModel, 0.7) ==
          doctest::Approx((rayleigh_cdf(kModel, 0.7 + h) -
                           rayleigh_cdf(kModel, 0.7 - h)) /
                          (2.0 * h))
              .epsilon(1e-6));
}

TEST_CASE("sampling is deterministic and bit-exact per seed") {
    const McConfig cfg{1000, 7};
    const auto a = sample_offsets(kModel, cfg);
    const auto b = sample_offsets(kModel, cfg);
    REQUIRE(a.size() == 1000);
    CHECK(a == b);
    McConfig other = cfg;
    other.seed = 8;
    CHECK(sample_offsets(kModel, other) != a);
}

TEST_CASE("sample moments match Rayleigh theory") {
    const McConfig cfg{1'000'000, 1};
    const auto v = sample_offsets(kModel, cfg);
    const McStats st = summarize(v);
    const double s = kModel.sigma;
    const double mean = s * std::sqrt(kPi / 2.0);
    const double sd = s * std::sqrt(2.0 - kPi / 2.0);
    // with N = 1e6 the standard error of the mean is ~2.6e-4 m
    CHECK(st.mean == doctest::Approx(mean).epsilon(2e-3));
    CHECK(st.std_dev == doctest::Approx(sd).epsilon(5e-3));
    CHECK(st.min >= 0.0);
    CHECK(st.max > 2.0);  // ~3.7 m expected at N = 1e6
}

TEST_CASE("empirical CDF matches the analytic CDF (KS distance)") {
    const McConfig cfg{100'000, 3};
    auto v = sample_offsets(kModel, cfg);
    std::sort(v.begin(), v.end());
    double ks = 0.0;
    const double n = static_cast<double>(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double f = rayleigh_cdf(kModel, v[i]);
        ks = std::max(ks, std::fabs(f - (i + 1) / n));
        ks = std::max(ks, std::fabs(f - i / n));
    }
    // 1% critical value for N = 1e5 is 1.63/sqrt(N) = 5.2e-3
    CHECK(ks < 5.2e-3);
}

TEST_CASE("histogram is density-normalized and tracks the pdf") {
    const McConfig cfg{1'000'000, 1};
    const McStats st = summarize(sample_offsets(kModel, cfg), 100);
    REQUIRE(st.histogram.size() == 100);
    const double width = st.histogram[1].first - st.histogram[0].first;
    double area = 0.0;
    for (const auto& [center, density] : st.histogram) {
        CHECK(density >= 0.0);
        area += density * width;
    }
    CHECK(area == doctest::Approx(1.0).epsilon(1e-9));
    // densities near the mode should approximate the analytic pdf
    for (const auto& [center, density] : st.histogram) {
        if (std::fabs(center - kModel.sigma) < 0.1)
            CHECK(density ==
                  doctest::Approx(rayleigh_pdf(kModel, center)).epsilon(0.05));
    }
}

TEST_CASE("summarize edge cases") {
    CHECK_THROWS_AS(summarize({}), std::invalid_argument);
    const McStats st = summarize({2.0, 2.0, 2.0}, 10);
    CHECK(st.mean == doctest::Approx(2.0));
    CHECK(st.std_dev == doctest::Approx(0.0));
}

TEST_CASE("config validation") {
    McConfig bad;
    bad.n_samples = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    PointingModel pm;
    pm.sigma = -0.1;
    CHECK_THROWS_AS(pm.validate(), std::invalid_argument);
}
