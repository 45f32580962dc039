#include <doctest.h>

#include <cmath>

#include "lwpt/chain.hpp"
#include "lwpt/constants.hpp"

using namespace lwpt;

namespace {

double to_db(double g) { return 10.0 * std::log10(g); }

const TimeseriesResult& default_run() {
    static const TimeseriesResult run = run_timeseries(Scenario::reference_default());
    return run;
}

}  // namespace

TEST_CASE("default scenario validates and covers the full grid") {
    const Scenario sc = Scenario::reference_default();
    sc.validate();
    const auto& run = default_run();
    CHECK(run.samples.size() == 721);  // 0..7200 s at 10 s
    CHECK(run.samples.front().t == doctest::Approx(0.0));
    CHECK(run.samples.back().t == doctest::Approx(7200.0));
}

TEST_CASE("common window matches the published pass") {
    const auto& run = default_run();
    REQUIRE(run.common_windows.size() == 1);
    const VisibilityWindow& w = run.common_windows[0];
    CHECK(w.start == doctest::Approx(1481.43).epsilon(1e-4));
    CHECK(w.end == doctest::Approx(2139.67).epsilon(1e-4));
    // ~11 minutes of simultaneous contact
    CHECK(w.duration() / 60.0 == doctest::Approx(11.0).epsilon(0.05));
    CHECK_FALSE(run.no_contact());
}

TEST_CASE("powers exist exactly when the links are visible") {
    for (const ChainSample& s : default_run().samples) {
        CHECK(s.p_h_l.has_value() == s.vis_fso);
        CHECK(s.p_h_p.has_value() == (s.vis_fso && s.vis_lsp));
        CHECK(s.p_h_m.has_value() == (s.vis_fso && s.vis_mal));
        if (s.in_common_window) {
            CHECK(s.vis_fso);
            CHECK(s.vis_lsp);
            CHECK(s.vis_mal);
        }
    }
}

TEST_CASE("chain powers are internally consistent at each sample") {
    const Scenario sc = Scenario::reference_default();
    for (const ChainSample& s : default_run().samples) {
        if (!s.in_common_window) continue;
        // laser hop: aligned closed form at the sampled range
        const double expect_l = harvested_optical(
            sc.fso, captured_power_aligned(sc.fso, s.z * 1e3));
        CHECK(*s.p_h_l == doctest::Approx(expect_l).epsilon(1e-12));
        // RF hops: Friis with the recorded gains, P_T = P_H_l same instant
        const double expect_p = harvested_rf(
            sc.rf, friis_received(sc.rf, *s.p_h_l, s.d_p * 1e3, s.g_tp, s.g_rp));
        CHECK(*s.p_h_p == doctest::Approx(expect_p).epsilon(1e-12));
        const double expect_m = harvested_rf(
            sc.rf, friis_received(sc.rf, *s.p_h_l, s.d_m * 1e3, s.g_tm, s.g_rm));
        CHECK(*s.p_h_m == doctest::Approx(expect_m).epsilon(1e-12));
        // LSP is the boresight target: gains there are boresight gains
        CHECK(s.g_tp == doctest::Approx(dish_gain(sc.rf.transmitter,
                                                  sc.rf.wavelength(), 0.0)));
        CHECK(s.g_tm == doctest::Approx(dish_gain(sc.rf.transmitter,
                                                  sc.rf.wavelength(), s.phi_tm)));
    }
}

TEST_CASE("extreme report: values, instants, and argmax invariances") {
    const auto& run = default_run();
    const ExtremeReport rep = extremes(run.samples);
    CHECK(rep.z_min.value == doctest::Approx(468.85).epsilon(1e-3));
    CHECK(rep.z_min.t == doctest::Approx(1940.0));
    CHECK(rep.z_max.value == doctest::Approx(1132.28).epsilon(1e-3));
    CHECK(rep.d_p_max.value == doctest::Approx(582.95).epsilon(1e-3));
    CHECK(to_db(rep.g_tm_max.value) == doctest::Approx(36.98).epsilon(1e-2));
    // laser power is maximal at closest approach, minimal at the farthest
    CHECK(rep.p_h_l_at_z_min > rep.p_h_l_at_z_max);
    CHECK(rep.p_h_l_at_z_min == doctest::Approx(331.7e3).epsilon(1e-3));
    CHECK(rep.p_h_m_at_g_tm_max == doctest::Approx(0.5749).epsilon(2e-3));
    // extreme instants all lie inside the common window
    const VisibilityWindow& w = run.common_windows[0];
    for (const ExtremeEntry* e : {&rep.z_min, &rep.z_max, &rep.d_p_min,
                                  &rep.d_p_max, &rep.g_tm_min, &rep.g_tm_max}) {
        CHECK(e->t >= w.start);
        CHECK(e->t <= w.end);
    }
    // instant_time resolves the named instants
    CHECK(instant_time(rep, ExtremeInstant::kZMin) == rep.z_min.t);
    CHECK(instant_time(rep, ExtremeInstant::kGtmMax) == rep.g_tm_max.t);
    // longest end-to-end path and its light delay
    CHECK(rep.max_end_to_end_km >= rep.z_max.value);
    CHECK(rep.max_path_delay_s ==
          doctest::Approx(rep.max_end_to_end_km / (kSpeedOfLight * 1e-3)));
}

TEST_CASE("extremes agree with a direct scan over in-window samples") {
    const auto& run = default_run();
    const ExtremeReport rep = extremes(run.samples);
    double zmin = 1e30, zmax = -1e30, e2e = -1e30;
    for (const ChainSample& s : run.samples) {
        if (!s.in_common_window) continue;
        zmin = std::min(zmin, s.z);
        zmax = std::max(zmax, s.z);
        e2e = std::max(e2e, s.z + s.d_m);
    }
    CHECK(rep.z_min.value == doctest::Approx(zmin));
    CHECK(rep.z_max.value == doctest::Approx(zmax));
    CHECK(rep.max_end_to_end_km == doctest::Approx(e2e));
}

TEST_CASE("path lengths cover exactly the in-window samples") {
    const auto& run = default_run();
    const auto paths = path_lengths(run.samples);
    std::size_t in_window = 0;
    for (const ChainSample& s : run.samples)
        if (s.in_common_window) ++in_window;
    CHECK(paths.size() == in_window);
    CHECK(in_window == 65);
    for (const PathLengths& p : paths) {
        CHECK(p.z_plus_d_p == doctest::Approx(p.z + p.d_p));
        CHECK(p.z_plus_d_m == doctest::Approx(p.z + p.d_m));
    }
}

TEST_CASE("no-contact scenarios are reported, not invented") {
    Scenario sc = Scenario::reference_default();
    sc.t1 = 1000.0;  // the only pass starts at ~1481 s
    const TimeseriesResult run = run_timeseries(sc);
    CHECK(run.no_contact());
    for (const ChainSample& s : run.samples) CHECK_FALSE(s.in_common_window);
}

TEST_CASE("Monte Carlo at an instant: determinism and mean degradation") {
    const Scenario sc = Scenario::reference_default();
    const ExtremeReport rep = extremes(default_run().samples);
    const McConfig cfg{50'000, 1};
    const double t = instant_time(rep, ExtremeInstant::kZMin);
    const McStats a = mc_end_to_end(sc, t, cfg, McTarget::kLlo);
    const McStats b = mc_end_to_end(sc, t, cfg, McTarget::kLlo);
    CHECK(a.mean == b.mean);
    CHECK(a.std_dev == b.std_dev);
    // pointing error can only lose power relative to perfect alignment
    CHECK(a.max <= rep.p_h_l_at_z_min * (1.0 + 1e-9));
    // mean under sigma = 0.5 m jitter at closest approach
    CHECK(a.mean == doctest::Approx(309.2e3).epsilon(0.01));
}

TEST_CASE("Monte Carlo surface target scales the laser draw by the RF factor") {
    const Scenario sc = Scenario::reference_default();
    const auto& run = default_run();
    const ExtremeReport rep = extremes(run.samples);
    const McConfig cfg{2'000, 5};
    const double t = instant_time(rep, ExtremeInstant::kGtmMax);
    const McStats mal = mc_end_to_end(sc, t, cfg, McTarget::kMalapert);
    const McStats llo = mc_end_to_end(sc, t, cfg, McTarget::kLlo);
    // the grid sample at the same instant gives the deterministic factor
    double factor = 0.0;
    for (const ChainSample& s : run.samples)
        if (s.t == t) factor = *s.p_h_m / *s.p_h_l;
    CHECK(factor > 0.0);
    CHECK(mal.mean / llo.mean == doctest::Approx(factor).epsilon(1e-9));
}

TEST_CASE("Monte Carlo outside the window is rejected") {
    const Scenario sc = Scenario::reference_default();
    const McConfig cfg{100, 1};
    CHECK_THROWS_AS(mc_end_to_end(sc, 0.0, cfg, McTarget::kLlo),
                    std::invalid_argument);
}

TEST_CASE("scenario validation flags bad fields") {
    Scenario sc = Scenario::reference_default();
    sc.dt = 0.0;
    CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
    sc = Scenario::reference_default();
    sc.t1 = sc.t0 - 1.0;
    CHECK_THROWS_AS(sc.validate(), std::invalid_argument);
}
