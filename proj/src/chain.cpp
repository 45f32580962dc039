#include "lwpt/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lwpt/constants.hpp"

namespace lwpt {

void Scenario::validate() const {
    body.validate();
    sps.validate(body);
    llo.validate(body);
    lsp.validate();
    malapert.validate();
    fso.validate();
    pointing.validate();
    rf.validate();
    monte_carlo.validate();
    if (!(dt > 0.0)) throw std::invalid_argument("grid.dt must be > 0");
    if (!(t1 > t0)) throw std::invalid_argument("grid.t1 must exceed grid.t0");
}

Scenario Scenario::reference_default() {
    Scenario s;
    s.llo = {1837.4, 0.0, 90.0, 0.0, 355.0, 180.0, 0.0};
    s.sps = {2037.4, 0.0, 90.0, 0.0, 90.0, 180.0, 102.0};
    s.frame_offset_deg = -2.0;
    return s;
}

namespace {

bool link_visible(const Scenario& sc, double t) {
    const StateVector llo = propagate(sc.llo, sc.body, t);
    const StateVector sps = propagate(sc.sps, sc.body, t);
    if (!sat_sat_geometry(llo, sps, sc.body).visible) return false;
    if (!sat_site_geometry(llo, sc.lsp, sc.body, sc.frame_offset_deg,
                           sc.elevation_mask_deg)
             .visible)
        return false;
    return sat_site_geometry(llo, sc.malapert, sc.body, sc.frame_offset_deg,
                             sc.elevation_mask_deg)
        .visible;
}

bool inside(const std::vector<VisibilityWindow>& ws, double t) {
    for (const auto& w : ws)
        if (t >= w.start && t <= w.end) return true;
    return false;
}

}  // namespace

TimeseriesResult run_timeseries(const Scenario& sc) {
    sc.validate();

    TimeseriesResult out;
    const auto fso_vis = [&](double t) {
        return sat_sat_geometry(propagate(sc.llo, sc.body, t),
                                propagate(sc.sps, sc.body, t), sc.body)
            .visible;
    };
    const auto lsp_vis = [&](double t) {
        return sat_site_geometry(propagate(sc.llo, sc.body, t), sc.lsp, sc.body,
                                 sc.frame_offset_deg, sc.elevation_mask_deg)
            .visible;
    };
    const auto mal_vis = [&](double t) {
        return sat_site_geometry(propagate(sc.llo, sc.body, t), sc.malapert,
                                 sc.body, sc.frame_offset_deg,
                                 sc.elevation_mask_deg)
            .visible;
    };
    out.fso_windows = visibility_windows(fso_vis, sc.t0, sc.t1, sc.dt);
    out.lsp_windows = visibility_windows(lsp_vis, sc.t0, sc.t1, sc.dt);
    out.mal_windows = visibility_windows(mal_vis, sc.t0, sc.t1, sc.dt);
    out.common_windows =
        common_window({out.fso_windows, out.lsp_windows, out.mal_windows});

    const double ff_tx =
        far_field_distance(sc.rf.transmitter, sc.rf.wavelength());
    const double ff_rx = far_field_distance(sc.rf.receiver, sc.rf.wavelength());
    const double ff_km = std::max(ff_tx, ff_rx) * 1e-3;

    const int n_steps = static_cast<int>(std::floor((sc.t1 - sc.t0) / sc.dt));
    out.samples.reserve(n_steps + 1);
    for (int i = 0; i <= n_steps; ++i) {
        const double t = sc.t0 + i * sc.dt;
        const StateVector llo = propagate(sc.llo, sc.body, t);
        const StateVector sps = propagate(sc.sps, sc.body, t);
        const Vec3 lsp_pos = site_position(sc.lsp, sc.body, t, sc.frame_offset_deg);
        const Vec3 mal_pos =
            site_position(sc.malapert, sc.body, t, sc.frame_offset_deg);

        ChainSample s;
        s.t = t;
        const LinkGeometry gz = sat_sat_geometry(llo, sps, sc.body);
        const LinkGeometry gp = sat_site_geometry(
            llo, sc.lsp, sc.body, sc.frame_offset_deg, sc.elevation_mask_deg);
        const LinkGeometry gm =
            sat_site_geometry(llo, sc.malapert, sc.body, sc.frame_offset_deg,
                              sc.elevation_mask_deg);
        s.z = gz.range;
        s.d_p = gp.range;
        s.d_m = gm.range;
        s.vis_fso = gz.visible;
        s.vis_lsp = gp.visible;
        s.vis_mal = gm.visible;
        s.in_common_window = inside(out.common_windows, t);

        // Transmitter boresight is locked on the LSP site; Malapert is
        // served off-boresight. Both surface receivers track.
        s.phi_tm = off_boresight(llo.position, lsp_pos, mal_pos);
        const double lambda = sc.rf.wavelength();
        s.g_tp = dish_gain(sc.rf.transmitter, lambda, 0.0);
        s.g_rp = dish_gain(sc.rf.receiver, lambda, 0.0);
        s.g_tm = dish_gain(sc.rf.transmitter, lambda, s.phi_tm);
        s.g_rm = dish_gain(sc.rf.receiver, lambda, 0.0);

        if (s.vis_fso) {
            s.p_h_l = harvested_optical(
                sc.fso, captured_power_aligned(sc.fso, s.z * 1e3));
            if (s.vis_lsp) {
                s.p_h_p = harvested_rf(
                    sc.rf, friis_received(sc.rf, *s.p_h_l, s.d_p * 1e3, s.g_tp,
                                          s.g_rp));
                if (s.d_p < ff_km) s.below_far_field = true;
            }
            if (s.vis_mal) {
                s.p_h_m = harvested_rf(
                    sc.rf, friis_received(sc.rf, *s.p_h_l, s.d_m * 1e3, s.g_tm,
                                          s.g_rm));
                if (s.d_m < ff_km) s.below_far_field = true;
            }
        }
        out.samples.push_back(std::move(s));
    }
    return out;
}

ExtremeReport extremes(const std::vector<ChainSample>& samples) {
    ExtremeReport r;
    bool any = false;
    const auto better_min = [](double v, const ExtremeEntry& e) {
        return v < e.value;
    };
    const auto better_max = [](double v, const ExtremeEntry& e) {
        return v > e.value;
    };
    for (const auto& s : samples) {
        if (!s.in_common_window) continue;
        if (!any) {
            r.z_min = r.z_max = {s.t, s.z};
            r.d_p_min = r.d_p_max = {s.t, s.d_p};
            r.g_tm_min = r.g_tm_max = {s.t, s.g_tm};
            r.p_h_l_at_z_min = r.p_h_l_at_z_max = s.p_h_l.value_or(0.0);
            r.p_h_p_at_d_p_min = r.p_h_p_at_d_p_max = s.p_h_p.value_or(0.0);
            r.p_h_m_at_g_tm_max = r.p_h_m_at_g_tm_min = s.p_h_m.value_or(0.0);
            any = true;
        } else {
            if (better_min(s.z, r.z_min)) {
                r.z_min = {s.t, s.z};
                r.p_h_l_at_z_min = s.p_h_l.value_or(0.0);
            }
            if (better_max(s.z, r.z_max)) {
                r.z_max = {s.t, s.z};
                r.p_h_l_at_z_max = s.p_h_l.value_or(0.0);
            }
            if (better_min(s.d_p, r.d_p_min)) {
                r.d_p_min = {s.t, s.d_p};
                r.p_h_p_at_d_p_min = s.p_h_p.value_or(0.0);
            }
            if (better_max(s.d_p, r.d_p_max)) {
                r.d_p_max = {s.t, s.d_p};
                r.p_h_p_at_d_p_max = s.p_h_p.value_or(0.0);
            }
            if (better_max(s.g_tm, r.g_tm_max)) {
                r.g_tm_max = {s.t, s.g_tm};
                r.p_h_m_at_g_tm_max = s.p_h_m.value_or(0.0);
            }
            if (better_min(s.g_tm, r.g_tm_min)) {
                r.g_tm_min = {s.t, s.g_tm};
                r.p_h_m_at_g_tm_min = s.p_h_m.value_or(0.0);
            }
        }
        const double end_to_end = s.z + s.d_m;
        if (end_to_end > r.max_end_to_end_km) r.max_end_to_end_km = end_to_end;
    }
    if (!any) throw std::invalid_argument("extremes: no in-window samples");
    r.max_path_delay_s = r.max_end_to_end_km * 1e3 / kSpeedOfLight;
    return r;
}

McStats mc_end_to_end(const Scenario& sc, double t, const McConfig& cfg,
                      McTarget target, int n_bins) {
    sc.validate();
    cfg.validate();
    if (!link_visible(sc, t))
        throw std::invalid_argument(
            "mc_end_to_end: t is outside the common visibility window");

    const StateVector llo = propagate(sc.llo, sc.body, t);
    const StateVector sps = propagate(sc.sps, sc.body, t);
    const double z_m = (sps.position - llo.position).norm() * 1e3;

    // RF factor mapping P_T to harvested DC power at the chosen site.
    double rf_factor = 1.0;
    if (target != McTarget::kLlo) {
        const Vec3 lsp_pos = site_position(sc.lsp, sc.body, t, sc.frame_offset_deg);
        const Vec3 mal_pos =
            site_position(sc.malapert, sc.body, t, sc.frame_offset_deg);
        const double lambda = sc.rf.wavelength();
        double hop_m;  // RF hop length [m]
        double g_t;
        if (target == McTarget::kLsp) {
            hop_m = (llo.position - lsp_pos).norm() * 1e3;
            g_t = dish_gain(sc.rf.transmitter, lambda, 0.0);
        } else {
            hop_m = (llo.position - mal_pos).norm() * 1e3;
            g_t = dish_gain(sc.rf.transmitter, lambda,
                            off_boresight(llo.position, lsp_pos, mal_pos));
        }
        const double g_r = dish_gain(sc.rf.receiver, lambda, 0.0);
        rf_factor = sc.rf.eta_re * friis_received(sc.rf, 1.0, hop_m, g_t, g_r);
    }

    const std::vector<double> offsets = sample_offsets(sc.pointing, cfg);
    std::vector<double> powers(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        const double p_e_l = harvested_optical(
            sc.fso, captured_power_offset(sc.fso, z_m, offsets[i]));
        powers[i] = p_e_l * rf_factor;
    }
    return summarize(powers, n_bins);
}

double instant_time(const ExtremeReport& report, ExtremeInstant which) {
    switch (which) {
        case ExtremeInstant::kZMin: return report.z_min.t;
        case ExtremeInstant::kZMax: return report.z_max.t;
        case ExtremeInstant::kDpMin: return report.d_p_min.t;
        case ExtremeInstant::kDpMax: return report.d_p_max.t;
        case ExtremeInstant::kGtmMax: return report.g_tm_max.t;
        case ExtremeInstant::kGtmMin: return report.g_tm_min.t;
    }
    throw std::logic_error("instant_time: bad enum");
}

std::vector<PathLengths> path_lengths(const std::vector<ChainSample>& samples) {
    std::vector<PathLengths> out;
    for (const auto& s : samples) {
        if (!s.in_common_window) continue;
        out.push_back({s.t, s.z, s.d_p, s.d_m, s.z + s.d_p, s.z + s.d_m});
    }
    return out;
}

}  // namespace lwpt
