#ifndef LWPT_CHAIN_HPP
#define LWPT_CHAIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "lwpt/fso.hpp"
#include "lwpt/orbits.hpp"
#include "lwpt/pointing.hpp"
#include "lwpt/rf.hpp"

namespace lwpt {

/**
 * Full hybrid-chain scenario: laser hop SPS -> LLO relay, RF hops
 * LLO -> LSP (full tracking) and LLO -> Malapert (transmitter locked on
 * the LSP direction, receiver tracking).
 *
 * frame_offset_deg and the element epochs fix the phasing of the
 * scenario clock; the default values reproduce the published common
 * window geometry.
 */
struct Scenario {
    BodyConstants body;
    KeplerianElements sps;
    KeplerianElements llo;
    GroundSite lsp{"LSP", -90.0, 0.0, 0.0};
    GroundSite malapert{"Malapert", -86.0, 0.0, 4.7};
    FsoLink fso;
    PointingModel pointing;
    RfLink rf;
    McConfig monte_carlo;
    double t0 = 0.0;                // [s]
    double t1 = 7200.0;             // [s]
    double dt = 10.0;               // [s]
    double frame_offset_deg = 0.0;  // Moon-fixed frame angle at t = 0
    double elevation_mask_deg = 0.0;

    void validate() const;

    /// Published reference defaults with the fitted epoch phasing.
    static Scenario reference_default();
};

/// One time-step record of the hybrid chain.
struct ChainSample {
    double t = 0.0;       // [s]
    double z = 0.0;       // SPS-LLO range [km]
    double d_p = 0.0;     // LLO-LSP range [km]
    double d_m = 0.0;     // LLO-Malapert range [km]
    double phi_tm = 0.0;  // transmitter off-boresight angle to Malapert [rad]
    double g_tp = 0.0, g_rp = 0.0, g_tm = 0.0, g_rm = 0.0;  // linear gains
    bool vis_fso = false, vis_lsp = false, vis_mal = false;
    bool in_common_window = false;
    // Power values exist only while the FSO hop and the respective RF
    // link are simultaneously visible (no storage on the relay).
    std::optional<double> p_h_l;  // harvested by LLO array [W]
    std::optional<double> p_h_p;  // harvested at LSP [W]
    std::optional<double> p_h_m;  // harvested at Malapert [W]
    bool below_far_field = false;  // any RF hop shorter than 2 D^2 / lambda
};

struct TimeseriesResult {
    std::vector<ChainSample> samples;
    std::vector<VisibilityWindow> fso_windows;
    std::vector<VisibilityWindow> lsp_windows;
    std::vector<VisibilityWindow> mal_windows;
    std::vector<VisibilityWindow> common_windows;
    bool no_contact() const { return common_windows.empty(); }
};

struct ExtremeEntry {
    double t = 0.0;
    double value = 0.0;
};

/// Grid argmin/argmax of the in-window drivers, each with the co-instant
/// harvested powers (the chain is end-to-end: P_T is taken at the same t).
struct ExtremeReport {
    ExtremeEntry z_min, z_max;        // [km]
    ExtremeEntry d_p_min, d_p_max;    // [km]
    ExtremeEntry g_tm_min, g_tm_max;  // linear gain
    double p_h_l_at_z_min = 0.0, p_h_l_at_z_max = 0.0;      // [W]
    double p_h_p_at_d_p_min = 0.0, p_h_p_at_d_p_max = 0.0;  // [W]
    double p_h_m_at_g_tm_max = 0.0, p_h_m_at_g_tm_min = 0.0;  // [W]
    double max_end_to_end_km = 0.0;  // max over grid of z + d_m
    double max_path_delay_s = 0.0;   // light delay of the longest path
};

enum class McTarget { kLlo, kLsp, kMalapert };

/// Named extreme instants accepted by the CLI and mc_end_to_end helpers.
enum class ExtremeInstant { kZMin, kZMax, kDpMin, kDpMax, kGtmMax, kGtmMin };

struct PathLengths {
    double t = 0.0;
    double z = 0.0, d_p = 0.0, d_m = 0.0;       // [km]
    double z_plus_d_p = 0.0, z_plus_d_m = 0.0;  // [km]
};

/// Evaluates the whole chain over the scenario grid.
TimeseriesResult run_timeseries(const Scenario& scenario);

/// Extreme-case report over the in-window samples. Ties break earliest.
ExtremeReport extremes(const std::vector<ChainSample>& samples);

/**
 * Monte Carlo end-to-end distribution at a fixed instant: draws pointing
 * offsets, computes P_E_l per draw, and for surface targets applies the
 * instant's RF geometry with P_T = P_E_l.
 *
 * t must lie inside the common visibility window.
 */
McStats mc_end_to_end(const Scenario& scenario, double t, const McConfig& cfg,
                      McTarget target, int n_bins = 200);

/// Resolves a named extreme instant against a finished run.
double instant_time(const ExtremeReport& report, ExtremeInstant which);

/// Per-sample point-to-point and end-to-end path lengths (in-window only).
std::vector<PathLengths> path_lengths(const std::vector<ChainSample>& samples);

}  // namespace lwpt

#endif
