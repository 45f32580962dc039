// Command-line front end for the hybrid FSO + RF lunar power-transfer
// simulator. Exit codes: 0 success, 2 usage error, 3 validation error,
// 4 numerical failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lwpt/chain.hpp"
#include "lwpt/constants.hpp"
#include "lwpt/quadrature.hpp"
#include "lwpt/scenario_io.hpp"

namespace {

namespace fs = std::filesystem;
using namespace lwpt;

std::string out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("LWPT_OUT_DIR")) return env;
    return ".";
}

Scenario load_or_default(const std::string& config_path) {
    return config_path.empty() ? Scenario::reference_default()
                               : load_config(config_path);
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

void print_windows(const char* label,
                   const std::vector<VisibilityWindow>& ws) {
    std::cout << label << ":";
    if (ws.empty()) std::cout << " (none)";
    for (const auto& w : ws)
        std::cout << " [" << format_sig9(w.start) << ", " << format_sig9(w.end)
                  << "] (" << format_sig9(w.duration()) << " s)";
    std::cout << "\n";
}

int cmd_propagate(const Scenario& sc, const std::string& sat, double t) {
    const KeplerianElements& el = sat == "sps" ? sc.sps : sc.llo;
    const StateVector st = propagate(el, sc.body, t);
    std::cout << "t_s=" << format_sig9(st.t)
              << " position_km=" << format_sig9(st.position.x()) << ","
              << format_sig9(st.position.y()) << ","
              << format_sig9(st.position.z())
              << " velocity_km_s=" << format_sig9(st.velocity.x()) << ","
              << format_sig9(st.velocity.y()) << ","
              << format_sig9(st.velocity.z())
              << " r_km=" << format_sig9(st.position.norm()) << "\n";
    return 0;
}

int cmd_visibility(const Scenario& sc) {
    const TimeseriesResult run = run_timeseries(sc);
    print_windows("fso", run.fso_windows);
    print_windows("lsp", run.lsp_windows);
    print_windows("malapert", run.mal_windows);
    print_windows("common", run.common_windows);
    if (run.no_contact()) std::cout << "no contact\n";
    return 0;
}

int cmd_fso(const Scenario& sc, double z_km, double v_m) {
    const double z = z_km * 1e3;
    const double captured = v_m == 0.0
                                ? captured_power_aligned(sc.fso, z)
                                : captured_power_offset(sc.fso, z, v_m);
    std::cout << "beam_radius_m=" << format_sig9(beam_radius(sc.fso, z))
              << " captured_w=" << format_sig9(captured) << " harvested_w="
              << format_sig9(harvested_optical(sc.fso, captured)) << "\n";
    return 0;
}

int cmd_rf(const Scenario& sc, double d_km, double phi_deg, double pt_w) {
    const double lambda = sc.rf.wavelength();
    const double g_t = dish_gain(sc.rf.transmitter, lambda, deg2rad(phi_deg));
    const double g_r = dish_gain(sc.rf.receiver, lambda, 0.0);
    const double p_r = friis_received(sc.rf, pt_w, d_km * 1e3, g_t, g_r);
    std::cout << "G_T_dB=" << format_sig9(to_db(g_t))
              << " G_R_dB=" << format_sig9(to_db(g_r))
              << " received_w=" << format_sig9(p_r)
              << " harvested_w=" << format_sig9(harvested_rf(sc.rf, p_r))
              << "\n";
    if (d_km * 1e3 < far_field_distance(sc.rf.receiver, lambda))
        std::cerr << "warning: d below receiver far-field distance "
                  << format_sig9(far_field_distance(sc.rf.receiver, lambda) / 1e3)
                  << " km\n";
    return 0;
}

int cmd_chain(const Scenario& sc, const std::string& dir) {
    const TimeseriesResult run = run_timeseries(sc);
    fs::create_directories(dir);
    write_timeseries(run.samples, dir + "/timeseries.csv");
    write_manifest(sc, dir + "/manifest.json");
    if (run.no_contact()) {
        std::cout << "no contact: common visibility window is empty\n";
        return 0;
    }
    const ExtremeReport rep = extremes(run.samples);
    write_extremes(rep, run, dir + "/extremes.json");
    std::cout << extremes_json(rep, run);
    std::cout << "artifacts written to " << dir << "\n";
    return 0;
}

int cmd_report(const Scenario& sc) {
    const TimeseriesResult run = run_timeseries(sc);
    if (run.no_contact()) {
        std::cout << "no contact: common visibility window is empty\n";
        return 0;
    }
    const ExtremeReport r = extremes(run.samples);
    print_windows("common", run.common_windows);
    std::cout << "z_min_km=" << format_sig9(r.z_min.value)
              << " at t=" << format_sig9(r.z_min.t) << "\n"
              << "z_max_km=" << format_sig9(r.z_max.value)
              << " at t=" << format_sig9(r.z_max.t) << "\n"
              << "d_p_min_km=" << format_sig9(r.d_p_min.value)
              << " at t=" << format_sig9(r.d_p_min.t) << "\n"
              << "d_p_max_km=" << format_sig9(r.d_p_max.value)
              << " at t=" << format_sig9(r.d_p_max.t) << "\n"
              << "G_Tm_max_dB=" << format_sig9(to_db(r.g_tm_max.value))
              << " at t=" << format_sig9(r.g_tm_max.t) << "\n"
              << "G_Tm_min_dB=" << format_sig9(to_db(r.g_tm_min.value))
              << " at t=" << format_sig9(r.g_tm_min.t) << "\n"
              << "P_Hl_at_z_min_W=" << format_sig9(r.p_h_l_at_z_min) << "\n"
              << "P_Hl_at_z_max_W=" << format_sig9(r.p_h_l_at_z_max) << "\n"
              << "P_Hp_at_d_p_min_W=" << format_sig9(r.p_h_p_at_d_p_min) << "\n"
              << "P_Hm_at_G_Tm_max_W=" << format_sig9(r.p_h_m_at_g_tm_max) << "\n"
              << "max_end_to_end_km=" << format_sig9(r.max_end_to_end_km) << "\n"
              << "max_path_delay_s=" << format_sig9(r.max_path_delay_s) << "\n";
    return 0;
}

int cmd_montecarlo(Scenario sc, const std::string& at,
                   const std::string& target_name,
                   std::optional<std::uint64_t> seed,
                   std::optional<std::uint64_t> n, const std::string& dir) {
    McConfig cfg = sc.monte_carlo;
    if (seed) cfg.seed = *seed;
    if (n) cfg.n_samples = *n;
    sc.monte_carlo = cfg;

    McTarget target = McTarget::kLlo;
    if (target_name == "lsp") target = McTarget::kLsp;
    else if (target_name == "malapert") target = McTarget::kMalapert;
    else if (target_name != "llo")
        throw CLI::ValidationError("--target must be llo, lsp, or malapert");

    double t;
    if (at.rfind("t=", 0) == 0) {
        t = std::stod(at.substr(2));
    } else {
        const TimeseriesResult run = run_timeseries(sc);
        if (run.no_contact())
            throw ConfigError("no contact: cannot resolve extreme instants");
        const ExtremeReport rep = extremes(run.samples);
        ExtremeInstant which;
        if (at == "zmin") which = ExtremeInstant::kZMin;
        else if (at == "zmax") which = ExtremeInstant::kZMax;
        else if (at == "dpmin") which = ExtremeInstant::kDpMin;
        else if (at == "dpmax") which = ExtremeInstant::kDpMax;
        else if (at == "gtmmax") which = ExtremeInstant::kGtmMax;
        else if (at == "gtmmin") which = ExtremeInstant::kGtmMin;
        else
            throw CLI::ValidationError(
                "--at must be zmin|zmax|dpmin|dpmax|gtmmax|gtmmin|t=<s>");
        t = instant_time(rep, which);
    }

    const McStats stats = mc_end_to_end(sc, t, cfg, target);
    fs::create_directories(dir);
    const std::string hist_path =
        dir + "/mc_" + target_name + "_" + at + ".csv";
    write_histogram(stats, hist_path);
    std::cout << "t_s=" << format_sig9(t) << " n=" << cfg.n_samples
              << " seed=" << cfg.seed << "\nmean_w=" << format_sig9(stats.mean)
              << " std_w=" << format_sig9(stats.std_dev)
              << " min_w=" << format_sig9(stats.min)
              << " max_w=" << format_sig9(stats.max) << "\nhistogram: "
              << hist_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid FSO + RF lunar wireless power transfer simulator"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("-c,--config", config_path, "Scenario config file (JSON)");

    auto* p_prop = app.add_subcommand("propagate", "Two-body satellite state");
    std::string sat = "llo";
    double t_prop = 0.0;
    p_prop->add_option("--sat", sat, "llo or sps")
        ->check(CLI::IsMember({"llo", "sps"}));
    p_prop->add_option("--t", t_prop, "Scenario time [s]")->required();

    auto* p_vis = app.add_subcommand("visibility", "Per-link and common windows");

    auto* p_fso = app.add_subcommand("fso", "Single FSO link query");
    double z_km = 0.0, v_m = 0.0;
    p_fso->add_option("--z-km", z_km, "Line-of-sight range [km]")->required();
    p_fso->add_option("--v-m", v_m, "Radial pointing offset [m]");

    auto* p_rf = app.add_subcommand("rf", "Single RF link query");
    double d_km = 0.0, phi_deg = 0.0, pt_w = 0.0;
    p_rf->add_option("--d-km", d_km, "Hop length [km]")->required();
    p_rf->add_option("--phi-deg", phi_deg, "Transmitter off-boresight [deg]");
    p_rf->add_option("--pt-w", pt_w, "Transmit power [W]")->required();

    auto* p_chain = app.add_subcommand("chain", "Full pipeline with artifacts");
    std::string dir_flag;
    p_chain->add_option("-o,--out", dir_flag,
                        "Output directory (default $LWPT_OUT_DIR or .)");

    auto* p_mc = app.add_subcommand("montecarlo", "Pointing-error Monte Carlo");
    std::string at = "zmin", target = "llo", mc_dir_flag;
    std::optional<std::uint64_t> seed_opt, n_opt;
    p_mc->add_option("--at", at, "zmin|zmax|dpmin|dpmax|gtmmax|gtmmin|t=<s>")
        ->required();
    p_mc->add_option("--target", target, "llo|lsp|malapert")->required();
    p_mc->add_option("--seed", seed_opt, "RNG seed");
    p_mc->add_option("--n", n_opt, "Sample count");
    p_mc->add_option("-o,--out", mc_dir_flag, "Output directory");

    auto* p_rep = app.add_subcommand("report", "Extremes table");

    try {
        app.parse(argc, argv);
        const Scenario sc = load_or_default(config_path);
        if (*p_prop) return cmd_propagate(sc, sat, t_prop);
        if (*p_vis) return cmd_visibility(sc);
        if (*p_fso) return cmd_fso(sc, z_km, v_m);
        if (*p_rf) return cmd_rf(sc, d_km, phi_deg, pt_w);
        if (*p_chain) return cmd_chain(sc, out_dir(dir_flag));
        if (*p_mc)
            return cmd_montecarlo(sc, at, target, seed_opt, n_opt,
                                  out_dir(mc_dir_flag));
        if (*p_rep) return cmd_report(sc);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const QuadratureError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 4;
    }
}
