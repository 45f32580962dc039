#include "lwpt/scenario_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lwpt/constants.hpp"

namespace lwpt {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ConfigError(where + ": " + what);
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* k : allowed)
            if (key == k) ok = true;
        if (!ok) fail(where, "unknown key \"" + key + "\"");
    }
}

double num(const json& obj, const std::string& where, const char* key,
           double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) fail(where, std::string(key) + " must be a number");
    return v.get<double>();
}

void parse_elements(const json& j, const std::string& where,
                    KeplerianElements& el) {
    check_keys(j, where,
               {"semi_major_axis_km", "eccentricity", "inclination_deg",
                "arg_perigee_deg", "raan_deg", "true_anomaly_deg", "epoch_s"});
    el.semi_major_axis = num(j, where, "semi_major_axis_km", el.semi_major_axis);
    el.eccentricity = num(j, where, "eccentricity", el.eccentricity);
    el.inclination = wrap_deg(num(j, where, "inclination_deg", el.inclination));
    el.arg_perigee = wrap_deg(num(j, where, "arg_perigee_deg", el.arg_perigee));
    el.raan = wrap_deg(num(j, where, "raan_deg", el.raan));
    el.true_anomaly =
        wrap_deg(num(j, where, "true_anomaly_deg", el.true_anomaly));
    el.epoch = num(j, where, "epoch_s", el.epoch);
}

void parse_site(const json& j, const std::string& where, GroundSite& site) {
    check_keys(j, where, {"name", "latitude_deg", "longitude_deg", "altitude_km"});
    if (j.contains("name")) site.name = j.at("name").get<std::string>();
    site.latitude = num(j, where, "latitude_deg", site.latitude);
    site.longitude = num(j, where, "longitude_deg", site.longitude);
    site.altitude = num(j, where, "altitude_km", site.altitude);
}

void parse_dish(const json& j, const std::string& where, DishAntenna& dish) {
    check_keys(j, where, {"diameter_m", "efficiency"});
    dish.diameter = num(j, where, "diameter_m", dish.diameter);
    dish.efficiency = num(j, where, "efficiency", dish.efficiency);
}

Scenario from_json(const json& root) {
    Scenario sc = Scenario::reference_default();
    check_keys(root, "config",
               {"body", "orbits", "sites", "fso", "rf", "pointing", "grid",
                "monte_carlo"});
    if (root.contains("body")) {
        const auto& j = root.at("body");
        check_keys(j, "body", {"mu_km3_s2", "radius_km", "rotation_period_s"});
        sc.body.mu = num(j, "body", "mu_km3_s2", sc.body.mu);
        sc.body.radius = num(j, "body", "radius_km", sc.body.radius);
        sc.body.rotation_period =
            num(j, "body", "rotation_period_s", sc.body.rotation_period);
    }
    if (root.contains("orbits")) {
        const auto& j = root.at("orbits");
        check_keys(j, "orbits", {"llo", "sps"});
        if (j.contains("llo")) parse_elements(j.at("llo"), "orbits.llo", sc.llo);
        if (j.contains("sps")) parse_elements(j.at("sps"), "orbits.sps", sc.sps);
    }
    if (root.contains("sites")) {
        const auto& j = root.at("sites");
        check_keys(j, "sites", {"lsp", "malapert"});
        if (j.contains("lsp")) parse_site(j.at("lsp"), "sites.lsp", sc.lsp);
        if (j.contains("malapert"))
            parse_site(j.at("malapert"), "sites.malapert", sc.malapert);
    }
    if (root.contains("fso")) {
        const auto& j = root.at("fso");
        check_keys(j, "fso",
                   {"input_power_w", "wavelength_m", "eta_eo",
                    "telescope_diameter_m", "divergence_rad", "eta_oe",
                    "array_radius_m"});
        sc.fso.input_power = num(j, "fso", "input_power_w", sc.fso.input_power);
        sc.fso.wavelength = num(j, "fso", "wavelength_m", sc.fso.wavelength);
        sc.fso.eta_eo = num(j, "fso", "eta_eo", sc.fso.eta_eo);
        sc.fso.telescope_diameter =
            num(j, "fso", "telescope_diameter_m", sc.fso.telescope_diameter);
        // Explicit divergence takes precedence; otherwise lambda / D_o.
        if (j.contains("divergence_rad")) {
            sc.fso.divergence = num(j, "fso", "divergence_rad", sc.fso.divergence);
        } else if (j.contains("wavelength_m") ||
                   j.contains("telescope_diameter_m")) {
            sc.fso.divergence = sc.fso.wavelength / sc.fso.telescope_diameter;
        }
        sc.fso.eta_oe = num(j, "fso", "eta_oe", sc.fso.eta_oe);
        sc.fso.array_radius = num(j, "fso", "array_radius_m", sc.fso.array_radius);
    }
    if (root.contains("rf")) {
        const auto& j = root.at("rf");
        check_keys(j, "rf",
                   {"frequency_hz", "eta_er", "eta_re", "transmitter", "receiver"});
        sc.rf.frequency = num(j, "rf", "frequency_hz", sc.rf.frequency);
        sc.rf.eta_er = num(j, "rf", "eta_er", sc.rf.eta_er);
        sc.rf.eta_re = num(j, "rf", "eta_re", sc.rf.eta_re);
        if (j.contains("transmitter"))
            parse_dish(j.at("transmitter"), "rf.transmitter", sc.rf.transmitter);
        if (j.contains("receiver"))
            parse_dish(j.at("receiver"), "rf.receiver", sc.rf.receiver);
    }
    if (root.contains("pointing")) {
        const auto& j = root.at("pointing");
        check_keys(j, "pointing", {"sigma_m", "beta_o_rad"});
        sc.pointing.sigma = num(j, "pointing", "sigma_m", sc.pointing.sigma);
        sc.pointing.beta_o = num(j, "pointing", "beta_o_rad", sc.pointing.beta_o);
    }
    if (root.contains("grid")) {
        const auto& j = root.at("grid");
        check_keys(j, "grid",
                   {"t0_s", "t1_s", "dt_s", "elevation_mask_deg",
                    "frame_offset_deg"});
        sc.t0 = num(j, "grid", "t0_s", sc.t0);
        sc.t1 = num(j, "grid", "t1_s", sc.t1);
        sc.dt = num(j, "grid", "dt_s", sc.dt);
        sc.elevation_mask_deg =
            num(j, "grid", "elevation_mask_deg", sc.elevation_mask_deg);
        sc.frame_offset_deg =
            num(j, "grid", "frame_offset_deg", sc.frame_offset_deg);
    }
    if (root.contains("monte_carlo")) {
        const auto& j = root.at("monte_carlo");
        check_keys(j, "monte_carlo", {"n_samples", "seed"});
        if (j.contains("n_samples"))
            sc.monte_carlo.n_samples = j.at("n_samples").get<std::uint64_t>();
        if (j.contains("seed"))
            sc.monte_carlo.seed = j.at("seed").get<std::uint64_t>();
    }
    try {
        sc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return sc;
}

json elements_json(const KeplerianElements& el) {
    return {{"semi_major_axis_km", el.semi_major_axis},
            {"eccentricity", el.eccentricity},
            {"inclination_deg", el.inclination},
            {"arg_perigee_deg", el.arg_perigee},
            {"raan_deg", el.raan},
            {"true_anomaly_deg", el.true_anomaly},
            {"epoch_s", el.epoch}};
}

json site_json(const GroundSite& s) {
    return {{"name", s.name},
            {"latitude_deg", s.latitude},
            {"longitude_deg", s.longitude},
            {"altitude_km", s.altitude}};
}

}  // namespace

Scenario parse_config(const std::string& text) {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    if (trimmed.empty()) return Scenario::reference_default();
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse failure: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be an object");
    return from_json(root);
}

Scenario load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const Scenario& sc) {
    json root = {
        {"body",
         {{"mu_km3_s2", sc.body.mu},
          {"radius_km", sc.body.radius},
          {"rotation_period_s", sc.body.rotation_period}}},
        {"orbits", {{"llo", elements_json(sc.llo)}, {"sps", elements_json(sc.sps)}}},
        {"sites", {{"lsp", site_json(sc.lsp)}, {"malapert", site_json(sc.malapert)}}},
        {"fso",
         {{"input_power_w", sc.fso.input_power},
          {"wavelength_m", sc.fso.wavelength},
          {"eta_eo", sc.fso.eta_eo},
          {"telescope_diameter_m", sc.fso.telescope_diameter},
          {"divergence_rad", sc.fso.divergence},
          {"eta_oe", sc.fso.eta_oe},
          {"array_radius_m", sc.fso.array_radius}}},
        {"rf",
         {{"frequency_hz", sc.rf.frequency},
          {"eta_er", sc.rf.eta_er},
          {"eta_re", sc.rf.eta_re},
          {"transmitter",
           {{"diameter_m", sc.rf.transmitter.diameter},
            {"efficiency", sc.rf.transmitter.efficiency}}},
          {"receiver",
           {{"diameter_m", sc.rf.receiver.diameter},
            {"efficiency", sc.rf.receiver.efficiency}}}}},
        {"pointing",
         {{"sigma_m", sc.pointing.sigma}, {"beta_o_rad", sc.pointing.beta_o}}},
        {"grid",
         {{"t0_s", sc.t0},
          {"t1_s", sc.t1},
          {"dt_s", sc.dt},
          {"elevation_mask_deg", sc.elevation_mask_deg},
          {"frame_offset_deg", sc.frame_offset_deg}}},
        {"monte_carlo",
         {{"n_samples", sc.monte_carlo.n_samples},
          {"seed", sc.monte_carlo.seed}}}};
    return root.dump(2) + "\n";
}

std::uint64_t config_hash(const Scenario& sc) {
    const std::string text = dump_config(sc);
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string format_sig9(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

namespace {

double to_db(double linear) { return 10.0 * std::log10(linear); }

std::string opt_field(const std::optional<double>& v) {
    return v ? format_sig9(*v) : std::string();
}

}  // namespace

void write_timeseries(const std::vector<ChainSample>& samples,
                      const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "t_s,z_km,d_p_km,d_m_km,phi_Tm_rad,G_Tp_dB,G_Rp_dB,G_Tm_dB,G_Rm_dB,"
           "P_Hl_W,P_Hp_W,P_Hm_W,vis_fso,vis_lsp,vis_mal\n";
    for (const auto& s : samples) {
        out << format_sig9(s.t) << ',' << format_sig9(s.z) << ','
            << format_sig9(s.d_p) << ',' << format_sig9(s.d_m) << ','
            << format_sig9(s.phi_tm) << ',' << format_sig9(to_db(s.g_tp)) << ','
            << format_sig9(to_db(s.g_rp)) << ',' << format_sig9(to_db(s.g_tm))
            << ',' << format_sig9(to_db(s.g_rm)) << ',' << opt_field(s.p_h_l)
            << ',' << opt_field(s.p_h_p) << ',' << opt_field(s.p_h_m) << ','
            << (s.vis_fso ? 1 : 0) << ',' << (s.vis_lsp ? 1 : 0) << ','
            << (s.vis_mal ? 1 : 0) << '\n';
    }
}

void write_histogram(const McStats& stats, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "bin_center,density\n";
    for (const auto& [center, density] : stats.histogram)
        out << format_sig9(center) << ',' << format_sig9(density) << '\n';
}

std::string extremes_json(const ExtremeReport& r, const TimeseriesResult& run) {
    const auto windows_json = [](const std::vector<VisibilityWindow>& ws) {
        json arr = json::array();
        for (const auto& w : ws)
            arr.push_back({{"start_s", w.start}, {"end_s", w.end}});
        return arr;
    };
    const auto entry = [](const ExtremeEntry& e) {
        return json{{"t_s", e.t}, {"value", e.value}};
    };
    json root = {
        {"windows",
         {{"fso", windows_json(run.fso_windows)},
          {"lsp", windows_json(run.lsp_windows)},
          {"malapert", windows_json(run.mal_windows)},
          {"common", windows_json(run.common_windows)}}},
        {"z_km", {{"min", entry(r.z_min)}, {"max", entry(r.z_max)}}},
        {"d_p_km", {{"min", entry(r.d_p_min)}, {"max", entry(r.d_p_max)}}},
        {"g_tm_linear", {{"min", entry(r.g_tm_min)}, {"max", entry(r.g_tm_max)}}},
        {"g_tm_db",
         {{"min", to_db(r.g_tm_min.value)}, {"max", to_db(r.g_tm_max.value)}}},
        {"p_h_l_w",
         {{"at_z_min", r.p_h_l_at_z_min}, {"at_z_max", r.p_h_l_at_z_max}}},
        {"p_h_p_w",
         {{"at_d_p_min", r.p_h_p_at_d_p_min}, {"at_d_p_max", r.p_h_p_at_d_p_max}}},
        {"p_h_m_w",
         {{"at_g_tm_max", r.p_h_m_at_g_tm_max},
          {"at_g_tm_min", r.p_h_m_at_g_tm_min}}},
        {"max_end_to_end_km", r.max_end_to_end_km},
        {"max_path_delay_s", r.max_path_delay_s}};
    return root.dump(2) + "\n";
}

void write_extremes(const ExtremeReport& report, const TimeseriesResult& run,
                    const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << extremes_json(report, run);
}

void write_manifest(const Scenario& sc, const std::string& path) {
    char hash[19];
    std::snprintf(hash, sizeof(hash), "0x%016llx",
                  static_cast<unsigned long long>(config_hash(sc)));
    json root = {{"version", "0.1.0"},
                 {"seed", sc.monte_carlo.seed},
                 {"config_hash", hash},
                 {"config", json::parse(dump_config(sc))}};
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << root.dump(2) << "\n";
}

}  // namespace lwpt
