#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lwpt/scenario_io.hpp"

using namespace lwpt;
namespace fs = std::filesystem;

namespace {

fs::path tmp_file(const std::string& name) {
    return fs::temp_directory_path() / ("lwpt_test_" + name);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("empty or whitespace config yields the default scenario") {
    const Scenario def = Scenario::reference_default();
    CHECK(config_hash(parse_config("")) == config_hash(def));
    CHECK(config_hash(parse_config("  \n\t ")) == config_hash(def));
}

TEST_CASE("config round trip is lossless") {
    Scenario sc = Scenario::reference_default();
    sc.fso.input_power = 2e6;
    sc.rf.receiver.diameter = 35.0;
    sc.monte_carlo.seed = 99;
    sc.dt = 5.0;
    const Scenario back = parse_config(dump_config(sc));
    CHECK(config_hash(back) == config_hash(sc));
    CHECK(back.fso.input_power == 2e6);
    CHECK(back.rf.receiver.diameter == 35.0);
    CHECK(back.monte_carlo.seed == 99);
}

TEST_CASE("partial configs overlay the defaults") {
    const Scenario sc =
        parse_config(R"({"fso": {"input_power_w": 5e5}, "grid": {"dt_s": 1}})");
    CHECK(sc.fso.input_power == 5e5);
    CHECK(sc.dt == 1.0);
    // untouched sections keep the published defaults
    CHECK(sc.rf.frequency == 2.5e9);
    CHECK(sc.llo.semi_major_axis == 1837.4);
    CHECK(sc.frame_offset_deg == Scenario::reference_default().frame_offset_deg);
}

TEST_CASE("divergence handling: explicit value wins, else lambda over D") {
    const Scenario a =
        parse_config(R"({"fso": {"divergence_rad": 5e-6}})");
    CHECK(a.fso.divergence == 5e-6);
    const Scenario b =
        parse_config(R"({"fso": {"telescope_diameter_m": 0.5}})");
    CHECK(b.fso.divergence == doctest::Approx(1064e-9 / 0.5));
    // untouched fso keeps the published divergence
    CHECK(parse_config("{}").fso.divergence == 3.547e-6);
}

TEST_CASE("malformed input is rejected with ConfigError") {
    CHECK_THROWS_AS(parse_config("{ not json"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1,2,3]"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"fso": {"bogus_key": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"typo_section": {}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"fso": {"eta_eo": "high"}})"), ConfigError);
    // values that fail physical validation
    CHECK_THROWS_AS(parse_config(R"({"orbits": {"llo": {"eccentricity": 2}}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"dt_s": 0}})"), ConfigError);
}

TEST_CASE("load_config reads files and fails loudly on missing paths") {
    const fs::path p = tmp_file("cfg.json");
    std::ofstream(p) << R"({"monte_carlo": {"seed": 123}})";
    CHECK(load_config(p.string()).monte_carlo.seed == 123);
    fs::remove(p);
    CHECK_THROWS_AS(load_config(p.string()), ConfigError);
}

TEST_CASE("config hash is stable and sensitive") {
    const Scenario a = Scenario::reference_default();
    Scenario b = a;
    CHECK(config_hash(a) == config_hash(b));
    b.monte_carlo.seed = 2;
    CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("format_sig9 keeps 9 significant digits") {
    CHECK(format_sig9(0.0) == "0");
    CHECK(format_sig9(1234.56789012) == "1234.56789");
    CHECK(format_sig9(1.23456789012e-7) == "1.23456789e-07");
    CHECK(format_sig9(-5.0) == "-5");
}

TEST_CASE("timeseries CSV: header, schema, and empty power fields") {
    ChainSample visible;
    visible.t = 10.0;
    visible.z = 500.0;
    visible.d_p = 120.0;
    visible.d_m = 130.0;
    visible.phi_tm = 0.05;
    visible.g_tp = visible.g_rp = visible.g_tm = visible.g_rm = 100.0;
    visible.vis_fso = visible.vis_lsp = visible.vis_mal = true;
    visible.p_h_l = 3.3e5;
    visible.p_h_p = 20.0;
    visible.p_h_m = 0.5;
    ChainSample dark;
    dark.t = 20.0;
    dark.g_tp = dark.g_rp = dark.g_tm = dark.g_rm = 100.0;

    const fs::path p = tmp_file("ts.csv");
    write_timeseries({visible, dark}, p.string());
    std::ifstream in(p);
    std::string header, row1, row2;
    std::getline(in, header);
    std::getline(in, row1);
    std::getline(in, row2);
    CHECK(header ==
          "t_s,z_km,d_p_km,d_m_km,phi_Tm_rad,G_Tp_dB,G_Rp_dB,G_Tm_dB,G_Rm_dB,"
          "P_Hl_W,P_Hp_W,P_Hm_W,vis_fso,vis_lsp,vis_mal");
    const auto f1 = split(row1, ',');
    const auto f2 = split(row2, ',');
    REQUIRE(f1.size() == 15);
    REQUIRE(f2.size() == 15);
    CHECK(f1[0] == "10");
    CHECK(f1[5] == "20");  // 100 in linear is 20 dB
    CHECK(f1[9] == "330000");
    CHECK(f1[12] == "1");
    // dark sample: powers empty, visibility zero
    CHECK(f2[9].empty());
    CHECK(f2[10].empty());
    CHECK(f2[11].empty());
    CHECK(f2[12] == "0");
    fs::remove(p);
}

TEST_CASE("CSV writing is byte-identical across runs") {
    Scenario sc = Scenario::reference_default();
    sc.t1 = 2200.0;  // cover the pass, keep the test quick
    const TimeseriesResult run = run_timeseries(sc);
    const fs::path p1 = tmp_file("ts1.csv"), p2 = tmp_file("ts2.csv");
    write_timeseries(run.samples, p1.string());
    write_timeseries(run_timeseries(sc).samples, p2.string());
    CHECK(slurp(p1) == slurp(p2));
    fs::remove(p1);
    fs::remove(p2);
}

TEST_CASE("histogram CSV") {
    McStats stats;
    stats.histogram = {{0.25, 0.5}, {0.75, 1.5}};
    const fs::path p = tmp_file("hist.csv");
    write_histogram(stats, p.string());
    CHECK(slurp(p) == "bin_center,density\n0.25,0.5\n0.75,1.5\n");
    fs::remove(p);
}

TEST_CASE("extremes and manifest JSON documents are well-formed") {
    Scenario sc = Scenario::reference_default();
    sc.t1 = 2200.0;
    const TimeseriesResult run = run_timeseries(sc);
    const ExtremeReport rep = extremes(run.samples);
    const std::string doc = extremes_json(rep, run);
    CHECK(doc.find("\"z_km\"") != std::string::npos);
    CHECK(doc.find("\"common\"") != std::string::npos);
    CHECK(doc.find("max_path_delay_s") != std::string::npos);

    const fs::path p = tmp_file("manifest.json");
    write_manifest(sc, p.string());
    const std::string manifest = slurp(p);
    CHECK(manifest.find("\"version\"") != std::string::npos);
    CHECK(manifest.find("\"seed\"") != std::string::npos);
    CHECK(manifest.find("\"config_hash\"") != std::string::npos);
    fs::remove(p);
}
