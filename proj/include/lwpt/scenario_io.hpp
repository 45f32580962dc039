#ifndef LWPT_SCENARIO_IO_HPP
#define LWPT_SCENARIO_IO_HPP

#include <cstdint>
#include <string>

#include "lwpt/chain.hpp"

namespace lwpt {

/// Configuration or validation failure with field context.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Loads a JSON scenario config. Missing sections take the published
 * defaults; unknown keys are rejected; all values are validated. An empty
 * file yields the full default scenario.
 */
Scenario load_config(const std::string& path);

/// Parses a config from a JSON string (empty string = defaults).
Scenario parse_config(const std::string& text);

/// Serializes a scenario back to its JSON document form.
std::string dump_config(const Scenario& scenario);

/// FNV-1a hash of the canonical config serialization.
std::uint64_t config_hash(const Scenario& scenario);

/**
 * Writes the time-series CSV. Header:
 * t_s, z_km, d_p_km, d_m_km, phi_Tm_rad, G_Tp_dB, G_Rp_dB, G_Tm_dB,
 * G_Rm_dB, P_Hl_W, P_Hp_W, P_Hm_W, vis_fso, vis_lsp, vis_mal.
 * Values use 9 significant digits; power fields of non-visible links are
 * left empty.
 */
void write_timeseries(const std::vector<ChainSample>& samples,
                      const std::string& path);

/// Histogram CSV with a "bin_center,density" header.
void write_histogram(const McStats& stats, const std::string& path);

/// Extremes report as a JSON document.
std::string extremes_json(const ExtremeReport& report,
                          const TimeseriesResult& run);
void write_extremes(const ExtremeReport& report, const TimeseriesResult& run,
                    const std::string& path);

/// Run manifest (seed, version, config hash) for bit-exact reproduction.
void write_manifest(const Scenario& scenario, const std::string& path);

/// Formats a double with 9 significant digits (CSV convention).
std::string format_sig9(double value);

}  // namespace lwpt

#endif
