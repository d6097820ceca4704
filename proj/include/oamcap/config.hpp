// SPDX-License-Identifier: Apache-2.0
//
// oamcap: capacity simulator for power-domain NOMA downlinks multiplexed
// over orbital-angular-momentum modes between uniform circular arrays.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef OAMCAP_CONFIG_HPP
#define OAMCAP_CONFIG_HPP

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "capacity.hpp"
#include "channel.hpp"
#include "errors.hpp"
#include "noma.hpp"
#include "textio.hpp"

namespace oamcap
{

/// Which link's mode gains feed the per-mode power weighting. The cell-edge
/// user is the default: the weaker link dominates fairness, and it keeps the
/// allocation independent of the CCU position.
enum class AllocationReference
{
    ccu,
    ceu
};

/// Inclusive arithmetic grid, rendered and parsed as "start:stop:step".
struct GridSpec
{
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;
};

inline std::vector<double> make_grid(const GridSpec &grid)
{
    const int count = static_cast<int>(std::floor((grid.stop - grid.start) / grid.step + 1.5));
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count > 0 ? count : 0));
    for (int i = 0; i < count; ++i)
        values.push_back(grid.start + grid.step * i);
    return values;
}

/// Full scenario description. Defaults are the simulated operating point:
/// 0.03 m wavelength, CCU at 500 wavelengths, CEU at 1000 wavelengths,
/// four modes, unit power, 0.4/0.6 split, 25 dB transmit SNR. The array
/// radii default to 0.33 m (11 wavelengths); they are free parameters of the
/// scenario and every published output records them.
struct SystemConfig
{
    double wavelength_m = 0.03;
    double beta = 1.0;
    double tx_radius_m = 0.33;
    double rx_radius_m = 0.33;
    double ccu_distance_m = 15.0;
    double ceu_distance_m = 30.0;
    int mode_count = 4;
    std::vector<int> active_modes = {0, 1, 2, 3};
    double total_power = 1.0;
    double p_1 = 0.4;
    double p_2 = 0.6;
    double snr_db = 25.0;
    std::optional<double> noise_variance;
    PhaseDistanceMode phase_distance_mode = PhaseDistanceMode::cosine;
    PowerConstraint power_constraint = PowerConstraint::sum_of_squares;
    AllocationReference allocation_reference = AllocationReference::ceu;
    MuMode mu_mode = MuMode::singular_value;
    OmaTimeFraction oma_time_fraction = OmaTimeFraction::literal_one_eighth;
    GridSpec snr_grid_db{0.0, 40.0, 5.0};
    GridSpec distance_grid{0.1, 0.9, 0.1};
};

namespace cfgdetail
{
    inline const char *token(PhaseDistanceMode v)
    {
        return v == PhaseDistanceMode::cosine ? "cosine" : "literal";
    }
    inline const char *token(PowerConstraint v)
    {
        return v == PowerConstraint::sum_of_squares ? "sum_of_squares" : "sum";
    }
    inline const char *token(AllocationReference v)
    {
        return v == AllocationReference::ccu ? "ccu" : "ceu";
    }
    inline const char *token(MuMode v)
    {
        return v == MuMode::singular_value ? "singular_value" : "unity";
    }
    inline const char *token(OmaTimeFraction v)
    {
        return v == OmaTimeFraction::literal_one_eighth ? "literal_one_eighth" : "generalized";
    }

    inline std::string int_list(const std::vector<int> &values)
    {
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i)
        {
            if (i)
                out += ',';
            out += std::to_string(values[i]);
        }
        return out;
    }

    inline std::string grid_text(const GridSpec &grid)
    {
        return format_double(grid.start) + ":" + format_double(grid.stop) + ":" +
               format_double(grid.step);
    }

    inline bool parse_double(std::string_view text, double &out)
    {
        const char *begin = text.data();
        const char *end = begin + text.size();
        const auto result = std::from_chars(begin, end, out);
        return result.ec == std::errc{} && result.ptr == end;
    }

    inline bool parse_int(std::string_view text, int &out)
    {
        const char *begin = text.data();
        const char *end = begin + text.size();
        const auto result = std::from_chars(begin, end, out);
        return result.ec == std::errc{} && result.ptr == end;
    }
} // namespace cfgdetail

/// Canonical key = value rendering of the effective configuration, one entry
/// per documented key, fixed order. This is what output files echo and what
/// the fingerprint hashes.
inline std::vector<std::string> effective_config_lines(const SystemConfig &cfg)
{
    using namespace cfgdetail;
    std::vector<std::string> lines;
    lines.push_back("wavelength_m = " + format_double(cfg.wavelength_m));
    lines.push_back("beta = " + format_double(cfg.beta));
    lines.push_back("tx_radius_m = " + format_double(cfg.tx_radius_m));
    lines.push_back("rx_radius_m = " + format_double(cfg.rx_radius_m));
    lines.push_back("ccu_distance_m = " + format_double(cfg.ccu_distance_m));
    lines.push_back("ceu_distance_m = " + format_double(cfg.ceu_distance_m));
    lines.push_back("mode_count = " + std::to_string(cfg.mode_count));
    lines.push_back("active_modes = " + int_list(cfg.active_modes));
    lines.push_back("total_power = " + format_double(cfg.total_power));
    lines.push_back("p_1 = " + format_double(cfg.p_1));
    lines.push_back("p_2 = " + format_double(cfg.p_2));
    if (cfg.noise_variance)
        lines.push_back("noise_variance = " + format_double(*cfg.noise_variance));
    else
        lines.push_back("snr_db = " + format_double(cfg.snr_db));
    lines.push_back(std::string("phase_distance_mode = ") + token(cfg.phase_distance_mode));
    lines.push_back(std::string("power_constraint = ") + token(cfg.power_constraint));
    lines.push_back(std::string("allocation_reference = ") + token(cfg.allocation_reference));
    lines.push_back(std::string("mu_mode = ") + token(cfg.mu_mode));
    lines.push_back(std::string("oma_time_fraction = ") + token(cfg.oma_time_fraction));
    lines.push_back("snr_grid_db = " + grid_text(cfg.snr_grid_db));
    lines.push_back("distance_grid = " + grid_text(cfg.distance_grid));
    return lines;
}

inline std::string config_fingerprint(const SystemConfig &cfg)
{
    std::string joined;
    for (const auto &line : effective_config_lines(cfg))
    {
        joined += line;
        joined += '\n';
    }
    return to_hex16(fnv1a64(joined));
}

namespace cfgdetail
{
    struct Parser
    {
        SystemConfig cfg;
        std::set<std::string> explicit_keys;
        std::vector<std::string> issues;

        void fail(std::string_view key, const std::string &what)
        {
            issues.push_back(std::string(key) + ": " + what);
        }

        void set_double(std::string_view key, std::string_view value, double &field)
        {
            if (!parse_double(value, field))
                fail(key, "cannot parse '" + std::string(value) + "' as a number");
        }

        void set_grid(std::string_view key, std::string_view value, GridSpec &field)
        {
            const auto parts = split(value, ':');
            GridSpec grid;
            if (parts.size() != 3 || !parse_double(trim(parts[0]), grid.start) ||
                !parse_double(trim(parts[1]), grid.stop) ||
                !parse_double(trim(parts[2]), grid.step))
            {
                fail(key, "expected start:stop:step, got '" + std::string(value) + "'");
                return;
            }
            field = grid;
        }

        template <typename Enum>
        void set_enum(std::string_view key, std::string_view value, Enum &field,
                      std::initializer_list<std::pair<const char *, Enum>> tokens)
        {
            for (const auto &[name, v] : tokens)
                if (value == name)
                {
                    field = v;
                    return;
                }
            std::string expected;
            for (const auto &[name, v] : tokens)
            {
                if (!expected.empty())
                    expected += "|";
                expected += name;
            }
            fail(key, "unknown value '" + std::string(value) + "' (expected " + expected + ")");
        }

        void apply(std::string_view key, std::string_view value)
        {
            explicit_keys.insert(std::string(key));
            if (key == "wavelength_m")
                set_double(key, value, cfg.wavelength_m);
            else if (key == "beta")
                set_double(key, value, cfg.beta);
            else if (key == "tx_radius_m")
                set_double(key, value, cfg.tx_radius_m);
            else if (key == "rx_radius_m")
                set_double(key, value, cfg.rx_radius_m);
            else if (key == "ccu_distance_m")
                set_double(key, value, cfg.ccu_distance_m);
            else if (key == "ceu_distance_m")
                set_double(key, value, cfg.ceu_distance_m);
            else if (key == "mode_count")
            {
                if (!parse_int(value, cfg.mode_count))
                    fail(key, "cannot parse '" + std::string(value) + "' as an integer");
            }
            else if (key == "active_modes")
            {
                cfg.active_modes.clear();
                if (!trim(value).empty())
                    for (const auto part : split(value, ','))
                    {
                        int mode = 0;
                        if (!parse_int(trim(part), mode))
                        {
                            fail(key, "cannot parse '" + std::string(trim(part)) + "' as an integer");
                            return;
                        }
                        cfg.active_modes.push_back(mode);
                    }
            }
            else if (key == "total_power")
                set_double(key, value, cfg.total_power);
            else if (key == "p_1")
                set_double(key, value, cfg.p_1);
            else if (key == "p_2")
                set_double(key, value, cfg.p_2);
            else if (key == "snr_db")
                set_double(key, value, cfg.snr_db);
            else if (key == "noise_variance")
            {
                double sigma2 = 0.0;
                set_double(key, value, sigma2);
                cfg.noise_variance = sigma2;
            }
            else if (key == "phase_distance_mode")
                set_enum(key, value, cfg.phase_distance_mode,
                         {{"cosine", PhaseDistanceMode::cosine},
                          {"literal", PhaseDistanceMode::literal}});
            else if (key == "power_constraint")
                set_enum(key, value, cfg.power_constraint,
                         {{"sum_of_squares", PowerConstraint::sum_of_squares},
                          {"sum", PowerConstraint::sum}});
            else if (key == "allocation_reference")
                set_enum(key, value, cfg.allocation_reference,
                         {{"ccu", AllocationReference::ccu}, {"ceu", AllocationReference::ceu}});
            else if (key == "mu_mode")
                set_enum(key, value, cfg.mu_mode,
                         {{"singular_value", MuMode::singular_value}, {"unity", MuMode::unity}});
            else if (key == "oma_time_fraction")
                set_enum(key, value, cfg.oma_time_fraction,
                         {{"literal_one_eighth", OmaTimeFraction::literal_one_eighth},
                          {"generalized", OmaTimeFraction::generalized}});
            else if (key == "snr_grid_db")
                set_grid(key, value, cfg.snr_grid_db);
            else if (key == "distance_grid")
                set_grid(key, value, cfg.distance_grid);
            else
                fail(key, "unknown key");
        }

        void apply_line(std::string_view line, const std::string &where)
        {
            const std::string_view stripped = trim(line);
            if (stripped.empty() || stripped.front() == '#')
                return;
            const std::size_t eq = stripped.find('=');
            if (eq == std::string_view::npos)
            {
                issues.push_back(where + ": expected key = value, got '" +
                                 std::string(stripped) + "'");
                return;
            }
            apply(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
        }

        bool is_explicit(const char *key) const { return explicit_keys.count(key) != 0; }

        void check_positive(const char *key, double value)
        {
            if (!(std::isfinite(value) && value > 0.0))
                fail(key, "must be a positive finite number");
        }

        void validate()
        {
            check_positive("wavelength_m", cfg.wavelength_m);
            check_positive("beta", cfg.beta);
            check_positive("tx_radius_m", cfg.tx_radius_m);
            check_positive("rx_radius_m", cfg.rx_radius_m);
            check_positive("ccu_distance_m", cfg.ccu_distance_m);
            check_positive("ceu_distance_m", cfg.ceu_distance_m);

            const double radius_sum = cfg.tx_radius_m + cfg.rx_radius_m;
            if (cfg.ccu_distance_m > 0.0 && !(cfg.ccu_distance_m > radius_sum))
                fail("ccu_distance_m", "must exceed tx_radius_m + rx_radius_m (far-field placement)");
            if (cfg.ceu_distance_m > 0.0 && !(cfg.ceu_distance_m > radius_sum))
                fail("ceu_distance_m", "must exceed tx_radius_m + rx_radius_m (far-field placement)");

            if (cfg.mode_count < 1)
                fail("mode_count", "must be >= 1");
            else if (!is_explicit("active_modes"))
            {
                cfg.active_modes.clear();
                for (int l = 0; l < cfg.mode_count; ++l)
                    cfg.active_modes.push_back(l);
            }

            if (cfg.active_modes.empty())
                fail("active_modes", "must not be empty");
            std::set<int> seen;
            for (int mode : cfg.active_modes)
            {
                if (mode < 0 || mode >= cfg.mode_count)
                    fail("active_modes", "mode " + std::to_string(mode) +
                                             " outside [0, mode_count)");
                if (!seen.insert(mode).second)
                    fail("active_modes", "duplicate mode " + std::to_string(mode));
            }

            if (!(std::isfinite(cfg.total_power) && cfg.total_power >= 0.0))
                fail("total_power", "must be a non-negative finite number");

            if (!(cfg.p_1 > 0.0 && cfg.p_1 < 1.0))
                fail("p_1", "must lie in (0, 1)");
            if (!(cfg.p_2 > 0.0 && cfg.p_2 < 1.0))
                fail("p_2", "must lie in (0, 1)");
            if (std::isfinite(cfg.p_1) && std::isfinite(cfg.p_2))
            {
                if (std::abs(cfg.p_1 + cfg.p_2 - 1.0) > 1e-12)
                    fail("p_1", "p_1 + p_2 must equal 1");
                if (!(cfg.p_1 < cfg.p_2))
                    fail("p_1", "NOMA ordering requires p_1 < p_2");
            }

            if (!std::isfinite(cfg.snr_db))
                fail("snr_db", "must be finite");
            if (cfg.noise_variance && !(*cfg.noise_variance > 0.0 &&
                                        std::isfinite(*cfg.noise_variance)))
                fail("noise_variance", "must be a positive finite number");
            if (is_explicit("snr_db") && is_explicit("noise_variance"))
                fail("snr_db", "snr_db and noise_variance are mutually exclusive");

            validate_grid("snr_grid_db", cfg.snr_grid_db, false);
            validate_grid("distance_grid", cfg.distance_grid, true);
        }

        void validate_grid(const char *key, const GridSpec &grid, bool unit_interval)
        {
            if (!(std::isfinite(grid.start) && std::isfinite(grid.stop) &&
                  std::isfinite(grid.step) && grid.step > 0.0 && grid.start < grid.stop))
            {
                fail(key, "requires start < stop and step > 0");
                return;
            }
            if (make_grid(grid).size() < 2)
                fail(key, "must contain at least two points");
            if (unit_interval && !(grid.start > 0.0 && grid.stop < 1.0))
                fail(key, "values must lie strictly inside (0, 1)");
        }
    };
} // namespace cfgdetail

/// Parses the line-oriented "key = value" format ('#' starts a comment line)
/// and applies inline overrides of the same shape on top. All violations are
/// collected into a single ValidationError.
inline SystemConfig load_config(const std::string &content,
                                const std::vector<std::string> &overrides = {})
{
    cfgdetail::Parser parser;
    std::size_t line_number = 0;
    std::istringstream stream(content);
    for (std::string line; std::getline(stream, line);)
        parser.apply_line(line, "line " + std::to_string(++line_number));
    for (const auto &entry : overrides)
        parser.apply_line(entry, "override '" + entry + "'");
    parser.validate();
    if (!parser.issues.empty())
        throw ValidationError(std::move(parser.issues));
    return parser.cfg;
}

inline SystemConfig load_config_file(const std::string &path,
                                     const std::vector<std::string> &overrides = {})
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw ValidationError({"config file '" + path + "' is not readable"});
    std::ostringstream content;
    content << file.rdbuf();
    return load_config(content.str(), overrides);
}

} // namespace oamcap

#endif
