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

#ifndef OAMCAP_EXPERIMENTS_HPP
#define OAMCAP_EXPERIMENTS_HPP

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "capacity.hpp"
#include "channel.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "noma.hpp"
#include "oam_mux.hpp"

namespace oamcap
{

enum class SweptVariable
{
    transmit_snr_db,
    normalized_ccu_distance
};

inline const char *swept_variable_token(SweptVariable variable)
{
    return variable == SweptVariable::transmit_snr_db ? "transmit_snr_db"
                                                      : "normalized_ccu_distance";
}

/// One scheme at one array size. The conventional baseline always evaluates
/// at a single element regardless of the requested mode count.
struct SchemeSpec
{
    Scheme scheme = Scheme::noma_oam_mdma;
    int mode_count = 4;
};

/// Fully resolved single-point evaluation: links, allocation, SINRs and the
/// capacity report, everything the breakdown views print.
struct SchemeEvaluation
{
    SchemeSpec spec;
    ModeSet modes;
    LinkChannel ccu_link;
    LinkChannel ceu_link;
    ModePowerAllocation allocation;
    SinrReport sinrs;
    std::vector<double> ccu_mu;
    std::vector<double> ceu_mu;
    CapacityReport report;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Builds both links for one scheme and runs the closed-form pipeline at the
/// configured operating point. The active mode set is taken from the config
/// when the scheme runs at the configured array size and defaults to the full
/// set otherwise (e.g. the reduced-mode companion scheme in a sweep).
inline SchemeEvaluation evaluate_scheme(const SystemConfig &cfg, SchemeSpec spec)
{
    const int n = spec.scheme == Scheme::conventional_noma ? 1 : spec.mode_count;
    detail::require(n >= 1, "evaluate_scheme: mode count must be >= 1");

    ModeSet modes = (n == cfg.mode_count) ? ModeSet(n, cfg.active_modes) : ModeSet::full(n);

    const PropagationParams params(cfg.wavelength_m, cfg.beta);
    const UcaGeometry ccu_geometry(n, cfg.tx_radius_m, cfg.rx_radius_m, cfg.ccu_distance_m);
    const UcaGeometry ceu_geometry(n, cfg.tx_radius_m, cfg.rx_radius_m, cfg.ceu_distance_m);

    LinkChannel ccu_link = build_link(params, ccu_geometry, cfg.phase_distance_mode);
    LinkChannel ceu_link = build_link(params, ceu_geometry, cfg.phase_distance_mode);

    const std::vector<double> reference_gains = detail::gains_at(
        cfg.allocation_reference == AllocationReference::ccu ? ccu_link : ceu_link, modes);

    ModePowerAllocation allocation =
        cfg.noise_variance
            ? allocation_with_noise(cfg.total_power, reference_gains, cfg.power_constraint,
                                    *cfg.noise_variance)
            : allocation_with_total_snr(cfg.total_power, reference_gains, cfg.power_constraint,
                                        db_to_linear(cfg.snr_db));

    const PowerSplit split(cfg.p_1, cfg.p_2);
    const std::vector<double> ccu_gains = detail::gains_at(ccu_link, modes);
    const std::vector<double> ceu_gains = detail::gains_at(ceu_link, modes);

    SchemeEvaluation eval{spec,           modes, std::move(ccu_link), std::move(ceu_link),
                          std::move(allocation), {},    {},                  {},
                          {}};
    eval.ccu_mu = detail::mu_at(eval.ccu_link, modes, cfg.mu_mode);
    eval.ceu_mu = detail::mu_at(eval.ceu_link, modes, cfg.mu_mode);
    eval.sinrs = make_sinr_report(eval.allocation, ccu_gains, ceu_gains, split);

    switch (spec.scheme)
    {
    case Scheme::noma_oam_mdma:
        eval.report = evaluate_noma(eval.ccu_link, eval.ceu_link, eval.allocation, split,
                                    modes, cfg.mu_mode);
        break;
    case Scheme::oma_oam_mdma:
        eval.report = evaluate_oma(eval.ccu_link, eval.ceu_link, eval.allocation, modes,
                                   cfg.mu_mode, cfg.oma_time_fraction);
        break;
    case Scheme::conventional_noma:
        eval.report = evaluate_conventional_noma(eval.ccu_link, eval.ceu_link, eval.allocation,
                                                 split, modes, cfg.mu_mode);
        break;
    }
    return eval;
}

struct SweepSpec
{
    SweptVariable swept_variable = SweptVariable::transmit_snr_db;
    std::vector<double> grid;
    SystemConfig fixed_params;
    std::vector<SchemeSpec> schemes;
    std::string preset_name;

    void validate() const
    {
        detail::require(grid.size() >= 2, "SweepSpec: grid must contain at least two points");
        for (std::size_t i = 1; i < grid.size(); ++i)
            detail::require(grid[i] > grid[i - 1], "SweepSpec: grid must be strictly increasing");
        if (swept_variable == SweptVariable::normalized_ccu_distance)
            detail::require(grid.front() > 0.0 && grid.back() < 1.0,
                            "SweepSpec: normalized distances must lie strictly inside (0, 1)");
        detail::require(!schemes.empty(), "SweepSpec: no schemes selected");
    }
};

struct SweepRow
{
    double swept_value = 0.0;
    Scheme scheme = Scheme::noma_oam_mdma;
    int mode_count = 1;
    double ccu_capacity = std::numeric_limits<double>::quiet_NaN();
    double ceu_capacity = std::numeric_limits<double>::quiet_NaN();
    double sum_capacity = std::numeric_limits<double>::quiet_NaN();
    std::string error_code; ///< empty on success
};

struct SweepResult
{
    SweptVariable swept_variable = SweptVariable::transmit_snr_db;
    std::vector<SweepRow> rows; ///< grid-major, schemes in spec order
    SystemConfig config;
    std::string fingerprint;
    std::string preset_name;
};

/// Named sweeps behind the result figures. fig2/fig3/fig4 sweep the transmit
/// SNR over snr_grid_db; fig5/fig6/fig7 sweep the normalized CCU distance
/// over distance_grid at the configured SNR. All of them evaluate the
/// standard scheme set (proposed at N = 4 and N = 2, the conventional
/// single-mode baseline, and the time-division baseline at N = 4 and N = 2);
/// which capacity column a figure plots is a rendering choice, so presets
/// sharing a sweep emit identical data.
inline SweepSpec figure_preset(const std::string &name, const SystemConfig &cfg)
{
    SweepSpec spec;
    spec.fixed_params = cfg;
    spec.preset_name = name;
    spec.schemes = {{Scheme::noma_oam_mdma, 4},
                    {Scheme::noma_oam_mdma, 2},
                    {Scheme::conventional_noma, 1},
                    {Scheme::oma_oam_mdma, 4},
                    {Scheme::oma_oam_mdma, 2}};
    if (name == "fig2" || name == "fig3" || name == "fig4")
    {
        spec.swept_variable = SweptVariable::transmit_snr_db;
        spec.grid = make_grid(cfg.snr_grid_db);
    }
    else if (name == "fig5" || name == "fig6" || name == "fig7")
    {
        spec.swept_variable = SweptVariable::normalized_ccu_distance;
        spec.grid = make_grid(cfg.distance_grid);
    }
    else
    {
        throw std::invalid_argument("unknown figure preset '" + name + "'");
    }
    return spec;
}

namespace detail
{
    inline SweepRow evaluate_cell(const SweepSpec &spec, std::size_t grid_index,
                                  std::size_t scheme_index)
    {
        SweepRow row;
        row.swept_value = spec.grid[grid_index];
        row.scheme = spec.schemes[scheme_index].scheme;
        row.mode_count = spec.schemes[scheme_index].scheme == Scheme::conventional_noma
                             ? 1
                             : spec.schemes[scheme_index].mode_count;

        SystemConfig cfg = spec.fixed_params;
        if (spec.swept_variable == SweptVariable::transmit_snr_db)
        {
            cfg.snr_db = row.swept_value;
            cfg.noise_variance.reset();
        }
        else
        {
            cfg.ccu_distance_m = row.swept_value * cfg.ceu_distance_m;
        }

        try
        {
            const SchemeEvaluation eval = evaluate_scheme(cfg, spec.schemes[scheme_index]);
            row.ccu_capacity = eval.report.ccu_capacity;
            row.ceu_capacity = eval.report.ceu_capacity;
            row.sum_capacity = eval.report.sum_capacity;
        }
        catch (const DegenerateModeError &)
        {
            row.error_code = "degenerate_mode";
        }
        catch (const std::invalid_argument &)
        {
            row.error_code = "invalid_geometry";
        }
        return row;
    }
} // namespace detail

/// Evaluates every (grid point, scheme) cell. Cells are independent, so the
/// worker count changes wall time only; rows land in fixed slots and the
/// result is identical for any worker count.
inline SweepResult run_sweep(const SweepSpec &spec, int workers = 1)
{
    spec.validate();
    const std::size_t scheme_count = spec.schemes.size();
    const std::size_t cell_count = spec.grid.size() * scheme_count;

    SweepResult result;
    result.swept_variable = spec.swept_variable;
    result.config = spec.fixed_params;
    result.fingerprint = config_fingerprint(spec.fixed_params);
    result.preset_name = spec.preset_name;
    result.rows.resize(cell_count);

    if (workers <= 1)
    {
        for (std::size_t cell = 0; cell < cell_count; ++cell)
            result.rows[cell] =
                detail::evaluate_cell(spec, cell / scheme_count, cell % scheme_count);
        return result;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            try
            {
                for (std::size_t cell = next.fetch_add(1); cell < cell_count;
                     cell = next.fetch_add(1))
                    result.rows[cell] =
                        detail::evaluate_cell(spec, cell / scheme_count, cell % scheme_count);
            }
            catch (...)
            {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    for (auto &thread : pool)
        thread.join();
    if (failure)
        std::rethrow_exception(failure);
    return result;
}

/// One oracle row per link and active mode: transform-domain gain against the
/// closed-form eigenvalue, plus the worst off-slot leakage.
struct OracleRow
{
    std::string link; ///< "ccu" or "ceu"
    int mode_count = 1;
    int mode = 0;
    std::complex<double> gain;
    std::complex<double> eigenvalue;
    double eigen_rel_delta = 0.0;
    double leakage = 0.0;
    double leakage_bound = 0.0;
    bool pass = false;
};

inline constexpr double oracle_leakage_tolerance = 1e-10;
inline constexpr double oracle_gain_tolerance = 1e-10;

struct OracleReport
{
    std::vector<OracleRow> rows;
    bool all_pass = true;
    double max_leakage_ratio = 0.0;
    SystemConfig config;
    std::string fingerprint;
};

/// Runs the signal-path oracle on both configured links. A row passes when
/// its leakage stays below oracle_leakage_tolerance times the strongest mode
/// gain of its link and its gain matches the eigenvalue to
/// oracle_gain_tolerance relative.
inline OracleReport run_oracle_report(const SystemConfig &cfg)
{
    OracleReport report;
    report.config = cfg;
    report.fingerprint = config_fingerprint(cfg);

    const PropagationParams params(cfg.wavelength_m, cfg.beta);
    const ModeSet modes(cfg.mode_count, cfg.active_modes);

    for (const auto &[label, distance] :
         {std::pair<const char *, double>{"ccu", cfg.ccu_distance_m},
          std::pair<const char *, double>{"ceu", cfg.ceu_distance_m}})
    {
        const UcaGeometry geometry(cfg.mode_count, cfg.tx_radius_m, cfg.rx_radius_m, distance);
        const LinkChannel link = build_link(params, geometry, cfg.phase_distance_mode);
        const DiagonalizationReport oracle = diagonalize_oracle(link, modes);

        double max_gain = 0.0;
        for (const auto &gain : oracle.gains)
            max_gain = std::max(max_gain, std::abs(gain));
        const double bound = oracle_leakage_tolerance * max_gain;

        for (std::size_t i = 0; i < oracle.gains.size(); ++i)
        {
            OracleRow row;
            row.link = label;
            row.mode_count = cfg.mode_count;
            row.mode = oracle.modes[i];
            row.gain = oracle.gains[i];
            row.eigenvalue = link.mode_eigenvalues[static_cast<std::size_t>(row.mode)];
            const double scale = std::abs(row.eigenvalue);
            row.eigen_rel_delta =
                scale > 0.0 ? std::abs(row.gain - row.eigenvalue) / scale
                            : std::abs(row.gain - row.eigenvalue);
            row.leakage = oracle.leakage[i];
            row.leakage_bound = bound;
            row.pass = row.leakage <= bound && row.eigen_rel_delta <= oracle_gain_tolerance;
            report.all_pass = report.all_pass && row.pass;
            if (max_gain > 0.0)
                report.max_leakage_ratio =
                    std::max(report.max_leakage_ratio, row.leakage / max_gain);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace oamcap

#endif
