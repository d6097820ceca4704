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

#ifndef OAMCAP_CLI_HPP
#define OAMCAP_CLI_HPP

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "config.hpp"
#include "experiments.hpp"
#include "report_io.hpp"

namespace oamcap
{

namespace clidetail
{
    inline SystemConfig resolve_config(const std::string &config_path,
                                       const std::vector<std::string> &overrides)
    {
        if (config_path.empty())
            return load_config("", overrides);
        return load_config_file(config_path, overrides);
    }

    inline bool write_file(const std::string &path, const std::string &content)
    {
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file)
            return false;
        file << content;
        return static_cast<bool>(file.flush());
    }

    inline void print_issues(const ValidationError &error)
    {
        std::cerr << "error: invalid configuration\n";
        for (const auto &issue : error.issues())
            std::cerr << "  - " << issue << "\n";
    }

    inline std::string pad(const std::string &text, std::size_t width)
    {
        return text.size() >= width ? text : text + std::string(width - text.size(), ' ');
    }

    inline void print_point_report(const SystemConfig &cfg)
    {
        const std::string fingerprint = config_fingerprint(cfg);
        std::string out;
        out += "# oamcap point\n";
        iodetail::append_config_echo(out, cfg, fingerprint);
        std::cout << out;

        const std::vector<SchemeSpec> schemes = {{Scheme::noma_oam_mdma, cfg.mode_count},
                                                 {Scheme::oma_oam_mdma, cfg.mode_count},
                                                 {Scheme::conventional_noma, 1}};
        constexpr std::size_t w = 19;
        for (const SchemeSpec &spec : schemes)
        {
            const SchemeEvaluation eval = evaluate_scheme(cfg, spec);
            std::cout << "\nscheme = " << scheme_token(eval.report.scheme)
                      << "  mode_count = " << eval.report.mode_count << "\n";
            std::cout << pad("mode", 6) << pad("P_l", w) << pad("rho_l", w)
                      << pad("abs_xi_ccu", w) << pad("abs_xi_ceu", w) << pad("sinr_x1_ue1", w)
                      << pad("sinr_x2_ue1", w) << pad("sinr_x2_ue2", w) << pad("ccu_bits", w)
                      << pad("ceu_bits", w) << "\n";
            for (std::size_t i = 0; i < eval.modes.size(); ++i)
            {
                const int mode = eval.modes.active_modes[i];
                std::cout
                    << pad(std::to_string(mode), 6)
                    << pad(format_double(eval.allocation.per_mode_power[i]), w)
                    << pad(format_double(eval.allocation.per_mode_snr[i]), w)
                    << pad(format_double(std::abs(eval.ccu_link.mode_eigenvalues[mode])), w)
                    << pad(format_double(std::abs(eval.ceu_link.mode_eigenvalues[mode])), w)
                    << pad(format_double(eval.sinrs.x1_at_ue1[i]), w)
                    << pad(format_double(eval.sinrs.x2_at_ue1[i]), w)
                    << pad(format_double(eval.sinrs.x2_at_ue2[i]), w)
                    << pad(format_double(eval.report.ccu_per_mode[i]), w)
                    << pad(format_double(eval.report.ceu_per_mode[i]), w) << "\n";
            }
            std::cout << "totals: ccu = " << format_double(eval.report.ccu_capacity)
                      << "  ceu = " << format_double(eval.report.ceu_capacity)
                      << "  sum = " << format_double(eval.report.sum_capacity) << "\n";
        }
    }
} // namespace clidetail

inline int run_cli(int argc, const char *const *argv)
{
    CLI::App app{"capacity sweeps for NOMA downlinks multiplexed over OAM modes "
                 "between uniform circular arrays"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    std::string figure_name;
    std::string out_path;
    int workers = 1;

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--config", config_path, "config file (key = value lines)");
        cmd->add_option("--set", overrides, "inline override, key=value")
            ->take_all()
            ->expected(-1);
    };

    CLI::App *figure = app.add_subcommand("figure", "run a named sweep and write its CSV");
    figure->add_option("name", figure_name, "one of fig2..fig7")
        ->required()
        ->check(CLI::IsMember({"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"}));
    figure->add_option("--out", out_path, "output CSV path")->required();
    figure->add_option("--workers", workers, "concurrent sweep workers")
        ->check(CLI::Range(1, 256));
    add_common(figure);

    CLI::App *point = app.add_subcommand("point", "evaluate one operating point and print "
                                                  "the per-mode breakdown");
    add_common(point);

    CLI::App *oracle = app.add_subcommand("oracle", "run the diagonalization oracle and "
                                                    "write its CSV");
    oracle->add_option("--out", out_path, "output CSV path")->required();
    add_common(oracle);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try
    {
        const SystemConfig cfg = clidetail::resolve_config(config_path, overrides);
        if (figure->parsed())
        {
            const SweepResult result = run_sweep(figure_preset(figure_name, cfg), workers);
            if (!clidetail::write_file(out_path, render_sweep_csv(result)))
            {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return exit_runtime;
            }
            return exit_ok;
        }
        if (point->parsed())
        {
            clidetail::print_point_report(cfg);
            return exit_ok;
        }
        const OracleReport report = run_oracle_report(cfg);
        if (!clidetail::write_file(out_path, render_oracle_csv(report)))
        {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return exit_runtime;
        }
        if (!report.all_pass)
        {
            std::cerr << "oracle: leakage or gain bound violated (max leakage ratio "
                      << format_double(report.max_leakage_ratio) << ")\n";
            return exit_oracle_failure;
        }
        return exit_ok;
    }
    catch (const ValidationError &e)
    {
        clidetail::print_issues(e);
        return exit_validation;
    }
    catch (const DegenerateModeError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}

} // namespace oamcap

#endif
