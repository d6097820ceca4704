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

#ifndef OAMCAP_REPORT_IO_HPP
#define OAMCAP_REPORT_IO_HPP

#include <string>

#include "config.hpp"
#include "experiments.hpp"
#include "textio.hpp"

namespace oamcap
{

inline constexpr const char *sweep_csv_header =
    "swept_var,swept_value,scheme,mode_count,"
    "ccu_capacity_bps_hz,ceu_capacity_bps_hz,sum_capacity_bps_hz,switch_fingerprint";

inline constexpr const char *oracle_csv_header =
    "link,mode_count,mode,gain_re,gain_im,eigen_re,eigen_im,"
    "eigen_rel_delta,leakage,leakage_bound,status";

namespace iodetail
{
    inline void append_config_echo(std::string &out, const SystemConfig &cfg,
                                   const std::string &fingerprint)
    {
        out += "# fingerprint = " + fingerprint + "\n";
        for (const auto &line : effective_config_lines(cfg))
            out += "# " + line + "\n";
    }
} // namespace iodetail

/// Deterministic CSV rendering: ASCII, '.' decimals, '\n' endings, floats at
/// 12 significant digits. Failed cells carry "nan" capacities and the error
/// code in place of the fingerprint.
inline std::string render_sweep_csv(const SweepResult &result)
{
    std::string out;
    out += "# oamcap sweep\n";
    if (!result.preset_name.empty())
        out += "# preset = " + result.preset_name + "\n";
    iodetail::append_config_echo(out, result.config, result.fingerprint);
    out += sweep_csv_header;
    out += '\n';
    const char *variable = swept_variable_token(result.swept_variable);
    for (const SweepRow &row : result.rows)
    {
        out += variable;
        out += ',';
        out += format_double(row.swept_value);
        out += ',';
        out += scheme_token(row.scheme);
        out += ',';
        out += std::to_string(row.mode_count);
        out += ',';
        if (row.error_code.empty())
        {
            out += format_double(row.ccu_capacity);
            out += ',';
            out += format_double(row.ceu_capacity);
            out += ',';
            out += format_double(row.sum_capacity);
            out += ',';
            out += result.fingerprint;
        }
        else
        {
            out += "nan,nan,nan,error:" + row.error_code;
        }
        out += '\n';
    }
    return out;
}

inline std::string render_oracle_csv(const OracleReport &report)
{
    std::string out;
    out += "# oamcap oracle\n";
    iodetail::append_config_echo(out, report.config, report.fingerprint);
    out += oracle_csv_header;
    out += '\n';
    for (const OracleRow &row : report.rows)
    {
        out += row.link;
        out += ',';
        out += std::to_string(row.mode_count);
        out += ',';
        out += std::to_string(row.mode);
        out += ',';
        out += format_double(row.gain.real());
        out += ',';
        out += format_double(row.gain.imag());
        out += ',';
        out += format_double(row.eigenvalue.real());
        out += ',';
        out += format_double(row.eigenvalue.imag());
        out += ',';
        out += format_double(row.eigen_rel_delta);
        out += ',';
        out += format_double(row.leakage);
        out += ',';
        out += format_double(row.leakage_bound);
        out += ',';
        out += row.pass ? "pass" : "fail";
        out += '\n';
    }
    out += std::string("# summary = ") + (report.all_pass ? "pass" : "fail") +
           " max_leakage_ratio=" + format_double(report.max_leakage_ratio) + "\n";
    return out;
}

} // namespace oamcap

#endif
