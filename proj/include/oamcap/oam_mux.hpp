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

#ifndef OAMCAP_OAM_MUX_HPP
#define OAMCAP_OAM_MUX_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "channel.hpp"
#include "errors.hpp"

namespace oamcap
{

/// Ordered set of activated OAM modes over an N-element array.
struct ModeSet
{
    int element_count;
    std::vector<int> active_modes;

    ModeSet(int n_elements, std::vector<int> modes)
        : element_count(n_elements), active_modes(std::move(modes))
    {
        detail::require(element_count >= 1, "ModeSet: element_count must be >= 1");
        detail::require(!active_modes.empty(), "ModeSet: active mode set must not be empty");
        std::vector<int> sorted = active_modes;
        std::sort(sorted.begin(), sorted.end());
        detail::require(sorted.front() >= 0 && sorted.back() < element_count,
                        "ModeSet: mode index out of range");
        detail::require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                        "ModeSet: duplicate mode index");
    }

    static ModeSet full(int n_elements)
    {
        std::vector<int> modes(static_cast<std::size_t>(n_elements));
        for (int l = 0; l < n_elements; ++l)
            modes[static_cast<std::size_t>(l)] = l;
        return ModeSet(n_elements, std::move(modes));
    }

    std::size_t size() const { return active_modes.size(); }
};

using ModeSymbolVector = std::vector<std::complex<double>>;
using ElementSignalVector = std::vector<std::complex<double>>;

/// Per-element feed for the superimposed mode symbols:
///     s_n = (1/sqrt(N)) * sum_{l in L} A_l * exp(-j 2 pi n l / N)
inline ElementSignalVector precode(const ModeSymbolVector &symbols, const ModeSet &modes)
{
    detail::require(symbols.size() == modes.size(),
                    "precode: symbol count must match the active mode set");
    const int n = modes.element_count;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    ElementSignalVector signal(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e)
    {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < symbols.size(); ++i)
        {
            const int l = modes.active_modes[i];
            const double angle = -2.0 * std::numbers::pi *
                                 static_cast<double>((e * l) % n) / n;
            acc += symbols[i] * std::polar(1.0, angle);
        }
        signal[static_cast<std::size_t>(e)] = scale * acc;
    }
    return signal;
}

/// Recovers the symbol carried by one mode from the per-element receive
/// samples. Correlates with the conjugate of the transmit kernel so mode l
/// lands in slot l; noise, when modeled, is added by the caller.
inline std::complex<double> demultiplex(const ElementSignalVector &received, int mode)
{
    const int n = static_cast<int>(received.size());
    detail::require(n >= 1, "demultiplex: empty receive vector");
    detail::require(mode >= 0 && mode < n, "demultiplex: mode out of range");
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::complex<double> acc{0.0, 0.0};
    for (int p = 0; p < n; ++p)
    {
        const double angle = 2.0 * std::numbers::pi *
                             static_cast<double>((p * mode) % n) / n;
        acc += received[static_cast<std::size_t>(p)] * std::polar(1.0, angle);
    }
    return scale * acc;
}

/// Signal-path certificate for the per-mode scalar model.
struct DiagonalizationReport
{
    std::vector<int> modes;
    std::vector<std::complex<double>> gains; ///< response in the injected mode's own slot
    std::vector<double> leakage;             ///< worst response in any other slot
    double max_leakage = 0.0;
};

/// Injects a unit symbol on each active mode alone, pushes it through the
/// explicit channel matrix, and demultiplexes every mode. For an exactly
/// circulant matrix the off-slot leakage is zero to numerical precision and
/// gains[i] reproduces mode_eigenvalues[modes[i]].
inline DiagonalizationReport diagonalize_oracle(const LinkChannel &link, const ModeSet &modes)
{
    detail::require(link.geometry.element_count == modes.element_count,
                    "diagonalize_oracle: link and mode set disagree on element count");
    const int n = modes.element_count;

    DiagonalizationReport report;
    report.modes = modes.active_modes;
    report.gains.resize(modes.size());
    report.leakage.resize(modes.size());

    for (std::size_t i = 0; i < modes.size(); ++i)
    {
        ModeSymbolVector symbols(modes.size(), {0.0, 0.0});
        symbols[i] = {1.0, 0.0};
        const ElementSignalVector sent = precode(symbols, modes);

        ElementSignalVector received(static_cast<std::size_t>(n));
        for (int p = 0; p < n; ++p)
        {
            std::complex<double> acc{0.0, 0.0};
            for (int t = 0; t < n; ++t)
                acc += link.at(p, t) * sent[static_cast<std::size_t>(t)];
            received[static_cast<std::size_t>(p)] = acc;
        }

        const int injected = modes.active_modes[i];
        double worst = 0.0;
        for (int m = 0; m < n; ++m)
        {
            const std::complex<double> out = demultiplex(received, m);
            if (m == injected)
                report.gains[i] = out;
            else
                worst = std::max(worst, std::abs(out));
        }
        report.leakage[i] = worst;
        report.max_leakage = std::max(report.max_leakage, worst);
    }
    return report;
}

} // namespace oamcap

#endif
