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

#ifndef OAMCAP_NOMA_HPP
#define OAMCAP_NOMA_HPP

#include <cmath>
#include <span>
#include <vector>

#include "errors.hpp"

namespace oamcap
{

/// Power-domain split between the cell-center user (CCU, decodes with SIC)
/// and the cell-edge user (CEU). Unit-sum fractions, CCU strictly below CEU.
struct PowerSplit
{
    double ccu_fraction;
    double ceu_fraction;

    PowerSplit(double p_ccu, double p_ceu) : ccu_fraction(p_ccu), ceu_fraction(p_ceu)
    {
        detail::require(ccu_fraction > 0.0 && ccu_fraction < 1.0,
                        "PowerSplit: ccu_fraction must lie in (0, 1)");
        detail::require(ceu_fraction > 0.0 && ceu_fraction < 1.0,
                        "PowerSplit: ceu_fraction must lie in (0, 1)");
        detail::require(std::abs(ccu_fraction + ceu_fraction - 1.0) <= 1e-12,
                        "PowerSplit: fractions must sum to 1");
        detail::require(ccu_fraction < ceu_fraction,
                        "PowerSplit: NOMA ordering requires ccu_fraction < ceu_fraction");
    }
};

/// Normalization applied to the per-mode power weights. sum_of_squares keeps
/// sum(P_l^2) = P, the constraint the model is stated under; sum rescales the
/// same weights so that sum(P_l) = P, for sensitivity comparison.
enum class PowerConstraint
{
    sum_of_squares,
    sum
};

// Modes whose gain falls below this fraction of the strongest mode are
// treated as numerically dead; an exact zero never survives the rounding in
// the spectrum computation.
inline constexpr double degenerate_gain_cutoff = 1e-12;

/// Inverse-gain per-mode power weights: P_l^2 proportional to 1/|xi_l|^2,
/// scaled so the configured constraint holds. Every mode then hands the same
/// received power sum to its user, which is the structural point of the rule.
inline std::vector<double> allocate_mode_powers(double total_power,
                                                std::span<const double> mode_gains,
                                                PowerConstraint constraint = PowerConstraint::sum_of_squares)
{
    detail::require(total_power >= 0.0, "allocate_mode_powers: total power must be >= 0");
    detail::require(!mode_gains.empty(), "allocate_mode_powers: empty gain vector");

    double max_gain = 0.0;
    for (double g : mode_gains)
        max_gain = std::max(max_gain, g);
    for (std::size_t l = 0; l < mode_gains.size(); ++l)
        if (!(mode_gains[l] > degenerate_gain_cutoff * max_gain))
            throw DegenerateModeError(static_cast<int>(l));

    double inverse_sum = 0.0;
    for (double g : mode_gains)
        inverse_sum += 1.0 / g;

    std::vector<double> powers(mode_gains.size());
    for (std::size_t l = 0; l < mode_gains.size(); ++l)
        powers[l] = std::sqrt((total_power / mode_gains[l]) / inverse_sum);

    if (constraint == PowerConstraint::sum)
    {
        double sum = 0.0;
        for (double p : powers)
            sum += p;
        if (sum > 0.0)
        {
            const double scale = total_power / sum;
            for (double &p : powers)
                p *= scale;
        }
    }
    return powers;
}

/// Per-mode transmit powers with the noise level and the derived SNRs.
struct ModePowerAllocation
{
    double total_power = 0.0;
    std::vector<double> per_mode_power;
    double noise_variance = 1.0;
    std::vector<double> per_mode_snr;
    double total_snr = 0.0;
};

inline ModePowerAllocation allocation_with_noise(double total_power,
                                                 std::span<const double> mode_gains,
                                                 PowerConstraint constraint,
                                                 double noise_variance)
{
    detail::require(noise_variance > 0.0, "allocation_with_noise: noise variance must be > 0");
    ModePowerAllocation alloc;
    alloc.total_power = total_power;
    alloc.per_mode_power = allocate_mode_powers(total_power, mode_gains, constraint);
    alloc.noise_variance = noise_variance;
    alloc.per_mode_snr.resize(alloc.per_mode_power.size());
    for (std::size_t l = 0; l < alloc.per_mode_power.size(); ++l)
    {
        alloc.per_mode_snr[l] = alloc.per_mode_power[l] / noise_variance;
        alloc.total_snr += alloc.per_mode_snr[l];
    }
    return alloc;
}

/// Fixes the summed per-mode SNR at a target value by deriving the noise
/// variance from the allocated powers: sigma^2 = sum(P_l) / rho.
inline ModePowerAllocation allocation_with_total_snr(double total_power,
                                                     std::span<const double> mode_gains,
                                                     PowerConstraint constraint,
                                                     double total_snr_linear)
{
    detail::require(total_snr_linear > 0.0,
                    "allocation_with_total_snr: target SNR must be > 0");
    std::vector<double> powers = allocate_mode_powers(total_power, mode_gains, constraint);
    double power_sum = 0.0;
    for (double p : powers)
        power_sum += p;
    const double sigma2 = power_sum > 0.0 ? power_sum / total_snr_linear : 1.0;
    return allocation_with_noise(total_power, mode_gains, constraint, sigma2);
}

/// Post-SIC SINR of the CCU's own symbol on one mode (the CEU symbol has
/// already been removed): rho_l * |h|^2 * p_ccu.
inline double sinr_ue1_own(double mode_snr, double ccu_mode_gain, const PowerSplit &split)
{
    return mode_snr * ccu_mode_gain * split.ccu_fraction;
}

/// SINR of the CEU symbol as decoded at the CCU ahead of SIC; the CCU's own
/// signal is still in the air, so the value saturates below p_ceu / p_ccu.
inline double sinr_ue1_ceu_symbol(double mode_snr, double ccu_mode_gain, const PowerSplit &split)
{
    const double received = mode_snr * ccu_mode_gain;
    return received * split.ceu_fraction / (received * split.ccu_fraction + 1.0);
}

/// SINR of the CEU symbol at the CEU, which treats the CCU signal as noise.
inline double sinr_ue2(double mode_snr, double ceu_mode_gain, const PowerSplit &split)
{
    const double received = mode_snr * ceu_mode_gain;
    return received * split.ceu_fraction / (received * split.ccu_fraction + 1.0);
}

/// Per-mode SINR table for one operating point, linear scale.
struct SinrReport
{
    std::vector<double> x1_at_ue1; ///< CCU symbol at the CCU, post SIC
    std::vector<double> x2_at_ue1; ///< CEU symbol at the CCU, pre SIC
    std::vector<double> x2_at_ue2; ///< CEU symbol at the CEU
};

inline SinrReport make_sinr_report(const ModePowerAllocation &alloc,
                                   std::span<const double> ccu_gains,
                                   std::span<const double> ceu_gains,
                                   const PowerSplit &split)
{
    detail::require(ccu_gains.size() == alloc.per_mode_snr.size() &&
                        ceu_gains.size() == alloc.per_mode_snr.size(),
                    "make_sinr_report: gain vectors must match the allocation");
    SinrReport report;
    const std::size_t count = alloc.per_mode_snr.size();
    report.x1_at_ue1.resize(count);
    report.x2_at_ue1.resize(count);
    report.x2_at_ue2.resize(count);
    for (std::size_t l = 0; l < count; ++l)
    {
        const double rho = alloc.per_mode_snr[l];
        report.x1_at_ue1[l] = sinr_ue1_own(rho, ccu_gains[l], split);
        report.x2_at_ue1[l] = sinr_ue1_ceu_symbol(rho, ccu_gains[l], split);
        report.x2_at_ue2[l] = sinr_ue2(rho, ceu_gains[l], split);
    }
    return report;
}

} // namespace oamcap

#endif
