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

#ifndef OAMCAP_CHANNEL_HPP
#define OAMCAP_CHANNEL_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace oamcap
{

/// How the element pair distance treats the inter-element angle. The cosine
/// form is the law-of-cosines distance between points on two aligned rings
/// and makes the channel matrix exactly circulant. The literal form feeds the
/// raw angle into the radical instead of its cosine; it breaks the circulant
/// symmetry and exists so the difference is inspectable (the oracle reports
/// its cross-mode leakage instead of certifying it away).
enum class PhaseDistanceMode
{
    cosine,
    literal
};

/// Two aligned uniform circular arrays facing each other across an axial
/// distance. Element 0 of each ring sits at the same azimuth; the link is
/// only meaningful in far-field-ish placement, so construction rejects
/// axial distances shorter than the sum of the ring radii.
struct UcaGeometry
{
    int element_count;
    double radius_tx;
    double radius_rx;
    double axial_distance;

    UcaGeometry(int n_elements, double r_tx, double r_rx, double distance)
        : element_count(n_elements), radius_tx(r_tx), radius_rx(r_rx),
          axial_distance(distance)
    {
        detail::require(element_count >= 1, "UcaGeometry: element_count must be >= 1");
        detail::require(radius_tx > 0.0, "UcaGeometry: radius_tx must be > 0");
        detail::require(radius_rx > 0.0, "UcaGeometry: radius_rx must be > 0");
        detail::require(axial_distance > 0.0, "UcaGeometry: axial_distance must be > 0");
        detail::require(axial_distance > radius_tx + radius_rx,
                        "UcaGeometry: axial_distance must exceed radius_tx + radius_rx");
    }
};

/// Carrier wavelength plus the scalar antenna-gain constant; caches the
/// wavenumber k = 2*pi/lambda.
struct PropagationParams
{
    double wavelength;
    double antenna_gain_constant;

    PropagationParams(double wavelength_m, double gain_constant)
        : wavelength(wavelength_m), antenna_gain_constant(gain_constant)
    {
        detail::require(wavelength > 0.0, "PropagationParams: wavelength must be > 0");
        detail::require(antenna_gain_constant > 0.0,
                        "PropagationParams: antenna_gain_constant must be > 0");
        wavenumber_ = 2.0 * std::numbers::pi / wavelength;
    }

    double wavenumber() const { return wavenumber_; }

  private:
    double wavenumber_;
};

/// Distance between transmit element n and receive element p. In cosine mode
/// the offset is reduced mod N before the cosine so the value depends on
/// (n - p) mod N bit-exactly; in literal mode the signed raw angle enters the
/// radical directly.
inline double element_phase_distance(const UcaGeometry &geom, int tx_index, int rx_index,
                                     PhaseDistanceMode mode = PhaseDistanceMode::cosine)
{
    const int n = geom.element_count;
    detail::require(tx_index >= 0 && tx_index < n, "element_phase_distance: tx_index out of range");
    detail::require(rx_index >= 0 && rx_index < n, "element_phase_distance: rx_index out of range");

    double angle_term;
    if (mode == PhaseDistanceMode::cosine)
    {
        const int offset = ((tx_index - rx_index) % n + n) % n;
        angle_term = std::cos(2.0 * std::numbers::pi * static_cast<double>(offset) / n);
    }
    else
    {
        angle_term = 2.0 * std::numbers::pi * static_cast<double>(tx_index - rx_index) / n;
    }

    const double radicand = geom.axial_distance * geom.axial_distance +
                            geom.radius_tx * geom.radius_tx +
                            geom.radius_rx * geom.radius_rx -
                            2.0 * geom.radius_tx * geom.radius_rx * angle_term;
    detail::require(radicand > 0.0, "element_phase_distance: geometry yields a negative radicand");
    return std::sqrt(radicand);
}

/// Free-space LOS coefficient from transmit element n to receive element p.
/// The amplitude uses the axial link distance (element-to-element amplitude
/// variation is negligible at these ranges); the phase uses the element pair
/// distance, so the magnitude is identical for every pair of a link.
inline std::complex<double> channel_coefficient(const PropagationParams &params,
                                                const UcaGeometry &geom,
                                                int tx_index, int rx_index,
                                                PhaseDistanceMode mode = PhaseDistanceMode::cosine)
{
    const double amplitude = params.antenna_gain_constant * params.wavelength /
                             (4.0 * std::numbers::pi * geom.axial_distance);
    const double phase = params.wavenumber() *
                         element_phase_distance(geom, tx_index, rx_index, mode);
    return std::polar(amplitude, phase);
}

/// One BS-to-user link: the explicit N x N matrix, its per-mode eigenvalues
/// and the per-mode power gains.
///
/// Entry (p, n) is the coefficient from transmit element n to receive
/// element p, stored row-major at p * N + n. Under the cosine phase-distance
/// mode the matrix is circulant in (n - p) mod N, and mode_eigenvalues[l] is
/// the plain (un-normalized) forward DFT of the generator row p = 0:
///
///     xi_l = sum_m matrix(0, m) * exp(-j 2 pi m l / N)
///
/// which is exactly the gain seen by mode l through the unit-normalized
/// mode transforms. mode_gains[l] = |xi_l|^2.
struct LinkChannel
{
    UcaGeometry geometry;
    std::vector<std::complex<double>> matrix;
    std::vector<std::complex<double>> mode_eigenvalues;
    std::vector<double> mode_gains;

    const std::complex<double> &at(int rx_index, int tx_index) const
    {
        return matrix[static_cast<std::size_t>(rx_index) * geometry.element_count + tx_index];
    }
};

inline LinkChannel build_link(const PropagationParams &params, const UcaGeometry &geom,
                              PhaseDistanceMode mode = PhaseDistanceMode::cosine)
{
    const int n = geom.element_count;
    LinkChannel link{geom, {}, {}, {}};
    link.matrix.resize(static_cast<std::size_t>(n) * n);
    for (int p = 0; p < n; ++p)
        for (int t = 0; t < n; ++t)
            link.matrix[static_cast<std::size_t>(p) * n + t] =
                channel_coefficient(params, geom, t, p, mode);

    link.mode_eigenvalues.resize(n);
    link.mode_gains.resize(n);
    for (int l = 0; l < n; ++l)
    {
        std::complex<double> acc{0.0, 0.0};
        for (int m = 0; m < n; ++m)
        {
            const double angle = -2.0 * std::numbers::pi *
                                 static_cast<double>((m * l) % n) / n;
            acc += link.matrix[m] * std::polar(1.0, angle);
        }
        link.mode_eigenvalues[l] = acc;
        link.mode_gains[l] = std::norm(acc);
    }
    return link;
}

} // namespace oamcap

#endif
