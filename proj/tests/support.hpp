#ifndef OAMCAP_TESTS_SUPPORT_HPP
#define OAMCAP_TESTS_SUPPORT_HPP

#include <Eigen/Eigenvalues>

#include <oamcap/channel.hpp>

#include <algorithm>
#include <complex>
#include <vector>

namespace oamcap_tests
{

/// Dense eigendecomposition of the explicit matrix; the independent route
/// against which the closed-form spectrum is checked.
inline std::vector<std::complex<double>> dense_eigenvalues(const oamcap::LinkChannel &link)
{
    const int n = link.geometry.element_count;
    Eigen::MatrixXcd m(n, n);
    for (int p = 0; p < n; ++p)
        for (int t = 0; t < n; ++t)
            m(p, t) = link.at(p, t);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

/// Worst relative gap under greedy nearest matching of two multisets.
inline double multiset_distance(std::vector<std::complex<double>> a,
                                std::vector<std::complex<double>> b)
{
    if (a.size() != b.size())
        return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const auto &va : a)
    {
        auto best = b.begin();
        double best_d = std::abs(va - *best);
        for (auto it = b.begin(); it != b.end(); ++it)
            if (std::abs(va - *it) < best_d)
            {
                best_d = std::abs(va - *it);
                best = it;
            }
        worst = std::max(worst, best_d / std::max(1e-300, std::abs(va)));
        b.erase(best);
    }
    return worst;
}

} // namespace oamcap_tests

#endif
