#include <catch2/catch_amalgamated.hpp>

#include <oamcap/noma.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace oamcap;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("power split enforces the NOMA ordering")
{
    CHECK_NOTHROW(PowerSplit(0.4, 0.6));
    CHECK_THROWS_AS(PowerSplit(0.6, 0.4), std::invalid_argument);
    CHECK_THROWS_AS(PowerSplit(0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(PowerSplit(0.4, 0.55), std::invalid_argument);
    CHECK_THROWS_AS(PowerSplit(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("equal gains split the budget evenly")
{
    const std::vector<double> gains(4, 2.5);
    const auto powers = allocate_mode_powers(1.0, gains);
    for (double p : powers)
        CHECK_THAT(p, WithinRel(0.5, 1e-14));
}

TEST_CASE("a single mode takes the square root of the budget")
{
    const std::vector<double> gains = {0.37};
    CHECK_THAT(allocate_mode_powers(2.0, gains)[0], WithinRel(std::sqrt(2.0), 1e-14));
}

TEST_CASE("two-mode allocation matches the hand-computed weights")
{
    // gains (1, 4): inverse gains (1, 0.25), sum 1.25; squared powers 0.8, 0.2
    const std::vector<double> gains = {1.0, 4.0};
    const auto powers = allocate_mode_powers(1.0, gains);
    CHECK_THAT(powers[0], WithinRel(0.8944271909999159, 1e-14));
    CHECK_THAT(powers[1], WithinRel(0.4472135954999579, 1e-14));
    CHECK_THAT(powers[0] * powers[0] + powers[1] * powers[1], WithinRel(1.0, 1e-12));
}

TEST_CASE("a dead mode is reported by index")
{
    const std::vector<double> zero = {1.0, 0.0, 2.0};
    try
    {
        allocate_mode_powers(1.0, zero);
        FAIL("expected DegenerateModeError");
    }
    catch (const DegenerateModeError &e)
    {
        CHECK(e.mode() == 1);
        CHECK(std::string(e.what()).find("mode 1") != std::string::npos);
    }

    const std::vector<double> nearly_zero = {1.0, 1e-30};
    CHECK_THROWS_AS(allocate_mode_powers(1.0, nearly_zero), DegenerateModeError);
}

TEST_CASE("allocation conserves power and equalizes received power")
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> log_gain(-8.0, 3.0);
    std::uniform_real_distribution<double> log_power(-1.0, 1.0);
    std::uniform_int_distribution<int> mode_count(1, 8);

    for (int trial = 0; trial < 1000; ++trial)
    {
        const int n = mode_count(rng);
        std::vector<double> gains(static_cast<std::size_t>(n));
        for (double &g : gains)
            g = std::pow(10.0, log_gain(rng));
        const double total = std::pow(10.0, log_power(rng));

        const auto powers = allocate_mode_powers(total, gains);
        double squared_sum = 0.0;
        double received_min = std::numeric_limits<double>::infinity();
        double received_max = 0.0;
        for (std::size_t l = 0; l < powers.size(); ++l)
        {
            squared_sum += powers[l] * powers[l];
            const double received = powers[l] * powers[l] * gains[l];
            received_min = std::min(received_min, received);
            received_max = std::max(received_max, received);
        }
        REQUIRE_THAT(squared_sum, WithinRel(total, 1e-10));
        REQUIRE(received_max - received_min <= 1e-10 * received_max);
    }
}

TEST_CASE("sum constraint rescales to a unit power sum")
{
    const std::vector<double> gains = {1.0, 4.0, 0.25};
    const auto powers = allocate_mode_powers(1.0, gains, PowerConstraint::sum);
    double sum = 0.0;
    for (double p : powers)
        sum += p;
    CHECK_THAT(sum, WithinRel(1.0, 1e-12));
    // weights keep the inverse-gain ratios
    CHECK_THAT(powers[0] / powers[1], WithinRel(2.0, 1e-12));
}

TEST_CASE("snr-targeted allocation hits the summed per-mode snr")
{
    const std::vector<double> gains = {1.0, 0.5, 0.25, 2.0};
    const auto alloc = allocation_with_total_snr(1.0, gains,
                                                 PowerConstraint::sum_of_squares, 316.227766);
    CHECK_THAT(alloc.total_snr, WithinRel(316.227766, 1e-12));
    for (std::size_t l = 0; l < gains.size(); ++l)
        CHECK(alloc.per_mode_snr[l] == alloc.per_mode_power[l] / alloc.noise_variance);
}

TEST_CASE("sinr spot values")
{
    const PowerSplit split(0.4, 0.6);
    CHECK_THAT(sinr_ue1_own(10.0, 1.0, split), WithinAbs(4.0, 1e-12));
    CHECK_THAT(sinr_ue1_ceu_symbol(10.0, 1.0, split), WithinAbs(1.2, 1e-12));
    CHECK_THAT(sinr_ue2(10.0, 0.25, split), WithinAbs(0.75, 1e-12));

    CHECK(sinr_ue1_own(0.0, 1.0, split) == 0.0);
    CHECK(sinr_ue1_ceu_symbol(0.0, 1.0, split) == 0.0);
    CHECK(sinr_ue2(10.0, 0.0, split) == 0.0);

    // the two interference-limited forms coincide when the gains coincide
    CHECK(sinr_ue1_ceu_symbol(3.7, 0.9, split) == sinr_ue2(3.7, 0.9, split));
}

TEST_CASE("interference-limited sinr saturates at the split ratio")
{
    const PowerSplit split(0.4, 0.6);
    CHECK_THAT(sinr_ue1_ceu_symbol(1e9, 1.0, split), WithinRel(1.5, 1e-6));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> dist(0.0, 1e6);
    for (int trial = 0; trial < 200; ++trial)
    {
        const double rho = dist(rng);
        const double gain = dist(rng);
        CHECK(sinr_ue1_ceu_symbol(rho, gain, split) < 1.5);
        CHECK(sinr_ue2(rho, gain, split) < 1.5);
    }
}

TEST_CASE("sinr values increase with snr and gain")
{
    const PowerSplit split(0.3, 0.7);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(1e-6, 1e3);
    for (int trial = 0; trial < 200; ++trial)
    {
        double rho_low = dist(rng), rho_high = dist(rng);
        if (rho_low > rho_high)
            std::swap(rho_low, rho_high);
        if (rho_low == rho_high)
            continue;
        double gain_low = dist(rng), gain_high = dist(rng);
        if (gain_low > gain_high)
            std::swap(gain_low, gain_high);
        const double gain = dist(rng);
        const double rho = dist(rng);
        CHECK(sinr_ue1_own(rho_low, gain, split) < sinr_ue1_own(rho_high, gain, split));
        CHECK(sinr_ue1_ceu_symbol(rho_low, gain, split) <
              sinr_ue1_ceu_symbol(rho_high, gain, split));
        CHECK(sinr_ue2(rho_low, gain, split) < sinr_ue2(rho_high, gain, split));
        if (gain_low < gain_high)
        {
            CHECK(sinr_ue1_own(rho, gain_low, split) < sinr_ue1_own(rho, gain_high, split));
            CHECK(sinr_ue2(rho, gain_low, split) < sinr_ue2(rho, gain_high, split));
        }
    }
}

TEST_CASE("sic decodability ordering follows the gain ordering")
{
    const PowerSplit split(0.4, 0.6);
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(1e-6, 1e4);
    for (int trial = 0; trial < 500; ++trial)
    {
        const double rho = dist(rng);
        double ccu_gain = dist(rng);
        double ceu_gain = dist(rng);
        if (ccu_gain < ceu_gain)
            std::swap(ccu_gain, ceu_gain);
        CHECK(sinr_ue1_ceu_symbol(rho, ccu_gain, split) >= sinr_ue2(rho, ceu_gain, split));
    }
}

TEST_CASE("sinr report is assembled per mode")
{
    const std::vector<double> gains = {1.0, 4.0};
    const auto alloc =
        allocation_with_noise(1.0, gains, PowerConstraint::sum_of_squares, 0.5);
    const PowerSplit split(0.4, 0.6);
    const std::vector<double> ccu_gains = {2.0, 1.0};
    const auto report = make_sinr_report(alloc, ccu_gains, gains, split);
    REQUIRE(report.x1_at_ue1.size() == 2);
    for (std::size_t l = 0; l < 2; ++l)
    {
        CHECK(report.x1_at_ue1[l] ==
              sinr_ue1_own(alloc.per_mode_snr[l], ccu_gains[l], split));
        CHECK(report.x2_at_ue1[l] ==
              sinr_ue1_ceu_symbol(alloc.per_mode_snr[l], ccu_gains[l], split));
        CHECK(report.x2_at_ue2[l] == sinr_ue2(alloc.per_mode_snr[l], gains[l], split));
    }
}
