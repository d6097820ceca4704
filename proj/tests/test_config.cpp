#include <catch2/catch_amalgamated.hpp>

#include <oamcap/config.hpp>

#include <cstdio>
#include <fstream>
#include <string>

using namespace oamcap;
using Catch::Matchers::WithinRel;

TEST_CASE("empty input yields the default operating point")
{
    const SystemConfig cfg = load_config("");
    CHECK(cfg.wavelength_m == 0.03);
    CHECK(cfg.beta == 1.0);
    CHECK(cfg.tx_radius_m == 0.33);
    CHECK(cfg.rx_radius_m == 0.33);
    CHECK(cfg.ccu_distance_m == 15.0);
    CHECK(cfg.ceu_distance_m == 30.0);
    CHECK(cfg.mode_count == 4);
    CHECK(cfg.active_modes == std::vector<int>{0, 1, 2, 3});
    CHECK(cfg.total_power == 1.0);
    CHECK(cfg.p_1 == 0.4);
    CHECK(cfg.p_2 == 0.6);
    CHECK(cfg.snr_db == 25.0);
    CHECK_FALSE(cfg.noise_variance.has_value());
    CHECK(cfg.phase_distance_mode == PhaseDistanceMode::cosine);
    CHECK(cfg.power_constraint == PowerConstraint::sum_of_squares);
    CHECK(cfg.allocation_reference == AllocationReference::ceu);
    CHECK(cfg.mu_mode == MuMode::singular_value);
    CHECK(cfg.oma_time_fraction == OmaTimeFraction::literal_one_eighth);
    CHECK(make_grid(cfg.snr_grid_db).size() == 9);
    CHECK(make_grid(cfg.distance_grid).size() == 9);
}

TEST_CASE("comments and blank lines are skipped, later keys win")
{
    const SystemConfig cfg = load_config("# comment\n\n  beta = 2\nbeta = 3\n");
    CHECK(cfg.beta == 3.0);
}

TEST_CASE("all keys are settable")
{
    const SystemConfig cfg = load_config("wavelength_m = 0.01\n"
                                         "beta = 2.5\n"
                                         "tx_radius_m = 0.2\n"
                                         "rx_radius_m = 0.25\n"
                                         "ccu_distance_m = 12\n"
                                         "ceu_distance_m = 24\n"
                                         "mode_count = 2\n"
                                         "active_modes = 0,1\n"
                                         "total_power = 2\n"
                                         "p_1 = 0.3\n"
                                         "p_2 = 0.7\n"
                                         "snr_db = 10\n"
                                         "phase_distance_mode = literal\n"
                                         "power_constraint = sum\n"
                                         "allocation_reference = ccu\n"
                                         "mu_mode = unity\n"
                                         "oma_time_fraction = generalized\n"
                                         "snr_grid_db = 0:10:2\n"
                                         "distance_grid = 0.2:0.8:0.2\n");
    CHECK(cfg.wavelength_m == 0.01);
    CHECK(cfg.mode_count == 2);
    CHECK(cfg.phase_distance_mode == PhaseDistanceMode::literal);
    CHECK(cfg.power_constraint == PowerConstraint::sum);
    CHECK(cfg.allocation_reference == AllocationReference::ccu);
    CHECK(cfg.mu_mode == MuMode::unity);
    CHECK(cfg.oma_time_fraction == OmaTimeFraction::generalized);
    CHECK(make_grid(cfg.snr_grid_db).size() == 6);
    CHECK(make_grid(cfg.distance_grid).size() == 4);
}

TEST_CASE("mode count reduction rederives the default active set")
{
    const SystemConfig cfg = load_config("mode_count = 2\n");
    CHECK(cfg.active_modes == std::vector<int>{0, 1});

    const SystemConfig subset = load_config("mode_count = 4\nactive_modes = 0,2\n");
    CHECK(subset.active_modes == std::vector<int>{0, 2});
}

TEST_CASE("violations are aggregated into one report")
{
    try
    {
        load_config("p_1 = 0.6\np_2 = 0.4\nmode_count = 0\nbeta = -1\n");
        FAIL("expected ValidationError");
    }
    catch (const ValidationError &e)
    {
        CHECK(e.issues().size() >= 3);
        bool ordering = false, modes = false, beta = false;
        for (const auto &issue : e.issues())
        {
            if (issue.find("p_1 < p_2") != std::string::npos)
                ordering = true;
            if (issue.find("mode_count") != std::string::npos)
                modes = true;
            if (issue.find("beta") != std::string::npos)
                beta = true;
        }
        CHECK(ordering);
        CHECK(modes);
        CHECK(beta);
    }
}

TEST_CASE("malformed entries are rejected with their key names")
{
    CHECK_THROWS_AS(load_config("nonsense = 1\n"), ValidationError);
    CHECK_THROWS_AS(load_config("beta\n"), ValidationError);
    CHECK_THROWS_AS(load_config("beta = fast\n"), ValidationError);
    CHECK_THROWS_AS(load_config("mu_mode = squared\n"), ValidationError);
    CHECK_THROWS_AS(load_config("snr_grid_db = 0:40\n"), ValidationError);
    CHECK_THROWS_AS(load_config("active_modes = 0,x\n"), ValidationError);
}

TEST_CASE("far-field placement is enforced at load")
{
    CHECK_THROWS_AS(load_config("ccu_distance_m = 0.5\n"), ValidationError);
    CHECK_THROWS_AS(load_config("tx_radius_m = 8\nrx_radius_m = 8\n"), ValidationError);
}

TEST_CASE("empty and out-of-range mode sets are rejected")
{
    CHECK_THROWS_AS(load_config("active_modes =\n"), ValidationError);
    CHECK_THROWS_AS(load_config("active_modes = 0,4\n"), ValidationError);
    CHECK_THROWS_AS(load_config("active_modes = 0,0\n"), ValidationError);
}

TEST_CASE("noise variance and snr are mutually exclusive")
{
    CHECK_THROWS_AS(load_config("snr_db = 20\nnoise_variance = 0.1\n"), ValidationError);
    const SystemConfig cfg = load_config("noise_variance = 0.1\n");
    REQUIRE(cfg.noise_variance.has_value());
    CHECK(*cfg.noise_variance == 0.1);
    CHECK_THROWS_AS(load_config("noise_variance = 0\n"), ValidationError);
}

TEST_CASE("distance grid must stay inside the open unit interval")
{
    CHECK_THROWS_AS(load_config("distance_grid = 0:0.9:0.1\n"), ValidationError);
    CHECK_THROWS_AS(load_config("distance_grid = 0.1:1:0.1\n"), ValidationError);
    CHECK_THROWS_AS(load_config("distance_grid = 0.9:0.1:0.1\n"), ValidationError);
}

TEST_CASE("overrides apply on top of file content")
{
    const SystemConfig cfg = load_config("beta = 2\n", {"beta=3", "p_1=0.25", "p_2=0.75"});
    CHECK(cfg.beta == 3.0);
    CHECK(cfg.p_1 == 0.25);
}

TEST_CASE("config files load from disk and unreadable paths are reported")
{
    const std::string path = "oamcap_test_config.tmp";
    {
        std::ofstream out(path);
        out << "mode_count = 2\n";
    }
    const SystemConfig cfg = load_config_file(path);
    CHECK(cfg.mode_count == 2);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_config_file("does_not_exist.cfg"), ValidationError);
}

TEST_CASE("fingerprint is stable and sensitive to every key")
{
    const SystemConfig base = load_config("");
    const std::string fp = config_fingerprint(base);
    CHECK(fp.size() == 16);
    CHECK(fp == config_fingerprint(load_config("")));
    CHECK(fp != config_fingerprint(load_config("beta = 2\n")));
    CHECK(fp != config_fingerprint(load_config("mu_mode = unity\n")));
    CHECK(fp != config_fingerprint(load_config("allocation_reference = ccu\n")));

    const auto lines = effective_config_lines(base);
    CHECK(lines.size() == 19);
    CHECK(lines.front() == "wavelength_m = 0.03");
}
