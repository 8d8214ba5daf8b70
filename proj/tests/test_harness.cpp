#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "vorwave/harness.hpp"

using namespace vw;

namespace {

std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

std::string read_all(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config round trip and defaults") {
    const std::string path = write_temp("cfg_ok.cfg",
                                        "# comment line\n"
                                        "gamma = -1\n"
                                        "k0 = 10\n"
                                        "B0 = 0.002\n"
                                        "dt = 0.01\n"
                                        "t_end = 20\n"
                                        "run = compare\n"
                                        "snapshot_times = 5, 10\n"
                                        "variant = narrowband\n");
    const ScenarioConfig cfg = load_config(path);
    CHECK(cfg.gamma == -1.0);
    CHECK(cfg.k0 == 10.0);
    CHECK(cfg.b0 == 0.002);
    CHECK(cfg.amplitude_is_b0);
    CHECK(cfg.dt == 0.01);
    CHECK(cfg.t_end == 20.0);
    CHECK(cfg.n_nodes == 512);      // defaulted
    CHECK(cfg.dno_order == 6);      // defaulted
    CHECK(cfg.run == RunKind::Compare);
    REQUIRE(cfg.snapshot_times.size() == 2);
    CHECK(cfg.snapshot_times[0] == 5.0);
    CHECK(cfg.snapshot_times[1] == 10.0);

    save_config(cfg, "/tmp/cfg_saved.cfg");
    const ScenarioConfig back = load_config("/tmp/cfg_saved.cfg");
    CHECK(back.gamma == cfg.gamma);
    CHECK(back.b0 == cfg.b0);
    CHECK(back.t_end == cfg.t_end);
    CHECK(back.run == cfg.run);
}

TEST_CASE("config validation errors name the offender") {
    SUBCASE("missing k0") {
        const std::string path =
            write_temp("cfg_nok0.cfg", "gamma = 0\nB0 = 0.002\n");
        CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("k0"), std::runtime_error);
    }
    SUBCASE("missing gamma") {
        const std::string path = write_temp("cfg_nogam.cfg", "k0 = 10\nB0 = 0.002\n");
        CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("gamma"), std::runtime_error);
    }
    SUBCASE("missing amplitude") {
        const std::string path = write_temp("cfg_noamp.cfg", "k0 = 10\ngamma = 0\n");
        CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("B0"), std::runtime_error);
    }
    SUBCASE("both amplitudes") {
        const std::string path =
            write_temp("cfg_both.cfg", "k0 = 10\ngamma = 0\nB0 = 0.002\nA0 = 0.005\n");
        CHECK_THROWS_AS(load_config(path), std::runtime_error);
    }
    SUBCASE("unknown key") {
        const std::string path =
            write_temp("cfg_unk.cfg", "k0 = 10\ngamma = 0\nB0 = 0.002\nbogus_key = 1\n");
        CHECK_THROWS_WITH_AS(load_config(path), doctest::Contains("bogus_key"),
                             std::runtime_error);
    }
    SUBCASE("A0 alone is accepted and converted") {
        const std::string path =
            write_temp("cfg_a0.cfg", "k0 = 10\ngamma = 0\nA0 = 0.005\n");
        const ScenarioConfig cfg = load_config(path);
        CHECK_FALSE(cfg.amplitude_is_b0);
        const PhysicalParams p = cfg.physical();
        CHECK(p.B0 == doctest::Approx(surface_to_envelope_amp(0.005, 10.0, 1.0, 0.0))
                          .epsilon(1e-14));
    }
}

TEST_CASE("series CSV layout") {
    std::vector<DiagnosticsRecord> rows(2);
    rows[0].time = 0.0;
    rows[0].l2_rel_err = 1.0 / 3.0;
    rows[1].time = 5.0;
    rows[1].h_full = -0.123456789012345678;
    write_series_csv("/tmp/series_test.csv", rows);

    const std::string text = read_all("/tmp/series_test.csv");
    CHECK(text.rfind("t,l2_rel_err,H_full,H_reduced,I,M,max_eta\n", 0) == 0);
    // 17 significant digits survive the round trip
    CHECK(text.find("0.33333333333333331") != std::string::npos);
    CHECK(text.find("-0.12345678901234568") != std::string::npos);
    // exactly 7 columns per data line
    std::stringstream ss(text);
    std::string line;
    std::getline(ss, line);
    int nlines = 0;
    while (std::getline(ss, line)) {
        ++nlines;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
    }
    CHECK(nlines == 2);
}

TEST_CASE("synthetic exponential growth is fitted exactly") {
    std::vector<double> t, amp;
    for (int i = 0; i <= 1000; ++i) {
        t.push_back(static_cast<double>(i));
        amp.push_back(1e-4 * std::exp(0.004 * i));
    }
    const GrowthFit fit = fit_growth_rate(t, amp);
    REQUIRE(fit.window_found);
    CHECK(std::fabs(fit.sigma_fit - 0.004) <= 1e-6);
}

TEST_CASE("no growth window on a flat signal") {
    std::vector<double> t, amp;
    for (int i = 0; i <= 500; ++i) {
        t.push_back(static_cast<double>(i));
        amp.push_back(1e-4 * (1.0 + 0.01 * std::sin(0.1 * i)));
    }
    CHECK_FALSE(fit_growth_rate(t, amp).window_found);
}

TEST_CASE("stability scan shape") {
    PhysicalParams p;
    p.gamma = 0.0;
    const std::vector<StabilityPoint> pts = run_stability_map(p, 20.0, 0.01);
    CHECK(pts.size() == 2000);
    CHECK(pts.front().lambda == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(pts.back().lambda == doctest::Approx(20.0).epsilon(1e-12));
    // unstable band near lambda = 1, stable far out
    bool any_unstable = false;
    for (const StabilityPoint& q : pts) any_unstable = any_unstable || q.Gamma > 0.0;
    CHECK(any_unstable);
    CHECK(pts.back().Gamma < 0.0);
    // sigma consistent with Gamma sign
    for (const StabilityPoint& q : pts)
        CHECK(((q.Gamma > 0.0) == (q.sigma > 0.0)));
}

TEST_CASE("short comparison run: initial agreement and bookkeeping") {
    ScenarioConfig cfg;
    cfg.gamma = -1.0;
    cfg.n_nodes = 512;
    cfg.dt = 0.005;
    cfg.t_end = 10.0;
    cfg.t_sample = 5.0;
    cfg.output_dir = "/tmp";
    const std::vector<DiagnosticsRecord> rows = run_compare(cfg);
    REQUIRE(rows.size() == 3);  // t = 0, 5, 10

    CHECK(rows[0].time == 0.0);
    CHECK(rows[0].l2_rel_err <= 5e-3);       // reconstruction error at t = 0
    for (const DiagnosticsRecord& r : rows) {
        CHECK(std::fabs(r.v_full) <= 1e-14);  // volume stays identically zero
        CHECK(r.max_eta > 0.0);
        CHECK(r.l2_rel_err <= 5e-2);
    }
    // conservation over the short window
    CHECK(std::fabs(rows[2].h_full - rows[0].h_full) <= 1e-6 * std::fabs(rows[0].h_full));
    CHECK(std::fabs(rows[2].m_action - rows[0].m_action) <=
          1e-10 * std::fabs(rows[0].m_action));
}
