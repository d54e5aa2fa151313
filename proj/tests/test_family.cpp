#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "lmcf/family.hpp"

using namespace lmcf;

namespace {

FamilyConfig case1_config() {
    FamilyConfig cfg;
    cfg.lambda1 = 1.0;
    cfg.lambda2 = 1.5;
    cfg.C = 1.2;
    cfg.alpha = -1.0;
    cfg.alpha1 = 1.0;
    cfg.alpha2 = 1.3;
    cfg.phi1_0 = 0.4;
    cfg.phi2_0 = -0.2;
    cfg.theta0 = 0.9;
    cfg.s1 = 5.0;
    return cfg;
}

FamilyConfig case2_config() {
    FamilyConfig cfg = case1_config();
    cfg.lambda2 = -0.8;
    cfg.alpha2 = 2.0;
    return cfg;
}

}  // namespace

TEST_CASE("rate identity: theta' = (alpha/2) z'") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    FamilyConfig cfg = case1_config();
    for (int trial = 0; trial < 20; ++trial) {
        Vec y(5);
        y << 0.3 * U(rng), U(rng), U(rng), U(rng), U(rng);
        Vec d = family_rhs(cfg, y);
        CHECK(d[3] == doctest::Approx(0.5 * cfg.alpha * d[4]).epsilon(1e-14));
    }
}

TEST_CASE("first integral is conserved by the adaptive integrator") {
    for (auto cfg : {case1_config(), case2_config()}) {
        ODETrajectory traj = integrate_family(cfg);
        CHECK(traj.drift() < 1e-8);
        // theta - alpha z / 2 stays constant (z0 chosen compatibly)
        for (size_t i = 0; i < traj.states.size(); ++i) {
            const Vec& y = traj.states[i];
            CHECK(std::abs((y[3] - 0.5 * cfg.alpha * y[4]) -
                           (cfg.theta0 - 0.5 * cfg.alpha * cfg.z_initial())) <
                  1e-10);
        }
    }
}

TEST_CASE("fixed-step halving reduces drift by about 16x") {
    FamilyConfig cfg = case1_config();
    cfg.s1 = 3.0;
    double d1 = integrate_family_fixed(cfg, 60).drift();
    double d2 = integrate_family_fixed(cfg, 120).drift();
    CHECK(d1 / d2 > 8.0);
    CHECK(d1 / d2 < 32.0);
}

TEST_CASE("co-integrated radii agree with the algebraic radii") {
    FamilyConfig cfg = case1_config();
    // extended state (u, phi1, phi2, theta, z, r1, r2)
    OdeRhs rhs = [cfg](double, const Vec& y) {
        Vec d(7);
        d.head(5) = family_rhs(cfg, Vec(y.head(5)));
        double psi = y[1] + y[2] - y[3];
        double c = std::cos(psi);
        d[5] = cfg.lambda1 * y[6] * c;
        d[6] = cfg.lambda2 * y[5] * c;
        return d;
    };
    Vec y0(7);
    y0.head(5) = cfg.initial_state();
    y0[5] = std::sqrt(cfg.alpha1 + cfg.lambda1 * cfg.u0);
    y0[6] = std::sqrt(cfg.alpha2 + cfg.lambda2 * cfg.u0);
    auto sol = integrate_adaptive(rhs, cfg.s0, cfg.s1, y0, cfg.tol);
    for (const auto& y : sol.y) {
        CHECK(std::abs(y[5] - std::sqrt(cfg.alpha1 + cfg.lambda1 * y[0])) < 1e-9);
        CHECK(std::abs(y[6] - std::sqrt(cfg.alpha2 + cfg.lambda2 * y[0])) < 1e-9);
    }
}

TEST_CASE("A = 0 trajectories keep phi - theta = 0") {
    FamilyConfig cfg = case1_config();
    cfg.phi1_0 = 0.25;
    cfg.phi2_0 = 0.35;
    cfg.theta0 = 0.6;  // phi - theta = 0 initially, so A = 0
    cfg.s1 = 2.0;      // u grows without bound on this branch
    ODETrajectory traj = integrate_family(cfg);
    for (const auto& y : traj.states)
        CHECK(std::abs(y[1] + y[2] - y[3] - 0.0) < 1e-10);
}

TEST_CASE("domain exit when a squared radius reaches zero") {
    FamilyConfig cfg = case2_config();
    cfg.phi1_0 = 0.0;
    cfg.phi2_0 = 0.0;
    cfg.theta0 = 0.0;  // pure u-growth pushes alpha2 + lambda2 u to zero
    cfg.s1 = 50.0;
    ODETrajectory traj = integrate_family(cfg);
    CHECK(traj.domain_exit);
    double r2sq = cfg.alpha2 + cfg.lambda2 * traj.states.back()[0];
    CHECK(r2sq >= 0.0);
    CHECK(r2sq < 0.05);
}

TEST_CASE("invalid sign patterns are rejected") {
    FamilyConfig cfg = case1_config();
    cfg.lambda1 = -1.0;
    CHECK_THROWS_AS(integrate_family(cfg), std::invalid_argument);
    cfg = case1_config();
    cfg.C = -2.0;
    CHECK_THROWS_AS(integrate_family(cfg), std::invalid_argument);
    cfg = case1_config();
    cfg.alpha1 = -5.0;  // initial radius not positive
    CHECK_THROWS_AS(integrate_family(cfg), std::invalid_argument);
}

TEST_CASE("assembled surfaces are Legendrian shrinkers (both cases)") {
    AmbientSpace sp(2);
    for (auto cfg : {case1_config(), case2_config()}) {
        cfg.s1 = 3.0;
        ODETrajectory traj = integrate_family(cfg);
        ImmersionChart chart = assemble_surface(traj);
        GeometryGrid grid = sample_grid(sp, chart, GridSpec::uniform(chart, 16, 16));
        auto rep = evaluate_shrinker(sp, grid, cfg.alpha);
        CHECK(rep.max_legendrian < 1e-8);
        CHECK(rep.max_residual < 1e-4);
    }
}

TEST_CASE("trajectory CSV schema") {
    FamilyConfig cfg = case1_config();
    cfg.s1 = 0.5;
    ODETrajectory traj = integrate_family(cfg);
    std::string path = "/tmp/lmcf_family_test.csv";
    write_trajectory_csv(traj, path);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f);
    char line[256];
    REQUIRE(fgets(line, sizeof(line), f));
    CHECK(std::string(line) == "s,u,phi1,phi2,theta_tilde,z,A\n");
    fclose(f);
}
