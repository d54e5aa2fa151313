#include "lmcf/family.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace lmcf {

int FamilyConfig::surface_case() const {
    if (lambda1 <= 0.0 || C <= 0.0 || lambda2 == 0.0)
        throw std::invalid_argument(
            "FamilyConfig: need lambda1 > 0, C > 0, lambda2 != 0");
    return lambda2 > 0.0 ? 1 : 2;
}

Vec FamilyConfig::initial_state() const {
    if (alpha == 0.0) throw std::invalid_argument("FamilyConfig: alpha must be nonzero");
    if (alpha1 + lambda1 * u0 <= 0.0 || alpha2 + lambda2 * u0 <= 0.0)
        throw std::invalid_argument("FamilyConfig: initial radii not positive");
    surface_case();  // validates the sign pattern
    Vec y(5);
    y << u0, phi1_0, phi2_0, theta0, z_initial();
    return y;
}

Vec family_rhs(const FamilyConfig& cfg, const Vec& y) {
    double r1sq = cfg.alpha1 + cfg.lambda1 * y[0];
    double r2sq = cfg.alpha2 + cfg.lambda2 * y[0];
    double sq = std::sqrt(r1sq * r2sq);
    double psi = y[1] + y[2] - y[3];
    double c = std::cos(psi), s = std::sin(psi);
    Vec d(5);
    d[0] = 2.0 * sq * c;
    d[1] = -(cfg.lambda1 / r1sq) * sq * s;
    d[2] = -(cfg.lambda2 / r2sq) * sq * s;
    d[3] = (cfg.alpha * cfg.C / 4.0) * sq * s;
    d[4] = (cfg.C / 2.0) * sq * s;
    return d;
}

double first_integral(const FamilyConfig& cfg, const Vec& y) {
    double r1sq = cfg.alpha1 + cfg.lambda1 * y[0];
    double r2sq = cfg.alpha2 + cfg.lambda2 * y[0];
    double psi = y[1] + y[2] - y[3];
    // d/ds of sqrt(Q) e^{f(u)} sin(psi) is Q (2f' - alpha C / 4) cos sin e^f,
    // so the conserved exponent is + alpha C u / 8
    return std::sqrt(r1sq * r2sq) *
           std::exp(cfg.alpha * cfg.C * y[0] / 8.0) * std::sin(psi);
}

bool family_state_valid(const FamilyConfig& cfg, const Vec& y) {
    return (cfg.alpha1 + cfg.lambda1 * y[0]) > 1e-10 &&
           (cfg.alpha2 + cfg.lambda2 * y[0]) > 1e-10;
}

namespace {

ODETrajectory from_solution(const FamilyConfig& cfg, const OdeSolution& sol) {
    ODETrajectory traj;
    traj.config = cfg;
    traj.s = sol.t;
    traj.states = sol.y;
    traj.A.reserve(sol.y.size());
    for (const auto& y : sol.y) traj.A.push_back(first_integral(cfg, y));
    traj.domain_exit = sol.domain_exit;
    traj.s_end = sol.t_end;
    return traj;
}

}  // namespace

ODETrajectory integrate_family(const FamilyConfig& cfg) {
    OdeRhs rhs = [cfg](double, const Vec& y) { return family_rhs(cfg, y); };
    OdeValid valid = [cfg](double, const Vec& y) {
        return family_state_valid(cfg, y);
    };
    return from_solution(cfg, integrate_adaptive(rhs, cfg.s0, cfg.s1,
                                                 cfg.initial_state(), cfg.tol,
                                                 cfg.h0, cfg.h_floor, valid));
}

ODETrajectory integrate_family_fixed(const FamilyConfig& cfg, int n_steps) {
    OdeRhs rhs = [cfg](double, const Vec& y) { return family_rhs(cfg, y); };
    OdeValid valid = [cfg](double, const Vec& y) {
        return family_state_valid(cfg, y);
    };
    return from_solution(cfg, integrate_fixed(rhs, cfg.s0, cfg.s1,
                                              cfg.initial_state(), n_steps,
                                              valid));
}

double ODETrajectory::drift() const {
    // relative to the invariant's scale: A spans exponential ranges when u
    // grows, so absolute drift would only measure the conditioning of exp
    double scale = 1.0, worst = 0.0;
    for (double a : A) scale = std::max(scale, std::abs(a));
    for (double a : A) worst = std::max(worst, std::abs(a - A.front()));
    return worst / scale;
}

void write_trajectory_csv(const ODETrajectory& traj, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("write_trajectory_csv: cannot open " + path);
    std::fprintf(f, "s,u,phi1,phi2,theta_tilde,z,A\n");
    for (size_t i = 0; i < traj.s.size(); ++i) {
        const Vec& y = traj.states[i];
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", traj.s[i],
                     y[0], y[1], y[2], y[3], y[4], traj.A[i]);
    }
    std::fclose(f);
}

namespace {

// all first and second s-derivatives of the reduced state needed for jets
struct SRates {
    double r1, r2, p1, p2, z;
    double r1d, r2d, p1d, p2d, zd;
    double r1dd, r2dd, p1dd, p2dd, zdd;
};

SRates s_rates(const FamilyConfig& cfg, const Vec& y) {
    SRates r;
    double r1sq = cfg.alpha1 + cfg.lambda1 * y[0];
    double r2sq = cfg.alpha2 + cfg.lambda2 * y[0];
    if (r1sq <= 0.0 || r2sq <= 0.0)
        throw std::domain_error("assemble_surface: radius degenerated");
    r.r1 = std::sqrt(r1sq);
    r.r2 = std::sqrt(r2sq);
    r.p1 = y[1];
    r.p2 = y[2];
    r.z = y[4];
    double psi = y[1] + y[2] - y[3];
    double c = std::cos(psi), s = std::sin(psi);
    r.r1d = cfg.lambda1 * r.r2 * c;
    r.r2d = cfg.lambda2 * r.r1 * c;
    r.p1d = -cfg.lambda1 * (r.r2 / r.r1) * s;
    r.p2d = -cfg.lambda2 * (r.r1 / r.r2) * s;
    double thd = (cfg.alpha * cfg.C / 4.0) * r.r1 * r.r2 * s;
    r.zd = (cfg.C / 2.0) * r.r1 * r.r2 * s;
    double psid = r.p1d + r.p2d - thd;
    double sd = c * psid, cd = -s * psid;
    r.r1dd = cfg.lambda1 * (r.r2d * c + r.r2 * cd);
    r.r2dd = cfg.lambda2 * (r.r1d * c + r.r1 * cd);
    r.p1dd = -cfg.lambda1 *
             (((r.r2d * r.r1 - r.r2 * r.r1d) / r1sq) * s + (r.r2 / r.r1) * sd);
    r.p2dd = -cfg.lambda2 *
             (((r.r1d * r.r2 - r.r1 * r.r2d) / r2sq) * s + (r.r1 / r.r2) * sd);
    r.zdd = (cfg.C / 2.0) *
            ((r.r1d * r.r2 + r.r1 * r.r2d) * s + r.r1 * r.r2 * sd);
    return r;
}

}  // namespace

ImmersionChart assemble_surface(const ODETrajectory& traj) {
    const FamilyConfig cfg = traj.config;
    const int scase = cfg.surface_case();
    double a1 = std::sqrt(cfg.C / cfg.lambda1);
    double a2 = (scase == 1) ? std::sqrt(cfg.C / cfg.lambda2)
                             : std::sqrt(-cfg.C / cfg.lambda2);

    OdeRhs rhs = [cfg](double, const Vec& y) { return family_rhs(cfg, y); };
    double span = traj.s_end - cfg.s0;
    if (span <= 0.0)
        throw std::invalid_argument("assemble_surface: empty trajectory");
    auto table = std::make_shared<DenseTable>(rhs, cfg.s0, traj.s_end,
                                              cfg.initial_state(),
                                              std::min(1e-3, span / 16.0));

    // transverse profile and its t-derivatives
    auto profile = [=](double t, double d[2][3]) {
        if (scase == 1) {
            d[0][0] = a1 * std::cos(t);
            d[0][1] = -a1 * std::sin(t);
            d[0][2] = -a1 * std::cos(t);
            d[1][0] = a2 * std::sin(t);
            d[1][1] = a2 * std::cos(t);
            d[1][2] = -a2 * std::sin(t);
        } else {
            double sec = 1.0 / std::cos(t), tn = std::tan(t);
            d[0][0] = a1 * sec;
            d[0][1] = a1 * sec * tn;
            d[0][2] = a1 * sec * (2.0 * tn * tn + 1.0);
            d[1][0] = a2 * tn;
            d[1][1] = a2 * sec * sec;
            d[1][2] = 2.0 * a2 * sec * sec * tn;
        }
    };

    ImmersionChart c;
    c.n = 2;
    if (scase == 1) {
        c.u_min = 0.0;
        c.u_max = 2.0 * M_PI;
        c.periodic_u = true;
    } else {
        c.u_min = -M_PI / 2.0 + 0.2;
        c.u_max = M_PI / 2.0 - 0.2;
    }
    c.v_min = cfg.s0;
    c.v_max = traj.s_end;

    auto assemble = [=](double t, double s, int dt, int ds) {
        double x[2][3];
        profile(t, x);
        SRates r = s_rates(cfg, table->eval(s));
        auto slot = [&](double xv[3], double rr, double rrd, double rrdd,
                        double ph, double phd, double phdd, double* out) {
            double cph = std::cos(ph), sph = std::sin(ph);
            double f0c = rr * cph, f0s = rr * sph;
            double f1c = rrd * cph - rr * sph * phd;
            double f1s = rrd * sph + rr * cph * phd;
            double f2c = rrdd * cph - 2.0 * rrd * sph * phd -
                         rr * cph * phd * phd - rr * sph * phdd;
            double f2s = rrdd * sph + 2.0 * rrd * cph * phd -
                         rr * sph * phd * phd + rr * cph * phdd;
            double sc[3] = {f0c, f1c, f2c}, ss[3] = {f0s, f1s, f2s};
            out[0] = xv[dt] * sc[ds];
            out[1] = xv[dt] * ss[ds];
        };
        Vec F(5);
        double w[2];
        slot(x[0], r.r1, r.r1d, r.r1dd, r.p1, r.p1d, r.p1dd, w);
        F[0] = w[0];
        F[1] = w[1];
        slot(x[1], r.r2, r.r2d, r.r2dd, r.p2, r.p2d, r.p2dd, w);
        F[2] = w[0];
        F[3] = w[1];
        double zj[3] = {r.z, r.zd, r.zdd};
        F[4] = (dt == 0) ? zj[ds] : 0.0;
        return F;
    };

    c.map = [=](double t, double s) { return assemble(t, s, 0, 0); };
    c.du = [=](double t, double s) { return assemble(t, s, 1, 0); };
    c.dv = [=](double t, double s) { return assemble(t, s, 0, 1); };
    c.duu = [=](double t, double s) { return assemble(t, s, 2, 0); };
    c.duv = [=](double t, double s) { return assemble(t, s, 1, 1); };
    c.dvv = [=](double t, double s) { return assemble(t, s, 0, 2); };
    return c;
}

}  // namespace lmcf
