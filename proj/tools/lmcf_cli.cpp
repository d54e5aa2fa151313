// Command-line front end: structure checks for the ambient space, residual
// gates for the closed-form candidates, the reduced-equation integrator, the
// height lift, and the discrete curve flow.  All file outputs are
// byte-deterministic for a fixed configuration and seed; timing goes to
// stderr only.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lmcf/ambient.hpp"
#include "lmcf/curve_flow.hpp"
#include "lmcf/euclidean.hpp"
#include "lmcf/family.hpp"
#include "lmcf/immersion.hpp"
#include "lmcf/lift.hpp"
#include "lmcf/models.hpp"
#include "lmcf/report.hpp"

using namespace lmcf;

namespace {

struct OutputOpts {
    std::string json_path, csv_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
    cmd->add_option("--json", out.json_path, "write the JSON report here");
    cmd->add_option("--csv-report", out.csv_path, "write the CSV report here");
}

// Writes/prints the report and returns the process exit code.
int emit(const VerificationReport& rep, const OutputOpts& out) {
    std::string json = serialize_report_json(rep);
    if (!out.json_path.empty())
        write_file(resolve_output_path(out.json_path), json);
    else
        std::cout << json;
    if (!out.csv_path.empty())
        write_file(resolve_output_path(out.csv_path), serialize_report_csv(rep));
    std::cerr << rep.subject << ": " << (rep.all_pass() ? "pass" : "FAIL")
              << " (" << rep.rows.size() << " checks)\n";
    return rep.all_pass() ? 0 : 1;
}

std::string fmt(double x) { return format_double(x); }

Vec random_point(std::mt19937_64& rng, int dim) {
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    Vec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = U(rng);
    return p;
}

// ---------------------------------------------------------------------------

VerificationReport run_verify_ambient(int n, unsigned long long seed,
                                      int samples) {
    AmbientSpace sp(n);
    std::mt19937_64 rng(seed);
    VerificationReport rep;
    rep.subject = "ambient:R" + std::to_string(2 * n + 1);
    rep.seed = seed;
    rep.config["n"] = std::to_string(n);
    rep.config["samples"] = std::to_string(samples);

    std::array<double, 4> ax = {0, 0, 0, 0};
    double ric = 0.0, sec = 0.0;
    for (int t = 0; t < samples; ++t) {
        Vec p = random_point(rng, sp.dim());
        auto r = sp.sasakian_residuals(p);
        for (int k = 0; k < 4; ++k) ax[k] = std::max(ax[k], r[k]);
        ric = std::max(ric, sp.ricci_residual(p));
        Vec X = random_point(rng, sp.dim());
        X -= sp.metric(p, X, sp.xi()) * sp.xi();  // transverse plane section
        sec = std::max(sec, std::abs(sp.phi_sectional_curvature(p, X) + 3.0));
    }
    rep.add("phi_square_identity", ax[0], 1e-12);
    rep.add("deta_compatibility", ax[1], 1e-12);
    rep.add("metric_compatibility", ax[2], 1e-12);
    rep.add("nijenhuis_identity", ax[3], 1e-12);
    rep.add("phi_sectional_dev", sec, 1e-8);
    rep.add("ricci_residual", ric, 1e-12);

    double conn = 0.0;
    for (int t = 0; t < samples; ++t) {
        Vec p = random_point(rng, sp.dim());
        for (int i = 0; i <= 2 * n; ++i)
            for (int j = 0; j <= 2 * n; ++j)
                conn = std::max(conn,
                                (sp.frame_connection(i, j) -
                                 sp.frame_connection_coordinate(i, j, p))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    rep.add("connection_table_dev", conn, 1e-12);

    // curvature sign convention: R(E_1, Phi E_1) Phi E_1 = -3 E_1
    Vec a = Vec::Zero(2 * n + 1), b = Vec::Zero(2 * n + 1);
    a[0] = 1.0;
    b[n] = 1.0;
    Vec r = sp.frame_curvature(a, b, b) + 3.0 * a;
    rep.add("curvature_convention", r.cwiseAbs().maxCoeff(), 1e-12);
    return rep;
}

// ---------------------------------------------------------------------------

struct ModelOpts {
    std::string name = "torus";
    double a = -0.125;
    double nu = 0.8;
    double gamma = 0.7;
    double B = 1.0;
    double x0 = 1.3;
    double t_max = 10.0;
    int grid = 48;
    std::string grid_csv;
};

void add_surface_rows(VerificationReport& rep, const AmbientSpace& sp,
                      const ImmersionChart& chart, double alpha, int grid,
                      bool gated, double leg_gate, double shr_gate,
                      const std::string& grid_csv, bool angle_gated = true) {
    GeometryGrid g = sample_grid(sp, chart, GridSpec::uniform(chart, grid, grid));
    auto sh = evaluate_shrinker(sp, g, alpha);
    rep.add("legendrian_max", sh.max_legendrian, leg_gate, gated);
    rep.add("shrinker_max", sh.max_residual, shr_gate, gated);
    rep.add("shrinker_mean", sh.mean_residual, shr_gate, false);
    rep.add("angle_constant", sh.c_star, 0.0, false);
    if (chart.n == 2) {
        // discretization-dominated diagnostics; gated only on the uniform
        // closed-form charts
        bool ag = gated && angle_gated;
        rep.add("angle_gradient_max", angle_gradient_residual(sp, g), 1e-3, ag);
        rep.add("theta_laplacian_max", theta_laplacian_max(g), 1e-3, ag);
    }
    if (!grid_csv.empty()) write_grid_csv(g, resolve_output_path(grid_csv));
}

VerificationReport run_verify_model(const ModelOpts& opt) {
    VerificationReport rep;
    rep.subject = "model:" + opt.name;
    rep.config["name"] = opt.name;
    rep.config["grid"] = std::to_string(opt.grid);

    if (opt.name == "cylinder" || opt.name == "torus" || opt.name == "psi" ||
        opt.name == "upsilon") {
        rep.config["a"] = fmt(opt.a);
        AmbientSpace sp(2);
        ImmersionChart chart;
        bool gated = true;
        if (opt.name == "cylinder") chart = model_cylinder(opt.a);
        if (opt.name == "torus") chart = model_torus(opt.a);
        if (opt.name == "psi") {
            chart = model_psi(opt.a, opt.nu);
            rep.config["nu"] = fmt(opt.nu);
        }
        if (opt.name == "upsilon") {
            // surfaced for inspection; the closure defect means no gate applies
            chart = model_upsilon(opt.a, opt.gamma);
            rep.config["gamma"] = fmt(opt.gamma);
            gated = false;
        }
        add_surface_rows(rep, sp, chart, 8.0 * opt.a, opt.grid, gated, 1e-10,
                         5e-5, opt.grid_csv);
        return rep;
    }

    if (opt.name == "clifford") {
        AmbientSpace sp(2);
        CliffordPair cp = clifford_pair();
        add_surface_rows(rep, sp, cp.legendrian, -1.0, opt.grid, true, 1e-10,
                         5e-5, opt.grid_csv);

        GridSpec spec = GridSpec::uniform(cp.legendrian, opt.grid, opt.grid);
        GeometryGrid g = sample_grid(sp, cp.legendrian, spec);
        double adev = 0.0;
        for (const auto& s : g.samples)
            adev = std::max(adev, std::abs(s.A_norm_sq - 2.0));
        rep.add("second_form_norm_dev", adev, 1e-4);

        LagrangianChart f = project_chart(sp, cp.legendrian, spec);
        LiftResult lift = lift_chart(f);
        int nv = (int)spec.v.size();
        double zoff = cp.legendrian.map(spec.u[0], spec.v[0])[4] - lift.at(0, 0, nv);
        double zdev = 0.0;
        for (int i = 0; i < (int)spec.u.size(); ++i)
            for (int j = 0; j < nv; ++j)
                zdev = std::max(zdev,
                                std::abs(lift.at(i, j, nv) + zoff +
                                         2.0 * (spec.u[i] + spec.v[j])));
        rep.add("lift_height_dev", zdev, 1e-8);
        rep.add("holonomy_u_dev", std::abs(lift.holonomy_u + 4.0 * M_PI), 1e-6);
        rep.add("holonomy_v_dev", std::abs(lift.holonomy_v + 4.0 * M_PI), 1e-6);
        rep.add("global_lift", lift.global_lift ? 1.0 : 0.0, 0.0, false);

        double rdev = 0.0, kmax = 0.0, ten = 0.0;
        for (double u = 0.1; u < 6.2; u += 0.6)
            for (double v = 0.1; v < 6.2; v += 0.6) {
                Eigen::VectorXd F = cp.spherical.map(u, v);
                rdev = std::max(rdev, std::abs(F.squaredNorm() - 3.0));
                kmax = std::max(kmax, std::abs(gauss_curvature(cp.spherical, u, v)));
                ten = std::max(ten, (laplace_position(cp.spherical, u, v) +
                                     (2.0 / 3.0) * F)
                                        .cwiseAbs()
                                        .maxCoeff());
            }
        rep.add("sphere_radius_dev", rdev, 1e-12);
        rep.add("gauss_curvature_max", kmax, 1e-6);
        rep.add("minimality_residual", ten, 1e-6);
        return rep;
    }

    if (opt.name == "abresch-langer") {
        rep.config["B"] = fmt(opt.B);
        AmbientSpace sp(1);
        ALCurveConfig cfg;
        cfg.B = opt.B;
        cfg.x0 = opt.x0;
        cfg.t_max = opt.t_max;
        rep.config["x0"] = fmt(opt.x0);
        ALCurve curve(cfg);
        // the normal/vertical decomposition closes only at B = 1
        add_surface_rows(rep, sp, curve.chart(), -4.0, opt.grid * opt.grid, true,
                         1e-10, 1e-6, opt.grid_csv);
        double drift = 0.0, v0 = curve.conserved(cfg.t_min);
        for (double t = cfg.t_min; t <= cfg.t_max; t += 0.05)
            drift = std::max(drift, std::abs(curve.conserved(t) - v0));
        rep.add("conserved_drift", drift, 1e-8);
        return rep;
    }

    throw CLI::ValidationError("--name", "unknown model " + opt.name);
}

// ---------------------------------------------------------------------------

struct FamilyOpts {
    FamilyConfig cfg;
    std::string traj_csv, grid_csv;
    bool assemble = false;
    int grid = 24;
};

VerificationReport run_family(const FamilyOpts& opt) {
    VerificationReport rep;
    rep.subject = "family";
    rep.config["lambda1"] = fmt(opt.cfg.lambda1);
    rep.config["lambda2"] = fmt(opt.cfg.lambda2);
    rep.config["C"] = fmt(opt.cfg.C);
    rep.config["alpha"] = fmt(opt.cfg.alpha);
    rep.config["alpha1"] = fmt(opt.cfg.alpha1);
    rep.config["alpha2"] = fmt(opt.cfg.alpha2);
    rep.config["s1"] = fmt(opt.cfg.s1);

    ODETrajectory traj = integrate_family(opt.cfg);
    rep.add("surface_case", (double)opt.cfg.surface_case(), 0.0, false);
    rep.add("first_integral_drift", traj.drift(), 1e-8);
    rep.add("domain_exit", traj.domain_exit ? 1.0 : 0.0, 0.0, false);
    rep.add("s_end", traj.s_end, 0.0, false);
    if (!opt.traj_csv.empty())
        write_trajectory_csv(traj, resolve_output_path(opt.traj_csv));

    if (opt.assemble) {
        AmbientSpace sp(2);
        ImmersionChart chart = assemble_surface(traj);
        add_surface_rows(rep, sp, chart, opt.cfg.alpha, opt.grid, true, 1e-8,
                         1e-4, opt.grid_csv, false);
    }
    return rep;
}

// ---------------------------------------------------------------------------

struct LiftOpts {
    std::string input, z_csv;
    int n = 2;
    bool periodic_u = false, periodic_v = false;
    double period_u = 2.0 * M_PI, period_v = 2.0 * M_PI;
};

// chart CSV: header u,v,x1,y1,x2,y2 (n=2, v-major blocks per u) or
// t,x,y (n=1)
VerificationReport run_lift(const LiftOpts& opt) {
    VerificationReport rep;
    rep.subject = "lift";
    rep.config["input"] = opt.input;
    std::ifstream in(opt.input);
    if (!in) throw CLI::ValidationError("--input", "cannot open " + opt.input);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> r;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) r.push_back(std::stod(cell));
        rows.push_back(r);
    }

    if (opt.n == 1) {
        int m = (int)rows.size();
        Eigen::MatrixXd xy(m, 2);
        std::vector<double> t(m);
        for (int i = 0; i < m; ++i) {
            t[i] = rows[i][0];
            xy(i, 0) = rows[i][1];
            xy(i, 1) = rows[i][2];
        }
        CurveLift lift = lift_curve(xy, t, opt.periodic_u);
        rep.add("holonomy", lift.holonomy, 0.0, false);
        rep.add("obstruction_nontrivial",
                embedding_obstruction_nontrivial(lift.holonomy) ? 1.0 : 0.0, 0.0,
                false);
        if (!opt.z_csv.empty()) {
            std::string out = "t,z\n";
            for (int i = 0; i < m; ++i)
                out += fmt(t[i]) + "," + fmt(lift.z[i]) + "\n";
            write_file(resolve_output_path(opt.z_csv), out);
        }
        return rep;
    }

    LagrangianChart f;
    f.n = 2;
    f.periodic_u = opt.periodic_u;
    f.periodic_v = opt.periodic_v;
    f.period_u = opt.period_u;
    f.period_v = opt.period_v;
    for (const auto& r : rows) {
        if (r.size() != 6)
            throw CLI::ValidationError("--input", "expected u,v,x1,y1,x2,y2 rows");
        if (f.u.empty() || r[0] != f.u.back()) f.u.push_back(r[0]);
        if ((int)f.u.size() == 1) f.v.push_back(r[1]);
        Vec p(4);
        p << r[2], r[3], r[4], r[5];
        f.points.push_back(p);
    }
    if (f.points.size() != f.u.size() * f.v.size())
        throw CLI::ValidationError("--input", "grid is not complete v-major");
    LiftResult lift = lift_chart(f);
    rep.add("closure_residual", lift.closure_residual, 1e-8);
    if (lift.has_holonomy_u) rep.add("holonomy_u", lift.holonomy_u, 0.0, false);
    if (lift.has_holonomy_v) rep.add("holonomy_v", lift.holonomy_v, 0.0, false);
    rep.add("global_lift", lift.global_lift ? 1.0 : 0.0, 0.0, false);
    if (!opt.z_csv.empty()) {
        std::string out = "u,v,z\n";
        for (int i = 0; i < f.nu(); ++i)
            for (int j = 0; j < f.nv(); ++j)
                out += fmt(f.u[i]) + "," + fmt(f.v[j]) + "," +
                       fmt(lift.at(i, j, f.nv())) + "\n";
        write_file(resolve_output_path(opt.z_csv), out);
    }
    return rep;
}

// ---------------------------------------------------------------------------

struct FlowOpts {
    double B = 1.0;
    int m = 256;
    int steps = 50;
    int stride = 10;
    std::string csv;
};

VerificationReport run_flow(const FlowOpts& opt) {
    VerificationReport rep;
    rep.subject = "flow";
    rep.config["B"] = fmt(opt.B);
    rep.config["points"] = std::to_string(opt.m);
    rep.config["steps"] = std::to_string(opt.steps);
    AmbientSpace sp(1);
    DiscreteCurve c0 = helix_circle(opt.B, opt.m);
    DiscreteCurve c = c0;
    if (!opt.csv.empty())
        append_flow_csv(sp, c, resolve_output_path(opt.csv), true);
    for (int k = 1; k <= opt.steps; ++k) {
        c = flow_step(sp, c);
        if (!opt.csv.empty() && (k % opt.stride == 0 || k == opt.steps))
            append_flow_csv(sp, c, resolve_output_path(opt.csv), false);
    }
    CurveGeometry g = curve_geometry(sp, c);
    double leg = 0.0;
    for (double r : g.legendrian_residual) leg = std::max(leg, r);
    rep.add("self_similarity_score", self_similarity_score(c, c0), 1e-3);
    rep.add("legendrian_max", leg, 1e-2);
    rep.add("final_time", c.time, 0.0, false);
    rep.add("final_holonomy", c.z_offset, 0.0, false);
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian shrinker toolkit"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_doc;
    app.add_option("--config", config_doc,
                   "key=value configuration file for the chosen subcommand "
                   "(command-line flags override)");
    app.require_subcommand(1);

    unsigned long long seed = 12345;

    auto t_start = std::chrono::steady_clock::now();
    int rc = 0;
    OutputOpts out;

    auto* verify = app.add_subcommand("verify", "structure and residual gates");
    verify->fallthrough();
    verify->require_subcommand(1);

    int amb_n = 2, amb_samples = 30;
    auto* v_amb = verify->add_subcommand("ambient", "contact space identities");
    v_amb->fallthrough();
    v_amb->add_option("--seed", seed, "PRNG seed, echoed in the report");
    v_amb->add_option("--n", amb_n, "complex rank (1 or 2)")
        ->check(CLI::Range(1, 2));
    v_amb->add_option("--samples", amb_samples, "random sample points");
    add_output_opts(v_amb, out);
    v_amb->callback([&] { rc = emit(run_verify_ambient(amb_n, seed, amb_samples), out); });

    ModelOpts mo;
    auto* v_mod = verify->add_subcommand("model", "closed-form candidates");
    v_mod->fallthrough();
    v_mod->add_option("--seed", seed, "PRNG seed, echoed in the report");
    v_mod->add_option("--name", mo.name, "cylinder|torus|upsilon|psi|clifford|abresch-langer")
        ->required();
    v_mod->add_option("--a", mo.a, "contraction parameter (alpha = 8a)");
    v_mod->add_option("--nu", mo.nu, "profile parameter of psi");
    v_mod->add_option("--gamma", mo.gamma, "profile parameter of upsilon");
    v_mod->add_option("--B", mo.B, "curve parameter");
    v_mod->add_option("--x0", mo.x0, "curve initial x (sqrt(B) is the circle)");
    v_mod->add_option("--t-max", mo.t_max, "curve parameter range");
    v_mod->add_option("--grid", mo.grid, "grid resolution per axis");
    v_mod->add_option("--grid-csv", mo.grid_csv, "write per-point residuals here");
    add_output_opts(v_mod, out);
    v_mod->callback([&] { auto r = run_verify_model(mo);
        r.seed = seed;
        rc = emit(r, out); });

    auto* family = app.add_subcommand("family", "reduced shrinker equation");
    family->fallthrough();
    family->require_subcommand(1);
    FamilyOpts fo;
    auto* f_int = family->add_subcommand("integrate", "integrate and optionally assemble");
    f_int->fallthrough();
    f_int->add_option("--seed", seed, "PRNG seed, echoed in the report");
    f_int->add_option("--lambda1", fo.cfg.lambda1);
    f_int->add_option("--lambda2", fo.cfg.lambda2);
    f_int->add_option("--C", fo.cfg.C);
    f_int->add_option("--alpha", fo.cfg.alpha);
    f_int->add_option("--alpha1", fo.cfg.alpha1);
    f_int->add_option("--alpha2", fo.cfg.alpha2);
    f_int->add_option("--phi1", fo.cfg.phi1_0);
    f_int->add_option("--phi2", fo.cfg.phi2_0);
    f_int->add_option("--theta0", fo.cfg.theta0);
    f_int->add_option("--u0", fo.cfg.u0);
    f_int->add_option("--s0", fo.cfg.s0);
    f_int->add_option("--s1", fo.cfg.s1);
    f_int->add_option("--tol", fo.cfg.tol);
    f_int->add_option("--traj-csv", fo.traj_csv, "trajectory samples");
    f_int->add_flag("--assemble", fo.assemble, "verify the assembled chart");
    f_int->add_option("--grid", fo.grid, "assembled grid resolution");
    f_int->add_option("--grid-csv", fo.grid_csv, "assembled per-point residuals");
    add_output_opts(f_int, out);
    f_int->callback([&] { auto r = run_family(fo);
        r.seed = seed;
        rc = emit(r, out); });

    LiftOpts lo;
    auto* lift_cmd = app.add_subcommand("lift", "height lift of a sampled chart");
    lift_cmd->fallthrough();
    lift_cmd->add_option("--seed", seed, "PRNG seed, echoed in the report");
    lift_cmd->add_option("--input", lo.input, "chart CSV")->required();
    lift_cmd->add_option("--n", lo.n, "1 for curves, 2 for surfaces")
        ->check(CLI::Range(1, 2));
    lift_cmd->add_flag("--periodic-u", lo.periodic_u);
    lift_cmd->add_flag("--periodic-v", lo.periodic_v);
    lift_cmd->add_option("--period-u", lo.period_u);
    lift_cmd->add_option("--period-v", lo.period_v);
    lift_cmd->add_option("--z-csv", lo.z_csv, "lifted height field");
    add_output_opts(lift_cmd, out);
    lift_cmd->callback([&] { auto r = run_lift(lo);
        r.seed = seed;
        rc = emit(r, out); });

    FlowOpts wo;
    auto* flow_cmd = app.add_subcommand("flow", "discrete curve flow");
    flow_cmd->fallthrough();
    flow_cmd->add_option("--seed", seed, "PRNG seed, echoed in the report");
    flow_cmd->add_option("--B", wo.B);
    flow_cmd->add_option("--m", wo.m, "points on the curve");
    flow_cmd->add_option("--steps", wo.steps);
    flow_cmd->add_option("--stride", wo.stride, "CSV snapshot interval");
    flow_cmd->add_option("--flow-csv", wo.csv, "trajectory snapshots");
    add_output_opts(flow_cmd, out);
    flow_cmd->callback([&] { auto r = run_flow(wo);
        r.seed = seed;
        rc = emit(r, out); });

    std::string rep_in, rep_csv;
    auto* rep_cmd = app.add_subcommand("report", "convert a JSON report to CSV");
    rep_cmd->fallthrough();
    rep_cmd->add_option("--input", rep_in, "JSON report")->required();
    rep_cmd->add_option("--csv-out", rep_csv, "CSV destination")->required();
    rep_cmd->callback([&] {
        VerificationReport rep = parse_report_json(read_file(rep_in));
        write_file(resolve_output_path(rep_csv), serialize_report_csv(rep));
        rc = rep.all_pass() ? 0 : 1;
    });

    // Expand `--config file` into --key=value tokens, inserted before all
    // explicit option tokens so that command-line flags take precedence.
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        for (size_t i = 0; i < args.size(); ++i) {
            std::string path;
            if (args[i] == "--config" && i + 1 < args.size()) {
                path = args[i + 1];
                args.erase(args.begin() + i, args.begin() + i + 2);
            } else if (args[i].rfind("--config=", 0) == 0) {
                path = args[i].substr(9);
                args.erase(args.begin() + i);
            } else {
                continue;
            }
            std::ifstream cfg(path);
            if (!cfg) throw CLI::FileError::Missing(path);
            std::vector<std::string> extra;
            std::string line;
            while (std::getline(cfg, line)) {
                size_t h = line.find('#');
                if (h != std::string::npos) line = line.substr(0, h);
                size_t eq = line.find('=');
                if (eq == std::string::npos) continue;
                auto trim = [](std::string s) {
                    size_t a = s.find_first_not_of(" \t\r");
                    size_t b = s.find_last_not_of(" \t\r");
                    return a == std::string::npos ? std::string()
                                                 : s.substr(a, b - a + 1);
                };
                std::string key = trim(line.substr(0, eq));
                std::string val = trim(line.substr(eq + 1));
                if (!key.empty()) extra.push_back("--" + key + "=" + val);
            }
            size_t pos = 0;
            while (pos < args.size() && args[pos].rfind("-", 0) != 0) ++pos;
            args.insert(args.begin() + pos, extra.begin(), extra.end());
            break;
        }
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t_start);
    std::cerr << "elapsed " << dt.count() << " s\n";
    return rc;
}
