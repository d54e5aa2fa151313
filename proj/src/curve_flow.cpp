#include "lmcf/curve_flow.hpp"

#include "lmcf/lift.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lmcf {

Vec DiscreteCurve::point(int i) const {
    const int m = size();
    int k = ((i % m) + m) % m;
    double wraps = std::floor((double)i / m);
    Vec p = points.row(k).transpose();
    p[2] += wraps * z_offset;
    return p;
}

CurveGeometry curve_geometry(const AmbientSpace& space, const DiscreteCurve& c) {
    if (space.n() != 1)
        throw std::invalid_argument("curve_geometry: ambient must be R^3");
    const int m = c.size();
    if (m < 5) throw std::invalid_argument("curve_geometry: need >= 5 points");
    CurveGeometry g;
    g.e.resize(m);
    g.normal.resize(m);
    g.kappa.resize(m);
    g.lambda.resize(m);
    g.legendrian_residual.resize(m);

    // index-parameter derivative, second order (central / one-sided)
    auto deriv = [&](auto&& f, int i) -> Vec {
        if (c.periodic || (i > 0 && i + 1 < m))
            return 0.5 * (f(i + 1) - f(i - 1));
        if (i == 0) return -1.5 * f(0) + 2.0 * f(1) - 0.5 * f(2);
        return 1.5 * f(m - 1) - 2.0 * f(m - 2) + 0.5 * f(m - 3);
    };
    auto pt = [&](int i) { return c.point(i); };

    std::vector<double> speed(m);
    for (int i = 0; i < m; ++i) {
        Vec p = pt(i);
        Vec T = deriv(pt, i);
        double nT = space.norm(p, T);
        g.e[i] = T / nT;
        speed[i] = nT;
        g.normal[i] = space.phi(p, g.e[i]);
        g.legendrian_residual[i] = std::abs(space.eta(p, T)) / nT;
    }
    auto ef = [&](int i) {
        // align tangents across the seam: e is periodic, no offset needed
        const int k = ((i % m) + m) % m;
        return g.e[k];
    };
    double prev = 0.0;
    for (int i = 0; i < m; ++i) {
        Vec p = pt(i);
        Vec de = deriv(ef, i) / speed[i];
        Vec cov = de + space.christoffel(p, g.e[i], g.e[i]);
        g.kappa[i] = space.metric(p, cov, g.normal[i]);
        double raw = std::atan2(g.e[i][1], g.e[i][0]);
        if (i == 0)
            g.lambda[i] = raw;
        else
            g.lambda[i] = raw + 2.0 * M_PI * std::round((prev - raw) / (2.0 * M_PI));
        prev = g.lambda[i];
    }
    double mins = 1e300;
    int last = c.periodic ? m : m - 1;
    for (int i = 0; i < last; ++i) {
        Vec p = pt(i);
        Vec seg = pt(i + 1) - pt(i);
        mins = std::min(mins, space.norm(p, seg));
    }
    g.min_seg_g = mins;
    return g;
}

DiscreteCurve flow_step(const AmbientSpace& space, const DiscreteCurve& c,
                        double dt) {
    CurveGeometry g = curve_geometry(space, c);
    if (dt <= 0.0) dt = 0.25 * g.min_seg_g * g.min_seg_g;
    const int m = c.size();
    DiscreteCurve out = c;
    Vec xiv = space.xi();
    for (int i = 0; i < m; ++i) {
        Vec v = g.kappa[i] * g.normal[i] + g.lambda[i] * xiv;
        out.points.row(i) += dt * v.transpose();
    }
    // re-lift z from the updated transverse trace
    Eigen::MatrixXd xy = out.points.leftCols(2);
    std::vector<double> param(m);
    for (int i = 0; i < m; ++i) param[i] = (double)i;
    CurveLift lift = lift_curve(xy, param, c.periodic, out.points(0, 2));
    for (int i = 0; i < m; ++i) out.points(i, 2) = lift.z[i];
    if (c.periodic) out.z_offset = lift.holonomy;
    out.time = c.time + dt;
    return out;
}

namespace {

double hausdorff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    auto oneside = [](const Eigen::MatrixXd& p, const Eigen::MatrixXd& q) {
        double worst = 0.0;
        for (int i = 0; i < p.rows(); ++i) {
            double best = 1e300;
            for (int j = 0; j < q.rows(); ++j)
                best = std::min(best,
                                (p.row(i) - q.row(j)).squaredNorm());
            worst = std::max(worst, best);
        }
        return std::sqrt(worst);
    };
    return std::max(oneside(a, b), oneside(b, a));
}

Eigen::MatrixXd normalized_trace(const DiscreteCurve& c) {
    Eigen::MatrixXd xy = c.points.leftCols(2);
    double rms = std::sqrt(xy.squaredNorm() / (double)xy.rows());
    if (rms <= 0.0) throw std::invalid_argument("self_similarity: degenerate curve");
    return xy / rms;
}

Eigen::MatrixXd rotated(const Eigen::MatrixXd& xy, double ang) {
    Eigen::Matrix2d R;
    R << std::cos(ang), -std::sin(ang), std::sin(ang), std::cos(ang);
    return xy * R.transpose();
}

}  // namespace

double self_similarity_score(const DiscreteCurve& a, const DiscreteCurve& b) {
    Eigen::MatrixXd pa = normalized_trace(a), pb = normalized_trace(b);
    double best = 1e300, best_ang = 0.0;
    const int coarse = 256;
    for (int k = 0; k < coarse; ++k) {
        double ang = 2.0 * M_PI * k / coarse;
        double d = hausdorff(rotated(pa, ang), pb);
        if (d < best) {
            best = d;
            best_ang = ang;
        }
    }
    // golden-section refinement around the best coarse angle
    double lo = best_ang - 2.0 * M_PI / coarse, hi = best_ang + 2.0 * M_PI / coarse;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = hausdorff(rotated(pa, x1), pb), f2 = hausdorff(rotated(pa, x2), pb);
    for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = hausdorff(rotated(pa, x1), pb);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = hausdorff(rotated(pa, x2), pb);
        }
    }
    return std::min(best, std::min(f1, f2));
}

DiscreteCurve helix_circle(double B, int m) {
    if (B <= 0.0) throw std::invalid_argument("helix_circle: B must be positive");
    DiscreteCurve c;
    c.points.resize(m, 3);
    double r = std::sqrt(B);
    for (int k = 0; k < m; ++k) {
        double th = 2.0 * M_PI * k / m;
        c.points(k, 0) = r * std::sin(th);
        c.points(k, 1) = -r * std::cos(th);
        c.points(k, 2) = -0.5 * B * th;
    }
    c.periodic = true;
    c.z_offset = -M_PI * B;
    return c;
}

void append_flow_csv(const AmbientSpace& space, const DiscreteCurve& c,
                     const std::string& path, bool header) {
    std::FILE* f = std::fopen(path.c_str(), header ? "w" : "a");
    if (!f) throw std::runtime_error("append_flow_csv: cannot open " + path);
    if (header) std::fprintf(f, "time,index,x,y,z,kappa,lambda\n");
    CurveGeometry g = curve_geometry(space, c);
    for (int i = 0; i < c.size(); ++i)
        std::fprintf(f, "%.17g,%d,%.17g,%.17g,%.17g,%.17g,%.17g\n", c.time, i,
                     c.points(i, 0), c.points(i, 1), c.points(i, 2), g.kappa[i],
                     g.lambda[i]);
    std::fclose(f);
}

}  // namespace lmcf
