#include "lmcf/immersion.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

namespace lmcf {

ImmersionChart with_fd_step(const ImmersionChart& chart, double h) {
    ImmersionChart c = chart;
    c.du = c.dv = c.duu = c.duv = c.dvv = nullptr;
    c.fd_step = h;
    return c;
}

namespace {

Vec d1(const std::function<Vec(double)>& f, double t, double h) {
    return (-f(t + 2 * h) + 8.0 * f(t + h) - 8.0 * f(t - h) + f(t - 2 * h)) /
           (12.0 * h);
}

Vec d2(const std::function<Vec(double)>& f, double t, double h) {
    return (-f(t + 2 * h) + 16.0 * f(t + h) - 30.0 * f(t) + 16.0 * f(t - h) -
            f(t - 2 * h)) /
           (12.0 * h * h);
}

}  // namespace

Jet jet(const ImmersionChart& chart, double u, double v) {
    if (chart.excluded && chart.excluded(u, v))
        throw std::domain_error("jet: parameter in excluded region");
    Jet J;
    J.F = chart.map(u, v);
    if (chart.analytic()) {
        J.Fu = chart.du(u, v);
        J.Fuu = chart.duu(u, v);
        if (chart.n == 2) {
            J.Fv = chart.dv(u, v);
            J.Fuv = chart.duv(u, v);
            J.Fvv = chart.dvv(u, v);
        }
    } else {
        double h = chart.fd_step;
        auto fu = [&](double t) { return chart.map(t, v); };
        J.Fu = d1(fu, u, h);
        J.Fuu = d2(fu, u, h);
        if (chart.n == 2) {
            auto fv = [&](double t) { return chart.map(u, t); };
            J.Fv = d1(fv, v, h);
            J.Fvv = d2(fv, v, h);
            auto fuv = [&](double t) {
                auto g = [&](double s) { return chart.map(s, t); };
                return d1(g, u, h);
            };
            J.Fuv = d1(fuv, v, h);
        }
    }
    if (chart.n == 1) {
        J.Fv = Vec::Zero(J.F.size());
        J.Fuv = Vec::Zero(J.F.size());
        J.Fvv = Vec::Zero(J.F.size());
    }
    return J;
}

GeometrySample sample_point(const AmbientSpace& space, const ImmersionChart& chart,
                            double u, double v) {
    const int n = chart.n;
    Jet J = jet(chart, u, v);
    const Vec& p = J.F;

    GeometrySample s;
    s.u = u;
    s.v = v;
    s.F = J.F;
    s.Fu = J.Fu;
    s.Fv = J.Fv;

    std::vector<Vec> T{J.Fu};
    if (n == 2) T.push_back(J.Fv);
    Mat g = Mat::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g(a, b) = space.metric(p, T[a], T[b]);
    s.g_ind = g;
    double scale = g.trace() / n;
    if (g.determinant() < 1e-10 * std::pow(std::max(scale, 1e-30), n))
        throw std::runtime_error("sample_point: rank-deficient differential");

    // Gram-Schmidt in g; coeff(i,a) expresses e_i in the chart basis
    Mat coeff = Mat::Zero(n, n);
    s.e.resize(n);
    {
        double n1 = std::sqrt(g(0, 0));
        coeff(0, 0) = 1.0 / n1;
        s.e[0] = T[0] / n1;
        if (n == 2) {
            double pr = space.metric(p, T[1], s.e[0]);
            Vec w = T[1] - pr * s.e[0];
            double n2 = space.norm(p, w);
            s.e[1] = w / n2;
            coeff(1, 0) = -pr * coeff(0, 0) / n2;
            coeff(1, 1) = 1.0 / n2;
        }
    }

    double lr = 0.0;
    for (int a = 0; a < n; ++a)
        lr = std::max(lr, std::abs(space.eta(p, T[a])) / std::sqrt(g(a, a)));
    s.legendrian_residual = lr;

    // Legendre angle
    if (n == 2) {
        std::complex<double> z1u(J.Fu[0], J.Fu[1]), z1v(J.Fv[0], J.Fv[1]);
        std::complex<double> z2u(J.Fu[2], J.Fu[3]), z2v(J.Fv[2], J.Fv[3]);
        std::complex<double> c = 0.25 * (z1u * z2v - z1v * z2u);
        if (std::abs(c) < 1e-13 * (1.0 + scale))
            throw std::domain_error("sample_point: Legendre angle undefined");
        s.theta_raw = std::arg(c);
    } else {
        s.theta_raw = std::atan2(s.e[0][1], s.e[0][0]);
    }
    s.theta = s.theta_raw;

    // second fundamental form in the chart basis, A_ab = (F_ab + Gamma(F_a,F_b))^perp
    auto normal_part = [&](Vec w) {
        for (int i = 0; i < n; ++i) w -= space.metric(p, w, s.e[i]) * s.e[i];
        return w;
    };
    std::vector<std::vector<Vec>> A(n, std::vector<Vec>(n));
    A[0][0] = normal_part(J.Fuu + space.christoffel(p, J.Fu, J.Fu));
    if (n == 2) {
        A[0][1] = normal_part(J.Fuv + space.christoffel(p, J.Fu, J.Fv));
        A[1][0] = A[0][1];
        A[1][1] = normal_part(J.Fvv + space.christoffel(p, J.Fv, J.Fv));
    }
    Mat ginv = g.inverse();
    Vec H = Vec::Zero(space.dim());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) H += ginv(a, b) * A[a][b];
    s.H = H;
    s.H_norm = space.norm(p, H);

    double a2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec Aij = Vec::Zero(space.dim());
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    Aij += coeff(i, a) * coeff(j, b) * A[a][b];
            a2 += space.metric(p, Aij, Aij);
        }
    s.A_norm_sq = a2;

    // normal projection of the position vector in the frame {Phi e_i, xi}
    Vec xiv = space.xi();
    Vec Fp = space.metric(p, p, xiv) * xiv;
    for (int i = 0; i < n; ++i) {
        Vec pe = space.phi(p, s.e[i]);
        Fp += space.metric(p, p, pe) * pe;
    }
    s.F_perp = Fp;
    return s;
}

GridSpec GridSpec::uniform(const ImmersionChart& chart, int nu, int nv,
                           double margin) {
    GridSpec spec;
    double mu = chart.periodic_u ? 0.0 : margin * (chart.u_max - chart.u_min);
    double a = chart.u_min + mu, b = chart.u_max - mu;
    if (chart.periodic_u) b -= (b - a) / nu;  // avoid duplicating the seam
    for (int i = 0; i < nu; ++i)
        spec.u.push_back(a + (b - a) * i / std::max(1, nu - 1));
    if (chart.n == 2) {
        double mv = chart.periodic_v ? 0.0 : margin * (chart.v_max - chart.v_min);
        double c = chart.v_min + mv, d = chart.v_max - mv;
        if (chart.periodic_v) d -= (d - c) / nv;
        for (int j = 0; j < nv; ++j)
            spec.v.push_back(c + (d - c) * j / std::max(1, nv - 1));
    } else {
        spec.v.push_back(chart.v_min);
    }
    return spec;
}

double GeometryGrid::max_legendrian() const {
    double m = 0.0;
    for (const auto& s : samples) m = std::max(m, s.legendrian_residual);
    return m;
}

namespace {
double unwrap_next(double prev, double raw) {
    return raw + 2.0 * M_PI * std::round((prev - raw) / (2.0 * M_PI));
}
}  // namespace

GeometryGrid sample_grid(const AmbientSpace& space, const ImmersionChart& chart,
                         const GridSpec& spec) {
    GeometryGrid grid;
    grid.spec = spec;
    const int nu = (int)spec.u.size(), nv = (int)spec.v.size();
    grid.samples.reserve((size_t)nu * nv);
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            grid.samples.push_back(
                sample_point(space, chart, spec.u[i], spec.v[j]));
    // unwrap theta: along the first row in u, then along each column in v
    for (int i = 1; i < nu; ++i)
        grid.at(i, 0).theta = unwrap_next(grid.at(i - 1, 0).theta,
                                          grid.at(i, 0).theta_raw);
    for (int i = 0; i < nu; ++i)
        for (int j = 1; j < nv; ++j)
            grid.at(i, j).theta = unwrap_next(grid.at(i, j - 1).theta,
                                              grid.at(i, j).theta_raw);
    return grid;
}

ShrinkerReport evaluate_shrinker(const AmbientSpace& space, GeometryGrid& grid,
                                 double alpha) {
    ShrinkerReport rep;
    rep.alpha = alpha;
    Vec xiv = space.xi();
    double acc = 0.0;
    for (const auto& s : grid.samples) {
        double xi_comp = space.metric(s.F, s.H, xiv) + s.theta -
                         alpha * space.metric(s.F, s.F_perp, xiv);
        acc += xi_comp;
    }
    rep.c_star = -acc / (double)grid.samples.size();
    double worst = 0.0, mean = 0.0;
    for (auto& s : grid.samples) {
        Vec r = s.H + (s.theta + rep.c_star) * xiv - alpha * s.F_perp;
        s.shrinker_residual = space.norm(s.F, r);
        worst = std::max(worst, s.shrinker_residual);
        mean += s.shrinker_residual;
    }
    rep.max_residual = worst;
    rep.mean_residual = mean / (double)grid.samples.size();
    rep.max_legendrian = grid.max_legendrian();
    return rep;
}

double angle_gradient_residual(const AmbientSpace& space,
                               const GeometryGrid& grid) {
    const int nu = grid.nu(), nv = grid.nv();
    const int n = (nv > 1) ? 2 : 1;
    double worst = 0.0;
    for (int i = 1; i + 1 < nu; ++i) {
        for (int j = (n == 2 ? 1 : 0); j + (n == 2 ? 1 : 0) < nv; ++j) {
            const auto& s = grid.at(i, j);
            double tu = (grid.at(i + 1, j).theta - grid.at(i - 1, j).theta) /
                        (grid.spec.u[i + 1] - grid.spec.u[i - 1]);
            double tv = 0.0;
            if (n == 2)
                tv = (grid.at(i, j + 1).theta - grid.at(i, j - 1).theta) /
                     (grid.spec.v[j + 1] - grid.spec.v[j - 1]);
            Mat ginv = s.g_ind.inverse();
            Vec grad = Vec::Zero(s.F.size());
            Vec tb(n);
            tb[0] = tu;
            if (n == 2) tb[1] = tv;
            Vec up = ginv * tb;
            grad = up[0] * s.Fu;
            if (n == 2) grad += up[1] * s.Fv;
            Vec r = s.H + space.phi(s.F, grad);
            worst = std::max(worst, space.norm(s.F, r));
        }
    }
    return worst;
}

double theta_laplacian_max(const GeometryGrid& grid) {
    const int nu = grid.nu(), nv = grid.nv();
    const int n = (nv > 1) ? 2 : 1;
    // flux form: Delta theta = (1/sqrt G) [ d_u P + d_v Q ]
    auto flux = [&](int i, int j, double& P, double& Q) {
        const auto& s = grid.at(i, j);
        double tu = (grid.at(i + 1, j).theta - grid.at(i - 1, j).theta) /
                    (grid.spec.u[i + 1] - grid.spec.u[i - 1]);
        double tv = 0.0;
        if (n == 2)
            tv = (grid.at(i, j + 1).theta - grid.at(i, j - 1).theta) /
                 (grid.spec.v[j + 1] - grid.spec.v[j - 1]);
        Mat ginv = s.g_ind.inverse();
        double sg = std::sqrt(s.g_ind.determinant());
        if (n == 2) {
            P = sg * (ginv(0, 0) * tu + ginv(0, 1) * tv);
            Q = sg * (ginv(1, 0) * tu + ginv(1, 1) * tv);
        } else {
            P = sg * ginv(0, 0) * tu;
            Q = 0.0;
        }
    };
    double worst = 0.0;
    int jlo = (n == 2) ? 2 : 0, jhi = (n == 2) ? nv - 2 : 1;
    for (int i = 2; i + 2 < nu; ++i) {
        for (int j = jlo; j < jhi; ++j) {
            double Pp, Pm, Qp, Qm, dummy;
            flux(i + 1, j, Pp, dummy);
            flux(i - 1, j, Pm, dummy);
            double div = (Pp - Pm) / (grid.spec.u[i + 1] - grid.spec.u[i - 1]);
            if (n == 2) {
                flux(i, j + 1, dummy, Qp);
                flux(i, j - 1, dummy, Qm);
                div += (Qp - Qm) / (grid.spec.v[j + 1] - grid.spec.v[j - 1]);
            }
            const auto& s = grid.at(i, j);
            worst = std::max(worst,
                             std::abs(div / std::sqrt(s.g_ind.determinant())));
        }
    }
    return worst;
}

void write_grid_csv(const GeometryGrid& grid, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw std::runtime_error("write_grid_csv: cannot open " + path);
    std::fprintf(f,
                 "u,v,theta,legendrian_residual,shrinker_residual,A_norm_sq,H_norm\n");
    for (const auto& s : grid.samples)
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.u, s.v,
                     s.theta, s.legendrian_residual, s.shrinker_residual,
                     s.A_norm_sq, s.H_norm);
    std::fclose(f);
}

}  // namespace lmcf
