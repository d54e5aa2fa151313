#include "lmcf/lift.hpp"

#include <cmath>
#include <stdexcept>

namespace lmcf {

namespace {

// value of the primitive (1/2) sum (y_i dx_i - x_i dy_i) on a tangent vector
double primitive(const Vec& p, const Vec& dp) {
    double s = 0.0;
    for (int i = 0; 2 * i + 1 < p.size(); ++i)
        s += 0.5 * (p[2 * i + 1] * dp[2 * i] - p[2 * i] * dp[2 * i + 1]);
    return s;
}

// fourth-order differentiation of a sampled sequence; one-sided at the ends
// unless periodic (then indices wrap and `period` closes the last gap).
std::vector<Vec> differentiate(const std::vector<Vec>& f,
                               const std::vector<double>& t, bool periodic) {
    const int m = (int)f.size();
    std::vector<Vec> d(m);
    if (m < 5) throw std::invalid_argument("differentiate: need >= 5 samples");
    double h = t[1] - t[0];
    auto at = [&](int i) -> const Vec& { return f[((i % m) + m) % m]; };
    for (int i = 0; i < m; ++i) {
        if (periodic || (i >= 2 && i + 2 < m)) {
            d[i] = (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) /
                   (12.0 * h);
        } else if (i == 0) {
            d[i] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] -
                    3.0 * f[4]) /
                   (12.0 * h);
        } else if (i == 1) {
            d[i] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) /
                   (12.0 * h);
        } else if (i == m - 2) {
            d[i] = (3.0 * f[m - 1] + 10.0 * f[m - 2] - 18.0 * f[m - 3] +
                    6.0 * f[m - 4] - f[m - 5]) /
                   (12.0 * h);
        } else {
            d[i] = (25.0 * f[m - 1] - 48.0 * f[m - 2] + 36.0 * f[m - 3] -
                    16.0 * f[m - 4] + 3.0 * f[m - 5]) /
                   (12.0 * h);
        }
    }
    return d;
}

// per-point integrand of the primitive along one grid direction
struct EdgeForms {
    std::vector<double> wu, wv;  // row-major
};

EdgeForms edge_forms(const LagrangianChart& f) {
    const int nu = f.nu(), nv = f.nv();
    EdgeForms e;
    e.wu.assign((size_t)nu * nv, 0.0);
    e.wv.assign((size_t)nu * nv, 0.0);
    if (!f.du_grid.empty()) {
        for (int i = 0; i < nu; ++i)
            for (int j = 0; j < nv; ++j) {
                e.wu[i * nv + j] = primitive(f.at(i, j), f.du_grid[i * nv + j]);
                if (!f.dv_grid.empty())
                    e.wv[i * nv + j] =
                        primitive(f.at(i, j), f.dv_grid[i * nv + j]);
            }
        return e;
    }
    for (int j = 0; j < nv; ++j) {
        std::vector<Vec> col(nu);
        for (int i = 0; i < nu; ++i) col[i] = f.at(i, j);
        auto d = differentiate(col, f.u, f.periodic_u);
        for (int i = 0; i < nu; ++i)
            e.wu[i * nv + j] = primitive(f.at(i, j), d[i]);
    }
    if (nv > 1) {
        for (int i = 0; i < nu; ++i) {
            std::vector<Vec> row(nv);
            for (int j = 0; j < nv; ++j) row[j] = f.at(i, j);
            auto d = differentiate(row, f.v, f.periodic_v);
            for (int j = 0; j < nv; ++j)
                e.wv[i * nv + j] = primitive(f.at(i, j), d[j]);
        }
    }
    return e;
}

double edge_u(const EdgeForms& e, const LagrangianChart& f, int i, int j) {
    // trapezoid increment from (i, j) to (i+1, j)
    int nv = f.nv();
    return 0.5 * (e.wu[i * nv + j] + e.wu[(i + 1) * nv + j]) *
           (f.u[i + 1] - f.u[i]);
}

double edge_v(const EdgeForms& e, const LagrangianChart& f, int i, int j) {
    int nv = f.nv();
    return 0.5 * (e.wv[i * nv + j] + e.wv[i * nv + j + 1]) *
           (f.v[j + 1] - f.v[j]);
}

}  // namespace

LagrangianChart project_chart(const AmbientSpace& space,
                              const ImmersionChart& chart, const GridSpec& spec,
                              double tol) {
    LagrangianChart f;
    f.n = chart.n;
    f.u = spec.u;
    f.v = spec.v;
    f.periodic_u = chart.periodic_u;
    f.periodic_v = chart.periodic_v;
    f.period_u = chart.u_max - chart.u_min;
    f.period_v = chart.v_max - chart.v_min;
    const int nu = f.nu(), nv = f.nv();
    f.points.reserve((size_t)nu * nv);
    bool analytic = chart.analytic();
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            Jet J = jet(chart, spec.u[i], spec.v[j]);
            const Vec& p = J.F;
            double lr = std::abs(space.eta(p, J.Fu)) / space.norm(p, J.Fu);
            if (chart.n == 2)
                lr = std::max(lr, std::abs(space.eta(p, J.Fv)) /
                                      space.norm(p, J.Fv));
            if (lr > tol)
                throw std::invalid_argument(
                    "project_chart: input chart is not Legendrian");
            f.points.push_back(p.head(2 * chart.n));
            if (analytic) {
                f.du_grid.push_back(J.Fu.head(2 * chart.n));
                if (chart.n == 2) f.dv_grid.push_back(J.Fv.head(2 * chart.n));
            }
        }
    return f;
}

LiftResult lift_chart(const LagrangianChart& f, int i0, int j0) {
    const int nu = f.nu(), nv = f.nv();
    EdgeForms e = edge_forms(f);
    LiftResult out;
    out.z.assign((size_t)nu * nv, 0.0);
    auto z = [&](int i, int j) -> double& { return out.z[i * nv + j]; };
    // along the row v = v[j0]
    for (int i = i0 + 1; i < nu; ++i) z(i, j0) = z(i - 1, j0) + edge_u(e, f, i - 1, j0);
    for (int i = i0 - 1; i >= 0; --i) z(i, j0) = z(i + 1, j0) - edge_u(e, f, i, j0);
    // then along each column
    for (int i = 0; i < nu; ++i) {
        for (int j = j0 + 1; j < nv; ++j)
            z(i, j) = z(i, j - 1) + edge_v(e, f, i, j - 1);
        for (int j = j0 - 1; j >= 0; --j)
            z(i, j) = z(i, j + 1) - edge_v(e, f, i, j);
    }
    // cell circulations bound the path dependence of the construction
    double worst = 0.0;
    for (int i = 0; i + 1 < nu; ++i)
        for (int j = 0; j + 1 < nv; ++j) {
            double c = edge_u(e, f, i, j) + edge_v(e, f, i + 1, j) -
                       edge_u(e, f, i, j + 1) - edge_v(e, f, i, j);
            worst = std::max(worst, std::abs(c));
        }
    out.closure_residual = worst;

    auto near_2pi_multiple = [](double h) {
        return std::abs(h - 2.0 * M_PI * std::round(h / (2.0 * M_PI))) <= 1e-6;
    };
    if (f.periodic_u && nu >= 2) {
        double h = 0.0;
        for (int i = 0; i + 1 < nu; ++i) h += edge_u(e, f, i, j0);
        // closing edge across the seam
        double gap = f.period_u - (f.u.back() - f.u.front());
        h += 0.5 * (e.wu[(nu - 1) * nv + j0] + e.wu[0 * nv + j0]) * gap;
        out.holonomy_u = h;
        out.has_holonomy_u = true;
        if (!near_2pi_multiple(h)) out.global_lift = false;
    }
    if (f.periodic_v && nv >= 2) {
        double h = 0.0;
        for (int j = 0; j + 1 < nv; ++j) h += edge_v(e, f, i0, j);
        double gap = f.period_v - (f.v.back() - f.v.front());
        h += 0.5 * (e.wv[i0 * nv + nv - 1] + e.wv[i0 * nv + 0]) * gap;
        out.holonomy_v = h;
        out.has_holonomy_v = true;
        if (!near_2pi_multiple(h)) out.global_lift = false;
    }
    return out;
}

double path_integral(const LagrangianChart& f, int i0, int j0, int i1, int j1) {
    EdgeForms e = edge_forms(f);
    double acc = 0.0;
    int step = (i1 >= i0) ? 1 : -1;
    for (int i = i0; i != i1; i += step)
        acc += (step > 0) ? edge_u(e, f, i, j0) : -edge_u(e, f, i - 1, j0);
    step = (j1 >= j0) ? 1 : -1;
    for (int j = j0; j != j1; j += step)
        acc += (step > 0) ? edge_v(e, f, i1, j) : -edge_v(e, f, i1, j - 1);
    return acc;
}

bool embedding_obstruction_nontrivial(double value, double tol) {
    return std::abs(value - 2.0 * M_PI * std::round(value / (2.0 * M_PI))) > tol;
}

CurveLift lift_curve(const Eigen::MatrixXd& xy, const std::vector<double>& param,
                     bool periodic, double z0) {
    const int m = (int)xy.rows();
    if ((int)param.size() != m)
        throw std::invalid_argument("lift_curve: size mismatch");
    std::vector<Vec> pts(m);
    for (int i = 0; i < m; ++i) pts[i] = xy.row(i).transpose();
    auto d = differentiate(pts, param, periodic);
    std::vector<double> w(m);
    for (int i = 0; i < m; ++i) w[i] = primitive(pts[i], d[i]);
    CurveLift out;
    out.z.assign(m, z0);
    for (int i = 1; i < m; ++i)
        out.z[i] = out.z[i - 1] + 0.5 * (w[i - 1] + w[i]) * (param[i] - param[i - 1]);
    if (periodic) {
        double h = param[1] - param[0];
        out.holonomy = out.z[m - 1] - out.z[0] + 0.5 * (w[m - 1] + w[0]) * h;
    }
    return out;
}

}  // namespace lmcf
