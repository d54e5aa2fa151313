#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmcf/ambient.hpp"

namespace lmcf {

// Parametrized Legendrian candidate: a chart into R^{2n+1}.  Curves (n=1)
// ignore the second parameter.  Analytic partial derivatives are optional;
// when absent, fourth-order central differences with step `fd_step` are used.
struct ImmersionChart {
    int n = 2;
    double u_min = 0.0, u_max = 1.0;
    double v_min = 0.0, v_max = 1.0;
    bool periodic_u = false, periodic_v = false;
    double fd_step = 1e-3;
    std::function<Vec(double, double)> map;
    std::function<Vec(double, double)> du, dv, duu, duv, dvv;  // may be empty
    std::function<bool(double, double)> excluded;               // may be empty

    bool analytic() const { return (bool)du; }
    int dim() const { return 2 * n + 1; }
};

// Returns a copy evaluating all derivatives by finite differences with the
// given step (analytic partials stripped) -- used for convergence studies.
ImmersionChart with_fd_step(const ImmersionChart& chart, double h);

struct Jet {
    Vec F, Fu, Fv, Fuu, Fuv, Fvv;
};

Jet jet(const ImmersionChart& chart, double u, double v);

struct GeometrySample {
    double u = 0.0, v = 0.0;
    Vec F, Fu, Fv;
    std::vector<Vec> e;      // g-orthonormal tangent frame (size n)
    Mat g_ind;               // induced metric in chart coordinates (n x n)
    double theta_raw = 0.0;  // Legendre angle, principal value
    double theta = 0.0;      // unwrapped (filled during grid evaluation)
    Vec H;                   // mean curvature vector
    Vec F_perp;              // normal projection of the position vector
    double A_norm_sq = 0.0;  // |second fundamental form|^2
    double H_norm = 0.0;
    double legendrian_residual = 0.0;   // max_i |eta(F_i)| / |F_i|_g
    double shrinker_residual = 0.0;     // filled during grid evaluation
};

GeometrySample sample_point(const AmbientSpace& space, const ImmersionChart& chart,
                            double u, double v);

struct GridSpec {
    std::vector<double> u, v;
    static GridSpec uniform(const ImmersionChart& chart, int nu, int nv,
                            double margin = 0.05);
};

struct GeometryGrid {
    GridSpec spec;
    std::vector<GeometrySample> samples;  // row-major: index = iu * nv + iv
    int nu() const { return (int)spec.u.size(); }
    int nv() const { return (int)spec.v.size(); }
    GeometrySample& at(int iu, int iv) { return samples[iu * nv() + iv]; }
    const GeometrySample& at(int iu, int iv) const {
        return samples[iu * nv() + iv];
    }
    double max_legendrian() const;
};

// Samples the chart on the grid and unwraps theta continuously: along the
// first grid row in u, then along each column in v.
GeometryGrid sample_grid(const AmbientSpace& space, const ImmersionChart& chart,
                         const GridSpec& spec);

struct ShrinkerReport {
    double alpha = 0.0;
    double c_star = 0.0;  // fitted additive constant on the Legendre angle
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double max_legendrian = 0.0;
};

// Fits the global angle constant by least squares on the xi-component and
// fills per-sample shrinker residuals |H + (theta + c*) xi - alpha F_perp|_g.
ShrinkerReport evaluate_shrinker(const AmbientSpace& space, GeometryGrid& grid,
                                 double alpha);

// max over interior grid points of |H + Phi(grad theta)|_g
double angle_gradient_residual(const AmbientSpace& space, const GeometryGrid& grid);

// max over interior grid points of the discrete Laplace-Beltrami of theta
double theta_laplacian_max(const GeometryGrid& grid);

// CSV: u, v, theta, legendrian_residual, shrinker_residual, A_norm_sq, H_norm
void write_grid_csv(const GeometryGrid& grid, const std::string& path);

}  // namespace lmcf
