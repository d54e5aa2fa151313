#pragma once

#include <Eigen/Dense>
#include <functional>

namespace lmcf {

// Surface chart into flat R^m with metric c * delta (constant conformal
// scale).  Analytic partials are required; these charts are only built from
// closed forms.
struct EuclideanChart {
    int ambient_dim = 4;
    double metric_scale = 1.0;
    std::function<Eigen::VectorXd(double, double)> map, du, dv, duu, duv, dvv;
};

Eigen::Matrix2d induced_metric(const EuclideanChart& chart, double u, double v);

// squared norm of the second fundamental form, norms taken in c * delta
double a_norm_sq(const EuclideanChart& chart, double u, double v);

Eigen::VectorXd mean_curvature(const EuclideanChart& chart, double u, double v);

// intrinsic Gauss curvature via the Brioschi formula; metric derivatives by
// central differences with step h
double gauss_curvature(const EuclideanChart& chart, double u, double v,
                       double h = 1e-4);

// Laplace-Beltrami of the position vector (tension field), intrinsic
// Christoffels by central differences of the induced metric
Eigen::VectorXd laplace_position(const EuclideanChart& chart, double u, double v,
                                 double h = 1e-4);

}  // namespace lmcf
