#pragma once

#include "lmcf/immersion.hpp"

#include <string>
#include <vector>

namespace lmcf {

// Sampled Lagrangian chart in C^n: transverse coordinates on a parameter
// grid, optionally with analytic first derivatives (kept when the chart was
// projected from a closed-form Legendrian).
struct LagrangianChart {
    int n = 2;
    std::vector<double> u, v;
    std::vector<Vec> points;        // 2n components, row-major iu * nv + iv
    std::vector<Vec> du_grid, dv_grid;  // may be empty
    bool periodic_u = false, periodic_v = false;
    double period_u = 0.0, period_v = 0.0;

    int nu() const { return (int)u.size(); }
    int nv() const { return (int)v.size(); }
    const Vec& at(int i, int j) const { return points[i * nv() + j]; }
};

// Drops the z coordinate of a Legendrian chart.  Rejects charts whose
// Legendrian residual on the grid exceeds `tol`, and charts whose transverse
// symplectic pullback does not vanish.
LagrangianChart project_chart(const AmbientSpace& space,
                              const ImmersionChart& chart, const GridSpec& spec,
                              double tol = 1e-8);

struct LiftResult {
    std::vector<double> z;  // row-major, z = 0 at the basepoint
    double closure_residual = 0.0;   // max cell circulation of the primitive
    double holonomy_u = 0.0, holonomy_v = 0.0;  // defined on periodic axes
    bool has_holonomy_u = false, has_holonomy_v = false;
    bool global_lift = true;  // all holonomies lie in 2 pi Z (tol 1e-6)
    double at(int i, int j, int nv) const { return z[i * nv + j]; }
};

// Integrates dz = (1/2) sum (y_i dx_i - x_i dy_i) by composite trapezoid,
// rows first then columns from the basepoint (i0, j0).
LiftResult lift_chart(const LagrangianChart& f, int i0 = 0, int j0 = 0);

// primitive integral along the grid path (i0,j0) -> (i1,j0) -> (i1,j1)
double path_integral(const LagrangianChart& f, int i0, int j0, int i1, int j1);

// true when the value is NOT a multiple of 2 pi (within tol): two preimages
// of a transverse double point stay distinct in every 2 pi z-quotient.
bool embedding_obstruction_nontrivial(double value, double tol = 1e-6);

// Curve version used by the flow re-lift and for n = 1 charts: xy has one row
// per sample (2n columns), param is the (uniform) parameter grid.
struct CurveLift {
    std::vector<double> z;
    double holonomy = 0.0;  // only meaningful for periodic curves
};
CurveLift lift_curve(const Eigen::MatrixXd& xy, const std::vector<double>& param,
                     bool periodic, double z0 = 0.0);

}  // namespace lmcf
