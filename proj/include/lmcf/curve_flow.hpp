#pragma once

#include "lmcf/ambient.hpp"

#include <string>
#include <vector>

namespace lmcf {

// Uniformly parametrized discrete Legendrian curve in R^3.  For periodic
// curves the transverse trace closes up while z may jump by a fixed holonomy
// per period; neighbor access applies that offset across the seam.
struct DiscreteCurve {
    Eigen::MatrixXd points;  // m x 3
    bool periodic = true;
    double z_offset = 0.0;  // z gain per positive period traversal
    double time = 0.0;

    int size() const { return (int)points.rows(); }
    Vec point(int i) const;  // index wraps, z shifted by the holonomy
};

struct CurveGeometry {
    std::vector<Vec> e;       // unit tangents
    std::vector<Vec> normal;  // Phi e
    std::vector<double> kappa;
    std::vector<double> lambda;  // unwrapped Legendre angle of the tangent
    std::vector<double> legendrian_residual;
    double min_seg_g = 0.0;  // smallest segment length in g
};

CurveGeometry curve_geometry(const AmbientSpace& space, const DiscreteCurve& c);

// One explicit Euler step of gamma_t = kappa N + lambda xi, followed by a
// re-lift of z from the transverse trace (basepoint kept from the Euler
// update).  dt <= 0 picks the stability bound 0.25 * min_seg^2.
DiscreteCurve flow_step(const AmbientSpace& space, const DiscreteCurve& c,
                        double dt = -1.0);

// Transverse shape distance: both traces are centered and scaled to unit RMS
// radius, then the symmetric Hausdorff distance is minimized over rotations
// about the z-axis.  Zero for curves agreeing up to dilation + rotation.
double self_similarity_score(const DiscreteCurve& a, const DiscreteCurve& b);

// closed transverse circle of the helix fixed point (x = sqrt(B), y = 0)
DiscreteCurve helix_circle(double B, int m);

// CSV: time, point index, x, y, z, kappa, lambda (appends one block per call)
void append_flow_csv(const AmbientSpace& space, const DiscreteCurve& c,
                     const std::string& path, bool header);

}  // namespace lmcf
