#pragma once

#include "lmcf/euclidean.hpp"
#include "lmcf/immersion.hpp"
#include "lmcf/integrate.hpp"

namespace lmcf {

// Closed-form shrinker candidates in R^5 (with contraction rate alpha = 8a,
// a < 0).  All charts carry analytic partials.

// cylinder over a transverse circle: (r e^{it}, s, 0, t/(4a) + C1), r = 1/sqrt(-2a)
ImmersionChart model_cylinder(double a, double C1 = 0.0);

// flat torus: (r e^{it}, r e^{is}, (t+s)/(4a) + C2)
ImmersionChart model_torus(double a, double C2 = 0.0);

// sinh-amplitude family, parameters (s, t), as printed in the source
// statement (including the e^{-i sin s} phase).  This chart fails the
// Legendrian closure test; it is surfaced for reporting, not gated.
ImmersionChart model_upsilon(double a, double gamma, double C3 = 0.0);

// trigonometric-amplitude family, parameters (s, t):
//   (1/sqrt(-2a)) (cosh(nu) cos s e^{i t/sinh(nu)},
//                  coth(nu) sin s e^{i sinh(nu) t}),
//   z = cosh(nu)^2 / (4 a sinh(nu)) t + C4.
// The first-slot amplitude printed in the source statement (sinh(nu) sin s)
// does not close the transverse symplectic form; the variant above does, and
// reproduces all the claimed side identities.  See the project notes.
ImmersionChart model_psi(double a, double nu, double C4 = 0.0);

struct CliffordPair {
    ImmersionChart legendrian;  // model_torus at a = -1/8
    EuclideanChart spherical;   // (e^{it}, e^{is}, e^{-i(t+s)}) in S^5(sqrt 3)
};
CliffordPair clifford_pair();

// Planar shrinker curve in R^3: state (x, y, theta) obeying
//   x' = x y,  y' = B - x^2,  theta' = x,
// lifted to gamma(t) = (y cos th + x sin th, y sin th - x cos th, -(B/2) th).
struct ALCurveConfig {
    double B = 1.0;
    double x0 = 1.0, y0 = 0.0, theta0 = 0.0;
    double t_min = 0.0, t_max = 20.0;
    double table_step = 1e-3;
};

class ALCurve {
public:
    explicit ALCurve(const ALCurveConfig& cfg);
    const ALCurveConfig& config() const { return cfg_; }
    // state (x, y, theta) at time t
    Vec state(double t) const;
    // conserved quantity V = B ln x - (x^2 + y^2)/2
    double conserved(double t) const;
    ImmersionChart chart() const;  // n = 1, analytic

private:
    ALCurveConfig cfg_;
    DenseTable table_;
};

}  // namespace lmcf
