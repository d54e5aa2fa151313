#pragma once

#include "lmcf/immersion.hpp"
#include "lmcf/integrate.hpp"

#include <string>
#include <vector>

namespace lmcf {

// Reduced shrinker system.  State order: (u, phi1, phi2, theta, z), with
// r_j^2 = alpha_j + lambda_j u and Q(u) = r_1^2 r_2^2:
//   u'     =  2 sqrt(Q) cos(phi - theta)
//   phi_j' = -(lambda_j / r_j^2) sqrt(Q) sin(phi - theta)
//   z'     =  (C/2) sqrt(Q) sin(phi - theta)
//   theta' =  (alpha C / 4) sqrt(Q) sin(phi - theta)
// where phi = phi1 + phi2.  The quantity
//   A = sqrt(Q) exp(alpha C u / 8) sin(phi - theta)
// is a first integral.  (The exponent sign is forced by d/ds A = 0 with the
// rates above; for alpha < 0 it also bounds u along any A != 0 trajectory,
// since |sin(phi - theta)| <= 1.)
struct FamilyConfig {
    double lambda1 = 1.0, lambda2 = 1.0;
    double C = 1.0;
    double alpha = -1.0;
    double alpha1 = 1.0, alpha2 = 1.0;  // r_j^2 offsets at u = 0
    double phi1_0 = 0.0, phi2_0 = 0.0, theta0 = 0.0;
    double u0 = 0.0;
    // z0 defaults to 2 theta0 / alpha so that theta = alpha z / 2 holds exactly
    bool z0_default = true;
    double z0 = 0.0;
    double s0 = 0.0, s1 = 5.0;
    double tol = 1e-10;
    double h0 = 1e-2, h_floor = 1e-6;

    // sign pattern: case (i) lambda1, lambda2, C > 0;
    //               case (ii) lambda1 > 0 > lambda2, C > 0
    int surface_case() const;
    double z_initial() const { return z0_default ? 2.0 * theta0 / alpha : z0; }
    Vec initial_state() const;
};

Vec family_rhs(const FamilyConfig& cfg, const Vec& y);
double first_integral(const FamilyConfig& cfg, const Vec& y);
bool family_state_valid(const FamilyConfig& cfg, const Vec& y);

struct ODETrajectory {
    FamilyConfig config;
    std::vector<double> s;
    std::vector<Vec> states;  // (u, phi1, phi2, theta, z)
    std::vector<double> A;    // first integral along the samples
    bool domain_exit = false;
    double s_end = 0.0;
    // max |A(s) - A(s0)| / max(1, sup |A|): the invariant reaches exponential
    // magnitudes on trajectories with growing u, so drift is scale-relative
    double drift() const;
};

ODETrajectory integrate_family(const FamilyConfig& cfg);
ODETrajectory integrate_family_fixed(const FamilyConfig& cfg, int n_steps);

// CSV: s, u, phi1, phi2, theta_tilde, z, A
void write_trajectory_csv(const ODETrajectory& traj, const std::string& path);

// Doubly ruled chart over (t, s): transverse profile times the integrated
// radii/phases.  Case (i) uses (x1, x2) = (sqrt(C/l1) cos t, sqrt(C/l2) sin t),
// case (ii) (sqrt(C/l1) sec t, sqrt(-C/l2) tan t).  Analytic partials come
// from the chain rule through the right-hand side.
ImmersionChart assemble_surface(const ODETrajectory& traj);

}  // namespace lmcf
