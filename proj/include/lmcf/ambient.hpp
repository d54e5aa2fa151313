#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>

namespace lmcf {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using VectorField = std::function<Vec(const Vec&)>;

// Contact Euclidean space R^{2n+1}, coordinates (x_1, y_1, ..., x_n, y_n, z).
//
//   eta = (1/2) dz - (1/4) sum_i (y_i dx_i - x_i dy_i)
//   g   = eta (x) eta + (1/4) sum_i (dx_i^2 + dy_i^2)
//   xi  = 2 d/dz
//
// together with the tensor Phi below make this a Sasakian space form of
// constant Phi-sectional curvature -3.  The adapted orthonormal frame is
//   E_i     = 2 d/dx_i + y_i d/dz        (i = 1..n)
//   E_{n+i} = -2 d/dy_i + x_i d/dz
//   E_{2n+1}= xi
class AmbientSpace {
public:
    explicit AmbientSpace(int n);

    int n() const { return n_; }
    int dim() const { return 2 * n_ + 1; }

    // index helpers into coordinate vectors
    int ix(int i) const { return 2 * i; }
    int iy(int i) const { return 2 * i + 1; }
    int iz() const { return 2 * n_; }

    double eta(const Vec& p, const Vec& v) const;
    double metric(const Vec& p, const Vec& v, const Vec& w) const;
    double norm(const Vec& p, const Vec& v) const;
    Vec phi(const Vec& p, const Vec& v) const;
    Vec xi() const;

    // d(eta) = (1/2) sum dx_i ^ dy_i, evaluated on a pair of tangent vectors
    double d_eta(const Vec& v, const Vec& w) const;

    Mat metric_matrix(const Vec& p) const;
    // derivative of the metric matrix along coordinate direction c (closed form)
    Mat metric_matrix_derivative(const Vec& p, int c) const;

    // columns: E_1 .. E_2n, xi
    Mat frame(const Vec& p) const;
    Vec frame_vector(int k, const Vec& p) const;

    // Christoffel contraction Gamma(a,b)^k at p, from the closed-form metric jet
    Vec christoffel(const Vec& p, const Vec& a, const Vec& b) const;

    // Levi-Civita derivative of a vector field: component derivatives by
    // fourth-order central differences, Christoffels in closed form.
    Vec covariant_derivative(const VectorField& X, const VectorField& Y,
                             const Vec& p, double h = 1e-4) const;
    Vec bracket(const VectorField& X, const VectorField& Y,
                const Vec& p, double h = 1e-4) const;

    // ---- exact frame algebra ------------------------------------------------
    // Coefficient vectors are in the basis (E_1, ..., E_2n, xi).

    // nabla_{E_i} E_j (indices 0..2n, last = xi)
    Vec frame_connection(int i, int j) const;
    // [E_i, E_j]
    Vec frame_bracket(int i, int j) const;
    // nabla_{E_i} E_j evaluated from the coordinate expression of the frame
    // fields (analytic Jacobian) -- used to cross-check frame_connection.
    Vec frame_connection_coordinate(int i, int j, const Vec& p) const;

    // R(X,Y)Z for constant frame coefficient vectors, result in frame coeffs.
    // Convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
    Vec frame_curvature(const Vec& a, const Vec& b, const Vec& c) const;

    // Sectional curvature of the plane spanned by X and Phi(X); X must be
    // transverse (g(X,xi)=0) and nonzero.  Constant -3 for this space.
    double phi_sectional_curvature(const Vec& p, const Vec& X) const;

    // Max-norm residuals of the four Sasakian structure identities at p:
    //   [0] Phi^2 + I - xi (x) eta
    //   [1] (1/2) d(eta)(.,.) - g(., Phi .)
    //   [2] g(.,.) - g(Phi., Phi.) - eta (x) eta
    //   [3] N_Phi + d(eta) (x) xi
    std::array<double, 4> sasakian_residuals(const Vec& p) const;

    // Max-norm residual of Ric - (-2 g + (2n+2) eta (x) eta) on the frame.
    double ricci_residual(const Vec& p) const;

private:
    int n_;
    // row-vector of eta components at p
    Vec eta_components(const Vec& p) const;
};

}  // namespace lmcf
