#include "lmcf/euclidean.hpp"

#include <cmath>

namespace lmcf {

using Eigen::Matrix2d;
using Eigen::VectorXd;

Matrix2d induced_metric(const EuclideanChart& c, double u, double v) {
    VectorXd Fu = c.du(u, v), Fv = c.dv(u, v);
    Matrix2d g;
    g(0, 0) = Fu.dot(Fu);
    g(0, 1) = g(1, 0) = Fu.dot(Fv);
    g(1, 1) = Fv.dot(Fv);
    return c.metric_scale * g;
}

namespace {

// normal part (w.r.t. Euclidean dot; the conformal scale drops out)
VectorXd normal_part(const EuclideanChart& c, double u, double v, VectorXd w) {
    VectorXd Fu = c.du(u, v), Fv = c.dv(u, v);
    Eigen::MatrixXd T(Fu.size(), 2);
    T.col(0) = Fu;
    T.col(1) = Fv;
    Eigen::Vector2d rhs = T.transpose() * w;
    Eigen::Vector2d sol = (T.transpose() * T).ldlt().solve(rhs);
    return w - T * sol;
}

}  // namespace

double a_norm_sq(const EuclideanChart& c, double u, double v) {
    Matrix2d g = induced_metric(c, u, v);
    Matrix2d ginv = g.inverse();
    VectorXd A[2][2];
    A[0][0] = normal_part(c, u, v, c.duu(u, v));
    A[0][1] = A[1][0] = normal_part(c, u, v, c.duv(u, v));
    A[1][1] = normal_part(c, u, v, c.dvv(u, v));
    // |A|^2 = g^{ac} g^{bd} <A_ab, A_cd>, inner products in c * delta
    double s = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int e = 0; e < 2; ++e)
                for (int f = 0; f < 2; ++f)
                    s += ginv(a, e) * ginv(b, f) * c.metric_scale *
                         A[a][b].dot(A[e][f]);
    return s;
}

VectorXd mean_curvature(const EuclideanChart& c, double u, double v) {
    Matrix2d ginv = induced_metric(c, u, v).inverse();
    VectorXd H = ginv(0, 0) * normal_part(c, u, v, c.duu(u, v)) +
                 2.0 * ginv(0, 1) * normal_part(c, u, v, c.duv(u, v)) +
                 ginv(1, 1) * normal_part(c, u, v, c.dvv(u, v));
    return H;
}

double gauss_curvature(const EuclideanChart& c, double u, double v, double h) {
    auto E = [&](double a, double b) { return induced_metric(c, a, b)(0, 0); };
    auto F = [&](double a, double b) { return induced_metric(c, a, b)(0, 1); };
    auto G = [&](double a, double b) { return induced_metric(c, a, b)(1, 1); };
    auto du = [&](auto f) { return (f(u + h, v) - f(u - h, v)) / (2 * h); };
    auto dv = [&](auto f) { return (f(u, v + h) - f(u, v - h)) / (2 * h); };
    double Ev = dv(E), Eu = du(E), Gu = du(G), Gv = dv(G), Fu = du(F), Fv = dv(F);
    double Evv = (E(u, v + h) - 2 * E(u, v) + E(u, v - h)) / (h * h);
    double Guu = (G(u + h, v) - 2 * G(u, v) + G(u - h, v)) / (h * h);
    double Fuv = (F(u + h, v + h) - F(u + h, v - h) - F(u - h, v + h) +
                  F(u - h, v - h)) /
                 (4 * h * h);
    double e = E(u, v), f = F(u, v), g = G(u, v);
    Eigen::Matrix3d M1, M2;
    M1 << -0.5 * Evv + Fuv - 0.5 * Guu, 0.5 * Eu, Fu - 0.5 * Ev,
          Fv - 0.5 * Gu, e, f,
          0.5 * Gv, f, g;
    M2 << 0.0, 0.5 * Ev, 0.5 * Gu,
          0.5 * Ev, e, f,
          0.5 * Gu, f, g;
    double det = e * g - f * f;
    return (M1.determinant() - M2.determinant()) / (det * det);
}

VectorXd laplace_position(const EuclideanChart& c, double u, double v, double h) {
    Matrix2d g = induced_metric(c, u, v);
    Matrix2d ginv = g.inverse();
    // intrinsic Christoffels from central differences of the induced metric
    Matrix2d dg[2];
    dg[0] = (induced_metric(c, u + h, v) - induced_metric(c, u - h, v)) / (2 * h);
    dg[1] = (induced_metric(c, u, v + h) - induced_metric(c, u, v - h)) / (2 * h);
    double Gamma[2][2][2];
    for (int k = 0; k < 2; ++k)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                double s = 0.0;
                for (int l = 0; l < 2; ++l)
                    s += ginv(k, l) *
                         (dg[a](b, l) + dg[b](a, l) - dg[l](a, b));
                Gamma[k][a][b] = 0.5 * s;
            }
    VectorXd Fd[2] = {c.du(u, v), c.dv(u, v)};
    VectorXd Fdd[2][2] = {{c.duu(u, v), c.duv(u, v)},
                          {c.duv(u, v), c.dvv(u, v)}};
    VectorXd out = VectorXd::Zero(Fd[0].size());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            VectorXd t = Fdd[a][b];
            for (int k = 0; k < 2; ++k) t -= Gamma[k][a][b] * Fd[k];
            out += ginv(a, b) * t;
        }
    return out;
}

}  // namespace lmcf
